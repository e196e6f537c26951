#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kgh/coloring_solver.hpp"
#include "kgh/errors.hpp"
#include "kgh/guards.hpp"
#include "kgh/hypergraph.hpp"

namespace kgh {

/// An r-tuple (N_1, ..., N_r) of vertex subsets. Parts are kept sorted by
/// (size desc, lexicographic).
struct DisjointFamily {
    std::vector<VertexSet> parts;
    bool s_disjoint = false;
    bool equitable = false;

    int score() const {
        int total = 0;
        for (VertexSet p : parts)
            total += p.size();
        return total;
    }
};

/// Each vertex v lies in at most s_v parts (repeated parts counted separately).
inline bool family_is_s_disjoint(const std::vector<VertexSet>& parts, const SVector& s) {
    for (int v = 1; v <= static_cast<int>(s.size()); ++v) {
        int count = 0;
        for (VertexSet p : parts)
            count += p.contains(v) ? 1 : 0;
        if (count > s.at(v))
            return false;
    }
    return true;
}

inline bool family_is_equitable(const std::vector<VertexSet>& parts) {
    if (parts.empty())
        return true;
    auto [lo, hi] = std::minmax_element(parts.begin(), parts.end(),
                                        [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
    return hi->size() - lo->size() <= 1;
}

inline DisjointFamily make_family(std::vector<VertexSet> parts, const SVector& s) {
    std::sort(parts.begin(), parts.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return canonical_less(a, b);
    });
    DisjointFamily f;
    f.s_disjoint = family_is_s_disjoint(parts, s);
    f.equitable = family_is_equitable(parts);
    f.parts = std::move(parts);
    return f;
}

enum class DefectMethod { family, removal };

inline const char* to_string(DefectMethod m) {
    return m == DefectMethod::family ? "family" : "removal";
}

struct DefectReport {
    int value = 0;
    DisjointFamily witness;
    DefectMethod method = DefectMethod::family;
    int r = 2;
    SVector s;
    bool equitable = false;
    std::uint64_t nodes = 0;
};

namespace detail {

/// All independent sets of a hypergraph grouped by size, canonical order within a size.
class IndependentSets {
public:
    IndependentSets(const Hypergraph& h, std::size_t limit) : n_(h.n()) {
        closing_.resize(static_cast<std::size_t>(n_) + 1);
        for (VertexSet e : h.minimal_edges())
            closing_[static_cast<std::size_t>(e.max())].push_back(e);
        by_size_.resize(static_cast<std::size_t>(n_) + 1);
        by_size_[0].push_back(VertexSet());
        count_ = 1;
        limit_ = limit;
        grow(VertexSet(), 1);
        for (auto& list : by_size_)
            std::sort(list.begin(), list.end(), canonical_less);
        while (max_size_ > 0 && by_size_[static_cast<std::size_t>(max_size_)].empty())
            --max_size_;
        for (VertexSet e : h.minimal_edges())
            if (e.size() == 1)
                loops_ |= e;
    }

    const std::vector<VertexSet>& of_size(int k) const { return by_size_[static_cast<std::size_t>(k)]; }
    int max_size() const { return max_size_; }
    /// Vertices that lie in no independent set (singleton edges).
    VertexSet loops() const { return loops_; }

private:
    void grow(VertexSet current, int start) {
        for (int v = start; v <= n_; ++v) {
            VertexSet next = current;
            next.insert(v);
            bool ok = true;
            for (VertexSet e : closing_[static_cast<std::size_t>(v)])
                if (e.subset_of(next)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            if (++count_ > limit_)
                throw ResourceError("independent set count exceeds guard of " + std::to_string(limit_));
            by_size_[static_cast<std::size_t>(next.size())].push_back(next);
            max_size_ = std::max(max_size_, next.size());
            grow(next, v + 1);
        }
    }

    int n_;
    std::vector<std::vector<VertexSet>> closing_;
    std::vector<std::vector<VertexSet>> by_size_;
    std::size_t count_ = 0;
    std::size_t limit_ = 0;
    int max_size_ = 0;
    VertexSet loops_;
};

/// Packs r independent sets under per-vertex multiplicity caps.
///
/// Parts are chosen in nonincreasing size; parts of equal size use
/// nondecreasing indices into the independent-set list (the family is a
/// multiset). Parts of size one are settled in closed form: any vertex with
/// spare capacity is a singleton independent set.
class FamilyPacker {
public:
    FamilyPacker(const Hypergraph& h, int r, const SVector& s, const Guards& guards)
        : sets_(h, guards.max_independent_sets), r_(r), n_(h.n()), s_(s),
          budget_(guards.node_budget), count_(static_cast<std::size_t>(h.n()) + 1, 0) {
        for (int v = 1; v <= n_; ++v) {
            if (sets_.loops().contains(v))
                saturated_.insert(v);
            else
                capacity_ += s.at(v);
        }
    }

    const IndependentSets& sets() const { return sets_; }
    int capacity() const { return capacity_; }
    std::uint64_t nodes() const { return nodes_; }

    /// Largest total reachable with an equitable family, with witness.
    std::vector<VertexSet> best_equitable() {
        int lo = 0;
        int hi = std::min(capacity_, r_ * sets_.max_size());
        std::vector<VertexSet> best(static_cast<std::size_t>(r_), VertexSet());
        while (lo < hi) {
            const int mid = lo + (hi - lo + 1) / 2;
            if (feasible_equitable(mid)) {
                lo = mid;
                best = found_;
            } else {
                hi = mid - 1;
            }
        }
        return best;
    }

    /// Largest total over all families, with witness.
    std::vector<VertexSet> best_any() {
        best_total_ = -1;
        upper_ = std::min(capacity_, r_ * sets_.max_size());
        stack_.clear();
        maximize(0, sets_.max_size(), 0, 0);
        return best_parts_;
    }

private:
    void tick() {
        if (++nodes_ > budget_)
            throw ResourceError("node budget of " + std::to_string(budget_) +
                                " exhausted in defect search");
    }

    bool fits(VertexSet p) const { return !p.intersects(saturated_); }

    void push(VertexSet p) {
        for (int v : p) {
            auto& c = count_[static_cast<std::size_t>(v)];
            if (++c == s_.at(v))
                saturated_.insert(v);
        }
        capacity_ -= p.size();
        stack_.push_back(p);
    }

    void pop() {
        VertexSet p = stack_.back();
        stack_.pop_back();
        for (int v : p) {
            auto& c = count_[static_cast<std::size_t>(v)];
            if (c-- == s_.at(v))
                saturated_.erase(v);
        }
        capacity_ += p.size();
    }

    /// `parts` singletons drawn from spare capacity, smallest vertices first.
    std::vector<VertexSet> singleton_fill(int parts) const {
        std::vector<VertexSet> out;
        for (int v = 1; v <= n_ && static_cast<int>(out.size()) < parts; ++v) {
            if (sets_.loops().contains(v))
                continue;
            int spare = s_.at(v) - count_[static_cast<std::size_t>(v)];
            while (spare-- > 0 && static_cast<int>(out.size()) < parts)
                out.push_back(VertexSet{v});
        }
        return out;
    }

    bool feasible_equitable(int total) {
        const int q = total / r_;
        const int rem = total % r_;
        sizes_.assign(static_cast<std::size_t>(r_), q);
        for (int j = 0; j < rem; ++j)
            sizes_[static_cast<std::size_t>(j)] = q + 1;
        if (sizes_.front() > sets_.max_size())
            return false;
        stack_.clear();
        return place(0, 0);
    }

    bool place(int j, int start) {
        tick();
        if (j == r_ || sizes_[static_cast<std::size_t>(j)] == 0) {
            found_ = stack_;
            found_.resize(static_cast<std::size_t>(r_), VertexSet());
            return true;
        }
        int needed = 0;
        for (int l = j; l < r_; ++l)
            needed += sizes_[static_cast<std::size_t>(l)];
        if (needed > capacity_)
            return false;
        const int size = sizes_[static_cast<std::size_t>(j)];
        if (size == 1) {
            found_ = stack_;
            auto fill = singleton_fill(needed);
            found_.insert(found_.end(), fill.begin(), fill.end());
            found_.resize(static_cast<std::size_t>(r_), VertexSet());
            return true;
        }
        const auto& list = sets_.of_size(size);
        const bool same = j > 0 && sizes_[static_cast<std::size_t>(j - 1)] == size;
        for (std::size_t i = same ? static_cast<std::size_t>(start) : 0; i < list.size(); ++i) {
            if (!fits(list[i]))
                continue;
            push(list[i]);
            const bool ok = place(j + 1, static_cast<int>(i));
            pop();
            if (ok)
                return true;
        }
        return false;
    }

    void record(int total, std::vector<VertexSet> parts) {
        if (total <= best_total_)
            return;
        best_total_ = total;
        parts.resize(static_cast<std::size_t>(r_), VertexSet());
        best_parts_ = std::move(parts);
    }

    void maximize(int j, int max_size, int start, int total) {
        tick();
        record(total, stack_);
        if (j == r_ || best_total_ >= upper_)
            return;
        for (int size = std::min(max_size, sets_.max_size()); size >= 1; --size) {
            const int reach = total + std::min((r_ - j) * size, capacity_);
            if (reach <= best_total_)
                return;
            if (size == 1) {
                auto fill = singleton_fill(r_ - j);
                auto parts = stack_;
                parts.insert(parts.end(), fill.begin(), fill.end());
                record(total + static_cast<int>(fill.size()), std::move(parts));
                return;
            }
            const auto& list = sets_.of_size(size);
            for (std::size_t i = size == max_size ? static_cast<std::size_t>(start) : 0;
                 i < list.size(); ++i) {
                if (!fits(list[i]))
                    continue;
                push(list[i]);
                maximize(j + 1, size, static_cast<int>(i), total + size);
                pop();
                if (best_total_ >= upper_)
                    return;
            }
        }
    }

    IndependentSets sets_;
    int r_;
    int n_;
    const SVector& s_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> count_;
    VertexSet saturated_;
    int capacity_ = 0;
    std::vector<VertexSet> stack_;
    std::vector<int> sizes_;
    std::vector<VertexSet> found_;
    int best_total_ = -1;
    int upper_ = 0;
    std::vector<VertexSet> best_parts_;
};

inline void check_defect_args(const Hypergraph& h, int r, const SVector& s, const Guards& guards) {
    if (r < 2)
        throw InputError("r must be at least 2");
    check_dimension(h, s);
    if (h.n() > guards.max_n)
        throw ResourceError("n=" + std::to_string(h.n()) + " exceeds defect guard of " +
                            std::to_string(guards.max_n));
}

inline DefectReport defect(const Hypergraph& h, int r, const SVector& s, bool equitable,
                           const Guards& guards) {
    check_defect_args(h, r, s, guards);
    FamilyPacker packer(h, r, s, guards);
    auto parts = equitable ? packer.best_equitable() : packer.best_any();
    DefectReport rep;
    rep.witness = make_family(std::move(parts), s);
    rep.value = s.total() - rep.witness.score();
    rep.method = DefectMethod::family;
    rep.r = r;
    rep.s = s;
    rep.equitable = equitable;
    rep.nodes = packer.nodes();
    return rep;
}

} // namespace detail

/// cd^r_s(H) = n-bar minus the largest total size of an s-disjoint family of
/// r independent sets.
inline DefectReport cd(const Hypergraph& h, int r, const SVector& s, const Guards& guards = {}) {
    return detail::defect(h, r, s, false, guards);
}

/// ecd^r_s(H): as cd, restricted to equitable families.
inline DefectReport ecd(const Hypergraph& h, int r, const SVector& s, const Guards& guards = {}) {
    return detail::defect(h, r, s, true, guards);
}

inline DefectReport cd(const Hypergraph& h, int r, const Guards& guards = {}) {
    return cd(h, r, SVector::ones(h.n()), guards);
}
inline DefectReport ecd(const Hypergraph& h, int r, const Guards& guards = {}) {
    return ecd(h, r, SVector::ones(h.n()), guards);
}

namespace detail {

inline void check_removal_args(const Hypergraph& h, int r, const Guards& guards) {
    if (r < 2)
        throw InputError("r must be at least 2");
    if (h.n() > guards.max_removal_n)
        throw ResourceError("n=" + std::to_string(h.n()) + " exceeds removal-oracle guard of " +
                            std::to_string(guards.max_removal_n));
}

/// Does H[keep] admit an equitable r-coloring (classes may be empty)?
class EquitableColoringSearch {
public:
    EquitableColoringSearch(const Hypergraph& h, VertexSet keep, int r)
        : r_(r), order_(keep.to_vector()), classes_(static_cast<std::size_t>(r)),
          sizes_(static_cast<std::size_t>(r), 0) {
        const int m = keep.size();
        q_ = m / r;
        rem_ = m % r;
        closing_.resize(static_cast<std::size_t>(h.n()) + 1);
        for (VertexSet e : h.minimal_edges())
            if (e.subset_of(keep))
                closing_[static_cast<std::size_t>(e.max())].push_back(e);
    }

    bool run() { return assign(0, 0, 0); }

private:
    bool assign(std::size_t i, int used, int big) {
        if (i == order_.size())
            return true;
        const int v = order_[i];
        for (int c = 0; c < std::min(used + 1, r_); ++c) {
            const auto uc = static_cast<std::size_t>(c);
            const int size = sizes_[uc];
            if (size > q_ || (size == q_ && big == rem_))
                continue;
            VertexSet next = classes_[uc];
            next.insert(v);
            bool ok = true;
            for (VertexSet e : closing_[static_cast<std::size_t>(v)])
                if (e.subset_of(next)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            VertexSet saved = classes_[uc];
            classes_[uc] = next;
            ++sizes_[uc];
            const bool done = assign(i + 1, std::max(used, c + 1), big + (size == q_ ? 1 : 0));
            --sizes_[uc];
            classes_[uc] = saved;
            if (done)
                return true;
        }
        return false;
    }

    int r_;
    int q_ = 0;
    int rem_ = 0;
    std::vector<int> order_;
    std::vector<VertexSet> classes_;
    std::vector<int> sizes_;
    std::vector<std::vector<VertexSet>> closing_;
};

template <typename Colorable>
int smallest_removal(const Hypergraph& h, Colorable&& colorable) {
    const VertexSet all = h.vertices();
    for (int d = 0; d <= h.n(); ++d) {
        bool hit = false;
        for_each_k_subset(all, d, [&](VertexSet removed) {
            if (!hit && colorable(all - removed))
                hit = true;
        });
        if (hit)
            return d;
    }
    return h.n();
}

} // namespace detail

/// Fewest vertices whose removal leaves a properly r-colorable hypergraph.
/// Brute force over removal sets; independent of the family-based search.
inline int cd_removal_oracle(const Hypergraph& h, int r, const Guards& guards = {}) {
    detail::check_removal_args(h, r, guards);
    return detail::smallest_removal(h, [&](VertexSet keep) {
        auto sub = induced(h, keep).graph;
        auto inst = ColoringInstance::from(sub);
        if (inst.has_singleton_edge())
            return false;
        return find_k_coloring(inst, r, guards.node_budget).has_value();
    });
}

/// Fewest vertices whose removal leaves a hypergraph with an equitable r-coloring.
inline int ecd_removal_oracle(const Hypergraph& h, int r, const Guards& guards = {}) {
    detail::check_removal_args(h, r, guards);
    return detail::smallest_removal(h, [&](VertexSet keep) {
        return detail::EquitableColoringSearch(h, keep, r).run();
    });
}

/// Largest prime factor of r.
inline int mu(int r) {
    if (r < 2)
        throw InputError("mu(r) needs r >= 2");
    int largest = 1;
    for (int p = 2; static_cast<long long>(p) * p <= r; ++p)
        while (r % p == 0) {
            largest = p;
            r /= p;
        }
    return r > 1 ? std::max(largest, r) : largest;
}

inline bool is_prime(int p) { return p >= 2 && mu(p) == p; }

} // namespace kgh
