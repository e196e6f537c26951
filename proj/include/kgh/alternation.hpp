#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "kgh/errors.hpp"
#include "kgh/guards.hpp"
#include "kgh/hypergraph.hpp"

namespace kgh {

/// X = (x_1..x_n) with x_i in {0, 1..r}; value j > 0 stands for the j-th power of
/// the cyclic generator.
class AltVector {
public:
    AltVector() = default;
    AltVector(int r, std::vector<int> entries) : r_(r), x_(std::move(entries)) {
        if (r < 1)
            throw InputError("alternation vector needs r >= 1");
        for (int v : x_)
            if (v < 0 || v > r)
                throw InputError("alternation entry " + std::to_string(v) + " outside 0.." +
                                 std::to_string(r));
    }

    int r() const { return r_; }
    int n() const { return static_cast<int>(x_.size()); }
    const std::vector<int>& entries() const { return x_; }
    int operator[](std::size_t i) const { return x_[i]; }

    /// X^j = { positions i : x_i = j } (1-based positions).
    VertexSet positions(int j) const {
        VertexSet out;
        for (std::size_t i = 0; i < x_.size(); ++i)
            if (x_[i] == j)
                out.insert(static_cast<int>(i) + 1);
        return out;
    }

    bool operator==(const AltVector&) const = default;

private:
    int r_ = 1;
    std::vector<int> x_;
};

/// Length of the longest alternating subsequence of nonzero entries, i.e. the
/// number of maximal runs of equal values once zeros are dropped.
inline int alt_value(const AltVector& x) {
    int runs = 0;
    int last = 0;
    for (int v : x.entries()) {
        if (v == 0 || v == last)
            continue;
        ++runs;
        last = v;
    }
    return runs;
}

/// A bijection from positions 1..n onto the vertices; order[i-1] = sigma(i).
using Ordering = std::vector<int>;

inline Ordering identity_ordering(int n) {
    Ordering o(static_cast<std::size_t>(n));
    std::iota(o.begin(), o.end(), 1);
    return o;
}

inline void check_ordering(const Ordering& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n)
        throw InputError("ordering has " + std::to_string(sigma.size()) + " entries, expected " +
                         std::to_string(n));
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw InputError("ordering is not a bijection onto 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

/// sigma(X^j) as a vertex set.
inline VertexSet image(const Ordering& sigma, VertexSet positions) {
    VertexSet out;
    for (int i : positions)
        out.insert(sigma[static_cast<std::size_t>(i - 1)]);
    return out;
}

struct AltResult {
    int value = 0;
    AltVector witness;
    Ordering sigma;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Maximizes alt(X) over X whose classes map to independent sets under sigma.
///
/// Repeating the previous nonzero value never lengthens the alternation and only
/// tightens independence, so each position is either 0 or differs from the last
/// nonzero value; alt(X) is then the number of nonzero positions. Values are
/// interchangeable, so a fresh value is always the smallest unused one.
class AltSigmaSearch {
public:
    AltSigmaSearch(const Hypergraph& h, int r, const Ordering& sigma, std::uint64_t budget)
        : h_(h), r_(r), sigma_(sigma), budget_(budget),
          classes_(static_cast<std::size_t>(r) + 1), x_(static_cast<std::size_t>(h.n()), 0) {
        touching_.resize(static_cast<std::size_t>(h.n()) + 1);
        for (VertexSet e : h.minimal_edges())
            for (int v : e)
                touching_[static_cast<std::size_t>(v)].push_back(e);
    }

    /// Stops as soon as a value >= stop_at is reached.
    AltResult run(int stop_at) {
        stop_at_ = stop_at;
        best_ = -1;
        search(0, 0, 0, 0);
        AltResult res;
        res.value = best_;
        res.witness = AltVector(r_, best_x_);
        res.sigma = sigma_;
        res.nodes = nodes_;
        return res;
    }

    bool aborted() const { return best_ >= stop_at_; }

private:
    bool addable(int j, int vertex) const {
        VertexSet next = classes_[static_cast<std::size_t>(j)];
        next.insert(vertex);
        for (VertexSet e : touching_[static_cast<std::size_t>(vertex)])
            if (e.subset_of(next))
                return false;
        return true;
    }

    void search(int pos, int last, int used, int count) {
        if (++nodes_ > budget_)
            throw ResourceError("node budget of " + std::to_string(budget_) +
                                " exhausted in alternation search");
        if (count > best_) {
            best_ = count;
            best_x_ = x_;
        }
        const int n = h_.n();
        if (pos == n || best_ >= stop_at_ || count + (n - pos) <= best_)
            return;
        const int vertex = sigma_[static_cast<std::size_t>(pos)];
        const int top = std::min(used + 1, r_);
        for (int j = 1; j <= top; ++j) {
            if (j == last || !addable(j, vertex))
                continue;
            auto& cls = classes_[static_cast<std::size_t>(j)];
            const VertexSet saved = cls;
            cls.insert(vertex);
            x_[static_cast<std::size_t>(pos)] = j;
            search(pos + 1, j, std::max(used, j), count + 1);
            x_[static_cast<std::size_t>(pos)] = 0;
            cls = saved;
            if (best_ >= stop_at_)
                return;
        }
        search(pos + 1, last, used, count);
    }

    const Hypergraph& h_;
    int r_;
    const Ordering& sigma_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<VertexSet>> touching_;
    std::vector<VertexSet> classes_;
    std::vector<int> x_;
    std::vector<int> best_x_;
    int best_ = -1;
    int stop_at_ = 0;
};

} // namespace detail

/// alt^r_sigma(H): the largest alt(X) with every sigma(X^j) independent in H.
inline AltResult alt_sigma(const Hypergraph& h, int r, const Ordering& sigma,
                           const Guards& guards = {}) {
    if (r < 2)
        throw InputError("r must be at least 2");
    check_ordering(sigma, h.n());
    if (h.n() > guards.max_n)
        throw ResourceError("n=" + std::to_string(h.n()) + " exceeds alternation guard of " +
                            std::to_string(guards.max_n));
    return detail::AltSigmaSearch(h, r, sigma, guards.node_budget).run(h.n() + 1);
}

/// alt^r(H) = min over orderings sigma of alt^r_sigma(H).
///
/// Orderings are scanned in lexicographic order. Reversing an ordering reverses
/// every X, which preserves both alt(X) and the classes, so only orderings with
/// sigma(1) < sigma(n) are scanned. Each inner search stops once it reaches the
/// incumbent minimum, and the scan stops at the universal lower bound
/// min(n, r * (smallest edge size - 1)) given by the cyclic block vector.
inline AltResult alt_r(const Hypergraph& h, int r, const Guards& guards = {}) {
    if (r < 2)
        throw InputError("r must be at least 2");
    const int n = h.n();
    if (n > guards.max_alt_n)
        throw ResourceError("n=" + std::to_string(n) + " exceeds alt^r guard of " +
                            std::to_string(guards.max_alt_n));
    int floor_value = n;
    if (h.edge_count() > 0)
        floor_value = std::min(n, r * (h.edges().front().size() - 1));

    Ordering sigma = identity_ordering(n);
    AltResult best;
    best.value = n + 1;
    std::uint64_t nodes = 0;
    do {
        if (n >= 2 && sigma.front() > sigma.back())
            continue;
        detail::AltSigmaSearch search(h, r, sigma, guards.node_budget - std::min(guards.node_budget, nodes));
        AltResult res = search.run(best.value);
        nodes += res.nodes;
        if (!search.aborted() && res.value < best.value)
            best = res;
        if (best.value <= floor_value)
            break;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    best.nodes = nodes;
    return best;
}

} // namespace kgh
