#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kgh/defects.hpp"
#include "kgh/errors.hpp"
#include "kgh/guards.hpp"
#include "kgh/hypergraph.hpp"
#include "kgh/kneser.hpp"

namespace kgh {

/// Parts V_1..V_p of Kneser vertices (0-based ground-edge indices) found in a
/// proper coloring of KG^p_s(H). When some s_i > 1 a Kneser vertex may sit in
/// several parts; with s = 1 the transversal condition forces disjointness.
struct ColorfulWitness {
    std::vector<std::vector<int>> parts;
    Coloring coloring;
    Hypergraph ground;
    int p = 2;
    SVector s;
    /// ecd^p_s(H) at the time the witness was produced.
    int target = 0;
    /// ecd^p_s(H) = 0: every part is empty and the statement holds trivially.
    bool vacuous = false;

    int total() const {
        int t = 0;
        for (const auto& part : parts)
            t += static_cast<int>(part.size());
        return t;
    }
};

namespace detail {

inline void check_prime_setting(const Hypergraph& h, int p, const SVector& s) {
    if (!is_prime(p))
        throw InputError("p=" + std::to_string(p) + " is not prime");
    check_dimension(h, s);
    if (s.max() >= p)
        throw InputError("s-vector entries must be below p=" + std::to_string(p));
}

/// Backtracking search for a colorful witness of a prescribed total size.
///
/// A transversal picks one ground edge from every nonempty part, so vertex v can
/// occur in as many members as there are parts whose union contains v, and in no
/// more. Every transversal is therefore s-disjoint iff each vertex v lies in the
/// unions of at most s_v parts; the search maintains exactly that count.
class ColorfulSearch {
public:
    ColorfulSearch(const Hypergraph& h, const Coloring& c, const SVector& s, std::vector<int> sizes,
                   std::uint64_t budget)
        : h_(h), c_(c), s_(s), sizes_(std::move(sizes)), budget_(budget),
          touch_(static_cast<std::size_t>(h.n()) + 1, 0),
          colors_(sizes_.size(), std::vector<char>(static_cast<std::size_t>(c.palette_size()) + 1, 0)),
          parts_(sizes_.size()) {}

    std::optional<std::vector<std::vector<int>>> run() {
        if (part(0))
            return parts_;
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool part(std::size_t j) {
        if (j == sizes_.size() || sizes_[j] == 0)
            return true;
        const int first_floor =
            (j > 0 && sizes_[j - 1] == sizes_[j]) ? parts_[j - 1].front() : 0;
        return extend(j, first_floor, VertexSet());
    }

    bool extend(std::size_t j, int start, VertexSet uni) {
        if (++nodes_ > budget_)
            throw ResourceError("node budget of " + std::to_string(budget_) +
                                " exhausted in colorful witness search");
        auto& current = parts_[j];
        if (static_cast<int>(current.size()) == sizes_[j]) {
            for (int v : uni)
                ++touch_[static_cast<std::size_t>(v)];
            const bool ok = part(j + 1);
            for (int v : uni)
                --touch_[static_cast<std::size_t>(v)];
            return ok;
        }
        const int m = static_cast<int>(h_.edge_count());
        const int missing = sizes_[j] - static_cast<int>(current.size());
        for (int i = start; i <= m - missing; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            const int color = c_[ui];
            auto& used = colors_[j];
            if (used[static_cast<std::size_t>(color)])
                continue;
            const VertexSet fresh = h_.edges()[ui] - uni;
            bool ok = true;
            for (int v : fresh)
                if (touch_[static_cast<std::size_t>(v)] + 1 > s_.at(v)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            used[static_cast<std::size_t>(color)] = 1;
            current.push_back(i);
            const bool found = extend(j, i + 1, uni | fresh);
            if (found)
                return true;
            current.pop_back();
            used[static_cast<std::size_t>(color)] = 0;
        }
        return false;
    }

    const Hypergraph& h_;
    const Coloring& c_;
    const SVector& s_;
    std::vector<int> sizes_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> touch_;
    std::vector<std::vector<char>> colors_;
    std::vector<std::vector<int>> parts_;
};

inline std::vector<int> equitable_sizes(int total, int parts) {
    std::vector<int> sizes(static_cast<std::size_t>(parts), total / parts);
    for (int j = 0; j < total % parts; ++j)
        ++sizes[static_cast<std::size_t>(j)];
    return sizes;
}

} // namespace detail

/// Searches a proper coloring c of KG^p_s(H) for parts V_1..V_p with total size
/// ecd^p_s(H), equitable sizes, rainbow parts, and s-disjoint transversals.
/// Not finding one on valid input is an InternalInconsistency.
inline ColorfulWitness find_colorful(const Hypergraph& h, int p, const SVector& s, const Coloring& c,
                                     const Guards& guards = {}) {
    detail::check_prime_setting(h, p, s);
    auto kg = build_kneser_s(h, p, s, KneserGuards::from(guards));
    if (!kg.is_proper(c))
        throw InputError("coloring is not proper on KG^p_s(H)");

    ColorfulWitness w;
    w.coloring = c;
    w.ground = h;
    w.p = p;
    w.s = s;
    w.target = ecd(h, p, s, guards).value;
    w.parts.assign(static_cast<std::size_t>(p), {});
    if (w.target == 0) {
        w.vacuous = true;
        return w;
    }
    auto found = detail::ColorfulSearch(h, c, s, detail::equitable_sizes(w.target, p),
                                        guards.node_budget)
                     .run();
    if (!found)
        throw InternalInconsistency("no colorful witness of total size " +
                                    std::to_string(w.target) + " exists in the given coloring");
    w.parts = std::move(*found);
    return w;
}

struct ColorfulCheck {
    /// Parts mention valid Kneser vertices, none twice within one part.
    bool well_formed = true;
    /// Bullet 1: total size equals ecd^p_s(H) (recomputed).
    bool total_matches = false;
    /// Bullet 2: every transversal is an edge of KG^p_s(H).
    bool transversals_are_edges = false;
    /// Bullet 3: part sizes differ by at most one.
    bool equitable = false;
    /// Bullet 4: colors within each part are distinct.
    bool rainbow = false;
    int recomputed_target = 0;
    bool transversals_exhaustive = false;
    std::vector<int> bad_transversal;
    /// (part, vertex, vertex) sharing a color.
    std::optional<std::tuple<int, int, int>> color_collision;
    std::string detail;

    bool passed() const {
        return well_formed && total_matches && transversals_are_edges && equitable && rainbow;
    }
};

inline constexpr std::uint64_t kExhaustiveTransversalLimit = 100'000;

/// Re-checks every property of a colorful witness from scratch.
inline ColorfulCheck verify_colorful(const ColorfulWitness& w, const Guards& guards = {}) {
    ColorfulCheck out;
    const Hypergraph& h = w.ground;
    const int m = static_cast<int>(h.edge_count());
    for (const auto& part : w.parts) {
        std::vector<char> seen(static_cast<std::size_t>(m), 0);
        for (int i : part) {
            if (i < 0 || i >= m || seen[static_cast<std::size_t>(i)]) {
                out.well_formed = false;
                out.detail = "part mentions an invalid or repeated Kneser vertex";
                return out;
            }
            seen[static_cast<std::size_t>(i)] = 1;
        }
    }
    if (static_cast<int>(w.parts.size()) != w.p || w.coloring.size() != static_cast<std::size_t>(m) ||
        w.s.size() != static_cast<std::size_t>(h.n())) {
        out.well_formed = false;
        out.detail = "witness dimensions do not match the ground hypergraph";
        return out;
    }

    out.recomputed_target = ecd(h, w.p, w.s, guards).value;
    out.total_matches = w.total() == out.recomputed_target && w.total() == w.target;

    std::size_t lo = SIZE_MAX, hi = 0;
    for (const auto& part : w.parts) {
        lo = std::min(lo, part.size());
        hi = std::max(hi, part.size());
    }
    out.equitable = w.parts.empty() || hi - lo <= 1;

    out.rainbow = true;
    for (std::size_t j = 0; j < w.parts.size() && out.rainbow; ++j) {
        const auto& part = w.parts[j];
        for (std::size_t a = 0; a < part.size() && out.rainbow; ++a)
            for (std::size_t b = a + 1; b < part.size(); ++b)
                if (w.coloring[static_cast<std::size_t>(part[a])] ==
                    w.coloring[static_cast<std::size_t>(part[b])]) {
                    out.rainbow = false;
                    out.color_collision = std::make_tuple(static_cast<int>(j), part[a], part[b]);
                    break;
                }
    }

    std::vector<const std::vector<int>*> nonempty;
    std::uint64_t product = 1;
    for (const auto& part : w.parts)
        if (!part.empty()) {
            nonempty.push_back(&part);
            product = std::min<std::uint64_t>(product * part.size(), kExhaustiveTransversalLimit + 1);
        }

    out.transversals_are_edges = true;
    if (product <= kExhaustiveTransversalLimit) {
        out.transversals_exhaustive = true;
        std::vector<std::size_t> pick(nonempty.size(), 0);
        std::vector<int> members(nonempty.size());
        while (true) {
            for (std::size_t j = 0; j < nonempty.size(); ++j)
                members[j] = (*nonempty[j])[pick[j]];
            if (!is_s_disjoint(h, members, w.s)) {
                out.transversals_are_edges = false;
                out.bad_transversal = members;
                break;
            }
            std::size_t j = 0;
            while (j < nonempty.size() && ++pick[j] == nonempty[j]->size())
                pick[j++] = 0;
            if (j == nonempty.size())
                break;
        }
    } else {
        // The worst transversal for vertex v takes a v-containing edge from every
        // part that has one, so per-vertex part counts decide the question exactly.
        for (int v = 1; v <= h.n() && out.transversals_are_edges; ++v) {
            std::vector<int> members;
            for (const auto* part : nonempty) {
                auto it = std::find_if(part->begin(), part->end(), [&](int i) {
                    return h.edges()[static_cast<std::size_t>(i)].contains(v);
                });
                members.push_back(it == part->end() ? part->front() : *it);
            }
            if (!is_s_disjoint(h, members, w.s)) {
                out.transversals_are_edges = false;
                out.bad_transversal = members;
            }
        }
    }
    return out;
}

/// T_{H,C,r}: vertex set V(H), edges all V with ecd^r(H[V]) > (r-1)C.
struct KrizReduction {
    Hypergraph full;
    Hypergraph minimal;
    int C = 0;
    int r = 2;
};

inline KrizReduction kriz_T(const Hypergraph& h, int C, int r, const Guards& guards = {}) {
    if (r < 2)
        throw InputError("r must be at least 2");
    if (C < 0)
        throw InputError("C must be nonnegative");
    if (h.n() > guards.max_removal_n)
        throw ResourceError("n=" + std::to_string(h.n()) + " exceeds reduction guard of " +
                            std::to_string(guards.max_removal_n));
    std::vector<VertexSet> edges;
    const long long threshold = static_cast<long long>(r - 1) * C;
    const std::uint64_t count = std::uint64_t{1} << h.n();
    for (std::uint64_t bits = 1; bits < count; ++bits) {
        VertexSet v(bits);
        if (v.size() <= threshold)
            continue; // ecd never exceeds |V|
        auto sub = induced(h, v).graph;
        if (ecd(sub, r, guards).value > threshold)
            edges.push_back(v);
    }
    KrizReduction t;
    t.C = C;
    t.r = r;
    t.full = Hypergraph(h.n(), edges);
    t.minimal = Hypergraph(h.n(), t.full.minimal_edges());
    return t;
}

struct Lemma1Report {
    int lhs = 0;
    int rhs = 0;
    bool holds = false;
    int ecd_of_T = 0;
    std::size_t T_edges = 0;
    std::size_t T_minimal_edges = 0;
};

/// ecd^{r'r''}_s(H) <= r''(r'-1)C + ecd^{r''}_s(T_{H,C,r'}).
inline Lemma1Report check_lemma1(const Hypergraph& h, int r1, int r2, const SVector& s, int C,
                                 const Guards& guards = {}) {
    if (r1 < 2 || r2 < 2)
        throw InputError("r' and r'' must be at least 2");
    check_dimension(h, s);
    if (s.max() >= r2)
        throw InputError("s-vector entries must be below r''=" + std::to_string(r2));
    Lemma1Report rep;
    rep.lhs = ecd(h, r1 * r2, s, guards).value;
    auto t = kriz_T(h, C, r1, guards);
    rep.T_edges = t.full.edge_count();
    rep.T_minimal_edges = t.minimal.edge_count();
    rep.ecd_of_T = ecd(t.minimal, r2, s, guards).value;
    rep.rhs = r2 * (r1 - 1) * C + rep.ecd_of_T;
    rep.holds = rep.lhs <= rep.rhs;
    return rep;
}

struct ReductionColoring {
    KrizReduction T;
    /// h(e) for every edge e of T.full, indexed like T.full.edges().
    Coloring derived;
    bool proper = false;
};

/// Given a proper coloring c of KG^{r'r''}_s(H) with C colors, colors each edge e
/// of T_{H,C,r'} by the largest color among monochromatic edges of KG^{r'}(H[e])
/// and verifies that the result properly colors KG^{r''}_s(T).
inline ReductionColoring check_reduction_coloring(const Hypergraph& h, int r1, int r2,
                                                  const SVector& s, const Coloring& c,
                                                  const Guards& guards = {}) {
    if (r1 < 2 || r2 < 2)
        throw InputError("r' and r'' must be at least 2");
    check_dimension(h, s);
    auto kg = build_kneser_s(h, r1 * r2, s, KneserGuards::from(guards));
    if (!kg.is_proper(c))
        throw InputError("coloring is not proper on KG^{r'r''}_s(H)");

    ReductionColoring out;
    const int C = c.palette_size();
    out.T = kriz_T(h, C, r1, guards);

    std::map<std::uint64_t, int> index_of;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        index_of.emplace(h.edges()[i].bits(), static_cast<int>(i));

    std::vector<int> colors;
    colors.reserve(out.T.full.edge_count());
    for (VertexSet e : out.T.full.edges()) {
        auto sub = induced(h, e);
        auto local = build_kneser(sub.graph, r1, KneserGuards::from(guards));
        int largest = 0;
        for (const auto& edge : local.edges()) {
            int shared = -1;
            for (int li : edge) {
                VertexSet original;
                for (int v : local.ground_edge(li))
                    original.insert(sub.relabel[static_cast<std::size_t>(v - 1)]);
                const int color = c[static_cast<std::size_t>(index_of.at(original.bits()))];
                if (shared == -1)
                    shared = color;
                else if (shared != color) {
                    shared = 0;
                    break;
                }
            }
            if (shared > 0)
                largest = std::max(largest, shared);
        }
        if (largest == 0)
            throw InternalInconsistency("edge of T has no monochromatic edge in KG^{r'}(H[e])");
        colors.push_back(largest);
    }
    out.derived = Coloring(C, std::move(colors));
    auto kg_t = build_kneser_s(out.T.full, r2, s, KneserGuards::from(guards));
    out.proper = kg_t.is_proper(out.derived);
    if (!out.proper)
        throw InternalInconsistency("derived coloring is not proper on KG^{r''}_s(T)");
    return out;
}

} // namespace kgh
