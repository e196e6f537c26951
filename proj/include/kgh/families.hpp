#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kgh/alternation.hpp"
#include "kgh/coloring_solver.hpp"
#include "kgh/defects.hpp"
#include "kgh/errors.hpp"
#include "kgh/guards.hpp"
#include "kgh/hypergraph.hpp"
#include "kgh/kneser.hpp"

namespace kgh {

/// ([n], all k-subsets); its Kneser hypergraph is KG^r(n,k).
inline Hypergraph complete_uniform(int n, int k) {
    if (n < 0 || n > kMaxVertices || k < 1)
        throw InputError("complete_uniform needs 0 <= n <= 63 and k >= 1");
    std::vector<VertexSet> edges;
    for_each_k_subset(VertexSet::full(n), k, [&](VertexSet e) { edges.push_back(e); });
    return Hypergraph(n, std::move(edges));
}

/// Parameters of H(n, k, A): edges are the k-subsets of [n] not contained in A.
struct HnkaParams {
    int n = 0;
    int k = 0;
    int r = 2;
    VertexSet A;
    /// Permits n < rk (down to n >= k) for oracle cross-checks only.
    bool relaxed = false;

    HnkaParams() = default;
    HnkaParams(int n_, int k_, int r_, VertexSet A_, bool relaxed_ = false)
        : n(n_), k(k_), r(r_), A(A_), relaxed(relaxed_) {
        validate();
    }
    /// A = {1..a}
    static HnkaParams prefix(int n, int k, int r, int a, bool relaxed = false) {
        return HnkaParams(n, k, r, VertexSet::full(std::max(a, 0)), relaxed);
    }

    int a() const { return A.size(); }

    void validate() const {
        if (r < 2)
            throw InputError("H(n,k,A) needs r >= 2");
        if (k < 1 || n < 1 || n > kMaxVertices)
            throw InputError("H(n,k,A) needs k >= 1 and 1 <= n <= 63");
        if (relaxed ? n < k : n < r * k)
            throw InputError("H(n,k,A) needs n >= rk (n=" + std::to_string(n) + ", rk=" +
                             std::to_string(r * k) + ")");
        if (!A.subset_of(VertexSet::full(n)) || A == VertexSet::full(n))
            throw InputError("A must be a proper subset of [n]");
    }
};

inline Hypergraph hnka(const HnkaParams& p) {
    p.validate();
    std::vector<VertexSet> edges;
    for_each_k_subset(VertexSet::full(p.n), p.k, [&](VertexSet e) {
        if (!e.subset_of(p.A))
            edges.push_back(e);
    });
    return Hypergraph(p.n, std::move(edges));
}

/// n - (r-1)(k-1) - max{|A|, k-1}
inline long long cd_hnka_closed(const HnkaParams& p) {
    return static_cast<long long>(p.n) - static_cast<long long>(p.r - 1) * (p.k - 1) -
           std::max(p.a(), p.k - 1);
}

/// Piecewise closed form for ecd^r(H(n,k,A)).
inline long long ecd_hnka_closed(const HnkaParams& p) {
    const long long n = p.n, k = p.k, r = p.r, a = p.a();
    if (a <= k - 1)
        return n - r * (k - 1);
    if (a <= r * k - 2)
        return n - r * (k - 1) - a / k;
    return n - a;
}

struct AltWitness {
    AltVector x;
    /// alt(X) promised by the construction.
    int claimed = 0;
    /// "block", "r2", "r3" or "r4+"
    std::string construction;
};

/// Cyclic block vector x_i = ((i-1) mod r) + 1 on positions 1..r(k-1): every class
/// has k-1 positions, so its image is independent whatever sigma is.
inline AltWitness alt_witness_block(int n, int k, int r) {
    const int len = r * (k - 1);
    if (len > n)
        throw InputError("block vector needs n >= r(k-1)");
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= len; ++i)
        x[static_cast<std::size_t>(i - 1)] = ((i - 1) % r) + 1;
    return {AltVector(r, std::move(x)), len, "block"};
}

/// The alternation witness for H(n,k,A) under sigma: the block vector when
/// |A| <= k-1, otherwise the A-alternating vector, plus one vertex outside A
/// for r = 3, plus a cyclic run over B (the b = min{n-|A|, (r-2)(k-1)} smallest
/// vertices outside A) for r >= 4.
inline AltWitness alt_witness_hnka(const HnkaParams& p, const Ordering& sigma) {
    p.validate();
    check_ordering(sigma, p.n);
    if (p.a() <= p.k - 1)
        return alt_witness_block(p.n, p.k, p.r);

    std::vector<int> position(static_cast<std::size_t>(p.n) + 1, 0);
    for (int i = 1; i <= p.n; ++i)
        position[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)])] = i;
    auto positions_of = [&](VertexSet s) {
        std::vector<int> out;
        for (int v : s)
            out.push_back(position[static_cast<std::size_t>(v)]);
        std::sort(out.begin(), out.end());
        return out;
    };

    std::vector<int> x(static_cast<std::size_t>(p.n), 0);
    auto in_a = positions_of(p.A);
    for (std::size_t s = 1; s <= in_a.size(); ++s)
        x[static_cast<std::size_t>(in_a[s - 1] - 1)] = (s % 2 == 1) ? 2 : 1;

    AltWitness w;
    const VertexSet outside = VertexSet::full(p.n) - p.A;
    if (p.r == 2) {
        w.claimed = p.a();
        w.construction = "r2";
    } else if (p.r == 3) {
        x[static_cast<std::size_t>(position[static_cast<std::size_t>(outside.min())] - 1)] = 3;
        w.claimed = p.a() + 1;
        w.construction = "r3";
    } else {
        const int b = std::min(p.n - p.a(), (p.r - 2) * (p.k - 1));
        VertexSet B;
        for (int v : outside) {
            if (B.size() == b)
                break;
            B.insert(v);
        }
        auto in_b = positions_of(B);
        for (std::size_t s = 1; s <= in_b.size(); ++s)
            x[static_cast<std::size_t>(in_b[s - 1] - 1)] =
                3 + static_cast<int>(s % static_cast<std::size_t>(p.r - 2));
        w.claimed = p.a() + b;
        w.construction = "r4+";
    }
    w.x = AltVector(p.r, std::move(x));
    return w;
}

/// Witness-based upper bound on n - alt^r(H(n,k,A)):
/// n - max{r(k-1), |A|} (r=2), n - max{3(k-1), |A|+1} (r=3), n - max{r(k-1), |A|+b} (r>=4).
inline long long alt_gap_upper_hnka(const HnkaParams& p) {
    long long best = static_cast<long long>(p.r) * (p.k - 1);
    if (p.a() >= p.k) {
        if (p.r == 2)
            best = std::max<long long>(best, p.a());
        else if (p.r == 3)
            best = std::max<long long>(best, p.a() + 1);
        else
            best = std::max<long long>(best, p.a() + std::min(p.n - p.a(), (p.r - 2) * (p.k - 1)));
    }
    return p.n - best;
}

/// ceil((n - r(k-1)) / (r-1))
inline int afl_palette(int n, int k, int r) {
    return static_cast<int>(ceil_div(n - static_cast<long long>(r) * (k - 1), r - 1));
}

/// min{ceil(min(e)/(r-1)), t}
inline int afl_color(VertexSet e, int r, int t) {
    return static_cast<int>(std::min<long long>(ceil_div(e.min(), r - 1), t));
}

/// Proper coloring of KG^r(n,k) with ceil((n - r(k-1))/(r-1)) colors; vertices
/// follow the canonical edge order of complete_uniform(n, k).
inline Coloring afl_coloring(int n, int k, int r) {
    if (r < 2 || k < 1)
        throw InputError("afl_coloring needs r >= 2 and k >= 1");
    if (n < r * k)
        throw InputError("afl_coloring needs n >= rk");
    const int t = afl_palette(n, k, r);
    std::vector<int> colors;
    const auto ground = complete_uniform(n, k);
    for (VertexSet e : ground.edges())
        colors.push_back(afl_color(e, r, t));
    return Coloring(t, std::move(colors));
}

struct Prop1Coloring {
    /// c(e) = min{i : e meets S_i} for consecutive (r-1)-blocks S_i of [n] \ A.
    Coloring coloring;
    /// afl_coloring restricted to the edges of H(n,k,A).
    Coloring afl;
    /// min of the two palette sizes.
    int combined_upper = 0;
};

inline Prop1Coloring prop1_coloring(const HnkaParams& p) {
    p.validate();
    const auto outside = (VertexSet::full(p.n) - p.A).to_vector();
    std::vector<int> block(static_cast<std::size_t>(p.n) + 1, 0);
    for (std::size_t i = 0; i < outside.size(); ++i)
        block[static_cast<std::size_t>(outside[i])] = static_cast<int>(i) / (p.r - 1) + 1;
    const int t = static_cast<int>(ceil_div(p.n - p.a(), p.r - 1));
    const int t_afl = afl_palette(p.n, p.k, p.r);

    std::vector<int> colors, afl;
    const auto ground = hnka(p);
    for (VertexSet e : ground.edges()) {
        int c = t;
        for (int v : e)
            if (block[static_cast<std::size_t>(v)] > 0)
                c = std::min(c, block[static_cast<std::size_t>(v)]);
        colors.push_back(c);
        afl.push_back(afl_color(e, p.r, t_afl));
    }
    return {Coloring(t, std::move(colors)), Coloring(t_afl, std::move(afl)), std::min(t, t_afl)};
}

struct ChiClosed {
    bool exact = false;
    long long lower = 0;
    long long upper = 0;
    /// n >= 2rk; outside it the values are exploratory only.
    bool hypothesis_holds = false;
};

/// chi(KG^r(H(n,k,A))): exact when |A| <= 2(k-1) or |A| >= rk-1, otherwise the
/// interval [ceil((n - r(k-1) - floor(|A|/k))/(r-1)), ceil((n - max{r(k-1),|A|})/(r-1))].
inline ChiClosed chi_hnka_closed(const HnkaParams& p) {
    const long long n = p.n, k = p.k, r = p.r, a = p.a();
    ChiClosed out;
    out.hypothesis_holds = n >= 2 * r * k;
    out.upper = ceil_div(n - std::max(r * (k - 1), a), r - 1);
    if (a <= 2 * (k - 1) || a >= r * k - 1) {
        out.lower = out.upper;
    } else {
        out.lower = ceil_div(n - r * (k - 1) - a / k, r - 1);
    }
    out.exact = out.lower == out.upper;
    return out;
}

/// Complete multipartite graph: all pairs meeting two distinct parts.
inline Hypergraph complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.size() < 2)
        throw InputError("complete_multipartite needs at least two parts");
    std::vector<int> part_of;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        if (sizes[j] < 1)
            throw InputError("part sizes must be positive");
        part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[j]), static_cast<int>(j));
    }
    const int n = static_cast<int>(part_of.size());
    if (n > kMaxVertices)
        throw InputError("complete_multipartite: too many vertices");
    std::vector<VertexSet> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (part_of[static_cast<std::size_t>(u - 1)] != part_of[static_cast<std::size_t>(v - 1)])
                edges.push_back(VertexSet{u, v});
    return Hypergraph(n, std::move(edges));
}

/// r vertex-disjoint copies of G plus every pair across distinct copies.
/// Copy j holds vertices j*|V(G)| + 1 .. (j+1)*|V(G)|.
inline Hypergraph gbar(const Hypergraph& g, int r) {
    if (!g.is_graph())
        throw InputError("gbar needs a graph (all edges of size 2)");
    if (r < 2)
        throw InputError("gbar needs r >= 2");
    const int n = g.n();
    if (static_cast<long long>(n) * r > kMaxVertices)
        throw InputError("gbar: too many vertices");
    std::vector<VertexSet> edges;
    for (int j = 0; j < r; ++j)
        for (VertexSet e : g.edges())
            edges.push_back(VertexSet{e.min() + j * n, e.max() + j * n});
    for (int u = 1; u <= n * r; ++u)
        for (int v = u + 1; v <= n * r; ++v)
            if ((u - 1) / n != (v - 1) / n)
                edges.push_back(VertexSet{u, v});
    return Hypergraph(n * r, std::move(edges));
}

/// F plus m new vertices u_1..u_m, each joined to every vertex of F.
inline Hypergraph augment_with_universal(const Hypergraph& f, int m) {
    const int n = f.n();
    if (m < 0 || n + m > kMaxVertices)
        throw InputError("augment_with_universal: too many vertices");
    std::vector<VertexSet> edges(f.edges());
    for (int u = n + 1; u <= n + m; ++u)
        for (int v = 1; v <= n; ++v)
            edges.push_back(VertexSet{v, u});
    return Hypergraph(n + m, std::move(edges));
}

/// ([n], s-stable k-subsets); its Kneser hypergraph is the s-stable KG^r_s(n,k).
inline Hypergraph s_stable_hypergraph(int n, int k, int s) {
    return Hypergraph(n, s_stable_vertices(n, k, s));
}

struct IndependenceResult {
    int alpha = 0;
    VertexSet witness;
};

namespace detail {

class MaxIndependentSet {
public:
    explicit MaxIndependentSet(const Hypergraph& g) : neighbors_(static_cast<std::size_t>(g.n()) + 1) {
        for (VertexSet e : g.edges()) {
            neighbors_[static_cast<std::size_t>(e.min())].insert(e.max());
            neighbors_[static_cast<std::size_t>(e.max())].insert(e.min());
        }
        search(g.vertices(), VertexSet());
    }
    IndependenceResult result() const { return {best_.size(), best_}; }

private:
    void search(VertexSet candidates, VertexSet chosen) {
        if (chosen.size() + candidates.size() <= best_.size())
            return;
        if (candidates.empty()) {
            best_ = chosen;
            return;
        }
        int pick = 0, degree = -1;
        for (int v : candidates) {
            const int d = (neighbors_[static_cast<std::size_t>(v)] & candidates).size();
            if (d > degree) {
                pick = v;
                degree = d;
            }
        }
        if (degree == 0) {
            best_ = chosen | candidates;
            return;
        }
        VertexSet with = chosen;
        with.insert(pick);
        VertexSet rest = candidates - neighbors_[static_cast<std::size_t>(pick)];
        rest.erase(pick);
        search(rest, with);
        VertexSet without = candidates;
        without.erase(pick);
        search(without, chosen);
    }

    std::vector<VertexSet> neighbors_;
    VertexSet best_;
};

} // namespace detail

/// alpha(G) by branch and bound on the highest-degree candidate.
inline IndependenceResult independence_number(const Hypergraph& g) {
    if (!g.is_graph())
        throw InputError("independence_number needs a graph (all edges of size 2)");
    return detail::MaxIndependentSet(g).result();
}

struct GbarIdentity {
    int ecd = 0;
    int alpha = 0;
    /// r(|V(G)| - alpha(G))
    int r_times_vc = 0;
    bool holds = false;
};

inline GbarIdentity verify_gbar_identity(const Hypergraph& g, int r, const Guards& guards = {}) {
    GbarIdentity out;
    out.alpha = independence_number(g).alpha;
    out.ecd = ecd(gbar(g, r), r, guards).value;
    out.r_times_vc = r * (g.n() - out.alpha);
    out.holds = out.ecd == out.r_times_vc;
    return out;
}

struct IntRange {
    int lo = 0;
    int hi = 0;
};

struct ConjectureGrid {
    IntRange n;
    IntRange k;
    IntRange r;
    /// Defaults to every |A| in [0, n-1].
    std::optional<IntRange> a;
    /// Kneser vertex count above which a point is skipped.
    std::size_t max_kg_vertices = 200;
    std::uint64_t node_budget = 20'000'000;
};

enum class Verdict { matches, counterexample, skipped };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::matches: return "matches";
    case Verdict::counterexample: return "counterexample";
    case Verdict::skipped: return "skipped";
    }
    return "?";
}

struct ConjecturePoint {
    int n = 0, k = 0, r = 0, a = 0;
    Verdict verdict = Verdict::skipped;
    std::string reason;
    long long conjectured = 0;
    std::optional<int> chi;
    std::size_t kg_vertices = 0;
    std::uint64_t nodes = 0;
};

/// Evaluates one grid point: exact chi(KG^r(H(n,k,{1..a}))) against
/// ceil((n - max{r(k-1), a}) / (r-1)) for 2k-1 <= a <= rk-1.
inline ConjecturePoint conjecture_point(int n, int k, int r, int a, std::size_t max_kg_vertices,
                                        std::uint64_t node_budget) {
    ConjecturePoint pt;
    pt.n = n;
    pt.k = k;
    pt.r = r;
    pt.a = a;
    pt.conjectured = ceil_div(n - std::max<long long>(static_cast<long long>(r) * (k - 1), a), r - 1);
    if (k < 1 || r < 2 || n < r * k) {
        pt.reason = "requires n >= rk";
        return pt;
    }
    if (a < 2 * k - 1 || a > r * k - 1) {
        pt.reason = "outside 2k-1 <= |A| <= rk-1";
        return pt;
    }
    if (a >= n) {
        pt.reason = "A must be a proper subset of [n]";
        return pt;
    }
    auto h = hnka(HnkaParams::prefix(n, k, r, a));
    pt.kg_vertices = h.edge_count();
    if (pt.kg_vertices > max_kg_vertices) {
        pt.reason = "Kneser vertex count above guard";
        return pt;
    }
    auto kg = build_kneser(h, r);
    auto res = chromatic_number(kg.coloring_instance(), 62, node_budget);
    pt.nodes = res.nodes;
    if (res.status != SolveStatus::exact) {
        pt.reason = std::string("solver stopped: ") + to_string(res.status);
        return pt;
    }
    pt.chi = res.value;
    pt.verdict = res.value == pt.conjectured ? Verdict::matches : Verdict::counterexample;
    return pt;
}

/// Points are produced in (n, k, r, a) lexicographic order.
inline std::vector<ConjecturePoint> explore_conjecture(const ConjectureGrid& grid) {
    std::vector<ConjecturePoint> out;
    for (int n = grid.n.lo; n <= grid.n.hi; ++n)
        for (int k = grid.k.lo; k <= grid.k.hi; ++k)
            for (int r = grid.r.lo; r <= grid.r.hi; ++r) {
                IntRange a = grid.a.value_or(IntRange{0, n - 1});
                for (int av = a.lo; av <= a.hi; ++av)
                    out.push_back(conjecture_point(n, k, r, av, grid.max_kg_vertices, grid.node_budget));
            }
    return out;
}

} // namespace kgh
