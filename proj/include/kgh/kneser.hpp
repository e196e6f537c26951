#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kgh/coloring_solver.hpp"
#include "kgh/errors.hpp"
#include "kgh/guards.hpp"
#include "kgh/hypergraph.hpp"

namespace kgh {

struct KneserGuards {
    std::size_t max_vertices = 5000;
    std::size_t max_edges = 10'000'000;

    static KneserGuards from(const Guards& g) { return {g.max_kneser_vertices, g.max_kneser_edges}; }
};

/// KG^r_s(H): one vertex per ground edge (in the ground hypergraph's canonical
/// edge order, 0-based), edges are size-r multisets stored as nondecreasing
/// index sequences.
class MultiHypergraph {
public:
    MultiHypergraph() = default;
    MultiHypergraph(Hypergraph ground, int r, SVector s, std::vector<std::vector<int>> edges)
        : ground_(std::move(ground)), r_(r), s_(std::move(s)), edges_(std::move(edges)) {}

    int vertex_count() const { return static_cast<int>(ground_.edge_count()); }
    int r() const { return r_; }
    const SVector& s() const { return s_; }
    const Hypergraph& ground() const { return ground_; }
    /// Ground edge represented by Kneser vertex i.
    VertexSet ground_edge(int i) const { return ground_.edges()[static_cast<std::size_t>(i)]; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Coloring view: each multiset edge reduced to its support, duplicates removed.
    /// An edge whose support is a single vertex is monochromatic under every coloring.
    ColoringInstance coloring_instance() const {
        ColoringInstance inst;
        inst.vertex_count = vertex_count();
        inst.edges.reserve(edges_.size());
        for (const auto& e : edges_) {
            std::vector<int> support(e);
            support.erase(std::unique(support.begin(), support.end()), support.end());
            inst.edges.push_back(std::move(support));
        }
        std::sort(inst.edges.begin(), inst.edges.end());
        inst.edges.erase(std::unique(inst.edges.begin(), inst.edges.end()), inst.edges.end());
        return inst;
    }

    /// Edge is monochromatic iff all its (distinct) members share a color.
    bool is_proper(const Coloring& c) const {
        if (c.size() != static_cast<std::size_t>(vertex_count()))
            throw InputError("coloring covers " + std::to_string(c.size()) +
                             " Kneser vertices, expected " + std::to_string(vertex_count()));
        for (const auto& e : edges_) {
            const int first = c[static_cast<std::size_t>(e.front())];
            if (std::all_of(e.begin(), e.end(),
                            [&](int v) { return c[static_cast<std::size_t>(v)] == first; }))
                return false;
        }
        return true;
    }

private:
    Hypergraph ground_;
    int r_ = 2;
    SVector s_;
    std::vector<std::vector<int>> edges_;
};

/// Each ground vertex i occurs, counting repetitions, in at most s_i of the chosen edges.
inline bool is_s_disjoint(const Hypergraph& h, const std::vector<int>& members, const SVector& s) {
    check_dimension(h, s);
    std::vector<int> count(static_cast<std::size_t>(h.n()) + 1, 0);
    for (int idx : members) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= h.edge_count())
            throw InputError("edge index " + std::to_string(idx) + " out of range");
        for (int v : h.edges()[static_cast<std::size_t>(idx)])
            if (++count[static_cast<std::size_t>(v)] > s.at(v))
                return false;
    }
    return true;
}

namespace detail {

class KneserEnumerator {
public:
    KneserEnumerator(const Hypergraph& h, int r, const SVector& s, const KneserGuards& guards)
        : h_(h), r_(r), s_(s), guards_(guards),
          count_(static_cast<std::size_t>(h.n()) + 1, 0), tuple_(static_cast<std::size_t>(r)) {}

    std::vector<std::vector<int>> run() {
        extend(0, 0, VertexSet());
        return std::move(out_);
    }

private:
    void extend(int depth, int start, VertexSet saturated) {
        if (depth == r_) {
            if (out_.size() >= guards_.max_edges)
                throw ResourceError("Kneser edge count exceeds guard of " +
                                    std::to_string(guards_.max_edges));
            out_.push_back(tuple_);
            return;
        }
        const int m = static_cast<int>(h_.edge_count());
        for (int i = start; i < m; ++i) {
            VertexSet e = h_.edges()[static_cast<std::size_t>(i)];
            if (e.intersects(saturated))
                continue;
            VertexSet next = saturated;
            for (int v : e)
                if (++count_[static_cast<std::size_t>(v)] == s_.at(v))
                    next.insert(v);
            tuple_[static_cast<std::size_t>(depth)] = i;
            extend(depth + 1, i, next);
            for (int v : e)
                --count_[static_cast<std::size_t>(v)];
        }
    }

    const Hypergraph& h_;
    int r_;
    const SVector& s_;
    const KneserGuards& guards_;
    std::vector<int> count_;
    std::vector<int> tuple_;
    std::vector<std::vector<int>> out_;
};

} // namespace detail

/// KG^r_s(H): all size-r multisets of ground edges that are s-disjoint.
inline MultiHypergraph build_kneser_s(const Hypergraph& h, int r, const SVector& s,
                                      const KneserGuards& guards = {}) {
    if (r < 2)
        throw InputError("r must be at least 2");
    check_dimension(h, s);
    if (h.edge_count() > guards.max_vertices)
        throw ResourceError("Kneser vertex count " + std::to_string(h.edge_count()) +
                            " exceeds guard of " + std::to_string(guards.max_vertices));
    auto edges = detail::KneserEnumerator(h, r, s, guards).run();
    return MultiHypergraph(h, r, s, std::move(edges));
}

/// KG^r(H): r-sets of pairwise disjoint ground edges.
inline MultiHypergraph build_kneser(const Hypergraph& h, int r, const KneserGuards& guards = {}) {
    return build_kneser_s(h, r, SVector::ones(h.n()), guards);
}

/// k-subsets A of [n] with s <= |x - y| <= n - s for all distinct x, y in A.
inline std::vector<VertexSet> s_stable_vertices(int n, int k, int s) {
    if (s < 2)
        throw InputError("stability parameter must be at least 2");
    if (n < 0 || n > kMaxVertices || k < 0)
        throw InputError("invalid n or k for s-stable sets");
    std::vector<VertexSet> out;
    for_each_k_subset(VertexSet::full(n), k, [&](VertexSet a) {
        auto members = a.to_vector();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const int d = members[j] - members[i];
                if (d < s || d > n - s)
                    return;
            }
        out.push_back(a);
    });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

} // namespace kgh
