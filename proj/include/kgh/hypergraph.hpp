#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "kgh/errors.hpp"
#include "kgh/vertex_set.hpp"

namespace kgh {

/// Finite set system on vertices {1..n}. Edges are nonempty, duplicate-free and
/// kept in canonical order (size, then lexicographic). Immutable once built.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(int n, std::vector<VertexSet> edges) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                             std::to_string(kMaxVertices));
        const VertexSet universe = VertexSet::full(n);
        for (VertexSet e : edges) {
            if (e.empty())
                throw InputError("empty edge");
            if (!e.subset_of(universe))
                throw InputError("edge mentions a vertex above n=" + std::to_string(n));
        }
        std::sort(edges.begin(), edges.end(), canonical_less);
        auto last = std::unique(edges.begin(), edges.end());
        duplicates_dropped_ = static_cast<std::size_t>(std::distance(last, edges.end()));
        edges.erase(last, edges.end());
        edges_ = std::move(edges);

        // Sorted by size, so any edge contained in a later one appears first.
        for (VertexSet e : edges_) {
            bool minimal = std::none_of(minimal_.begin(), minimal_.end(),
                                        [e](VertexSet m) { return m.subset_of(e); });
            if (minimal)
                minimal_.push_back(e);
        }
    }

    static Hypergraph from_lists(int n, const std::vector<std::vector<int>>& edges) {
        std::vector<VertexSet> sets;
        sets.reserve(edges.size());
        for (const auto& e : edges) {
            for (int v : e)
                if (v < 1 || v > n)
                    throw InputError("vertex id " + std::to_string(v) + " outside 1.." +
                                     std::to_string(n));
            sets.emplace_back(e);
        }
        return Hypergraph(n, std::move(sets));
    }

    int n() const { return n_; }
    VertexSet vertices() const { return VertexSet::full(n_); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    /// Inclusion-minimal edges; independence only depends on these.
    const std::vector<VertexSet>& minimal_edges() const { return minimal_; }
    /// Duplicate edges collapsed during construction.
    std::size_t duplicates_dropped() const { return duplicates_dropped_; }

    bool has_singleton_edge() const {
        return !edges_.empty() && edges_.front().size() == 1;
    }
    bool is_graph() const {
        return std::all_of(edges_.begin(), edges_.end(),
                           [](VertexSet e) { return e.size() == 2; });
    }

    bool operator==(const Hypergraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<VertexSet> edges_;
    std::vector<VertexSet> minimal_;
    std::size_t duplicates_dropped_ = 0;
};

/// Total assignment of colors {1..t} to vertices 0..size()-1 (vertex v of a
/// Hypergraph lives at position v-1).
class Coloring {
public:
    Coloring() = default;
    Coloring(int palette_size, std::vector<int> assignment)
        : palette_(palette_size), colors_(std::move(assignment)) {
        if (palette_ < 1 && !colors_.empty())
            throw InputError("palette size must be positive");
        for (int c : colors_)
            if (c < 1 || c > palette_)
                throw InputError("color " + std::to_string(c) + " outside palette 1.." +
                                 std::to_string(palette_));
    }

    int palette_size() const { return palette_; }
    std::size_t size() const { return colors_.size(); }
    int operator[](std::size_t v) const { return colors_[v]; }
    const std::vector<int>& assignment() const { return colors_; }

    /// Sizes of all palette classes, empty classes included.
    std::vector<int> class_sizes() const {
        std::vector<int> sizes(static_cast<std::size_t>(std::max(palette_, 0)), 0);
        for (int c : colors_)
            ++sizes[static_cast<std::size_t>(c - 1)];
        return sizes;
    }

    bool operator==(const Coloring&) const = default;

private:
    int palette_ = 0;
    std::vector<int> colors_;
};

/// Per-vertex multiplicity bounds s_1..s_n.
class SVector {
public:
    SVector() = default;
    explicit SVector(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int s : entries_)
            if (s < 1)
                throw InputError("s-vector entries must be positive");
        total_ = std::accumulate(entries_.begin(), entries_.end(), 0);
    }
    static SVector ones(int n) { return constant(n, 1); }
    static SVector constant(int n, int value) {
        return SVector(std::vector<int>(static_cast<std::size_t>(n), value));
    }

    std::size_t size() const { return entries_.size(); }
    /// s_v for 1-based vertex v.
    int at(int v) const { return entries_[static_cast<std::size_t>(v - 1)]; }
    const std::vector<int>& entries() const { return entries_; }
    /// n-bar
    int total() const { return total_; }
    int max() const {
        return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
    }
    bool all_ones() const {
        return std::all_of(entries_.begin(), entries_.end(), [](int s) { return s == 1; });
    }

    bool operator==(const SVector& o) const { return entries_ == o.entries_; }

private:
    std::vector<int> entries_;
    int total_ = 0;
};

inline void check_subset(const Hypergraph& h, VertexSet s) {
    if (!s.subset_of(h.vertices()))
        throw InputError("vertex set mentions ids above n=" + std::to_string(h.n()));
}

inline void check_dimension(const Hypergraph& h, const SVector& s) {
    if (s.size() != static_cast<std::size_t>(h.n()))
        throw InputError("s-vector has " + std::to_string(s.size()) + " entries, hypergraph has " +
                         std::to_string(h.n()) + " vertices");
}

/// True iff no edge of h lies inside s.
inline bool is_independent(const Hypergraph& h, VertexSet s) {
    check_subset(h, s);
    for (VertexSet e : h.minimal_edges())
        if (e.subset_of(s))
            return false;
    return true;
}

struct InducedSubhypergraph {
    Hypergraph graph;
    /// relabel[i] is the original id of new vertex i+1.
    std::vector<int> relabel;
};

/// H[S], relabelled order-preservingly onto 1..|S|.
inline InducedSubhypergraph induced(const Hypergraph& h, VertexSet s) {
    check_subset(h, s);
    std::vector<int> relabel = s.to_vector();
    std::vector<int> to_new(static_cast<std::size_t>(h.n()) + 1, 0);
    for (std::size_t i = 0; i < relabel.size(); ++i)
        to_new[static_cast<std::size_t>(relabel[i])] = static_cast<int>(i) + 1;
    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges()) {
        if (!e.subset_of(s))
            continue;
        VertexSet mapped;
        for (int v : e)
            mapped.insert(to_new[static_cast<std::size_t>(v)]);
        edges.push_back(mapped);
    }
    return {Hypergraph(s.size(), std::move(edges)), std::move(relabel)};
}

/// No edge is monochromatic. Singleton edges are always monochromatic.
inline bool is_proper(const Hypergraph& h, const Coloring& c) {
    if (c.size() != static_cast<std::size_t>(h.n()))
        throw InputError("coloring covers " + std::to_string(c.size()) + " vertices, expected " +
                         std::to_string(h.n()));
    for (VertexSet e : h.edges()) {
        auto it = e.begin();
        const int first = c[static_cast<std::size_t>(*it - 1)];
        bool mono = true;
        for (++it; it != e.end(); ++it)
            if (c[static_cast<std::size_t>(*it - 1)] != first) {
                mono = false;
                break;
            }
        if (mono)
            return false;
    }
    return true;
}

/// Palette class sizes (empty classes count as 0) differ pairwise by at most one.
inline bool is_equitable(const Coloring& c) {
    auto sizes = c.class_sizes();
    if (sizes.empty())
        return true;
    auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    return *hi - *lo <= 1;
}

} // namespace kgh
