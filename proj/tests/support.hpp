#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kgh/hypergraph.hpp"

namespace testing_support {

using kgh::Hypergraph;
using kgh::SVector;
using kgh::VertexSet;

/// Uniform draw in [lo, hi] from the raw engine output, so sequences do not
/// depend on the standard library's distribution implementations.
inline int draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// n vertices, up to max_edges random edges with sizes in [min_size, max_size].
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int max_edges, int min_size, int max_size) {
    std::vector<VertexSet> edges;
    const int m = draw(rng, 0, max_edges);
    for (int i = 0; i < m && n >= min_size; ++i) {
        const int size = draw(rng, min_size, std::min(max_size, n));
        VertexSet e;
        while (e.size() < size)
            e.insert(draw(rng, 1, n));
        edges.push_back(e);
    }
    return Hypergraph(n, edges);
}

inline Hypergraph random_graph(std::mt19937_64& rng, int n, int percent) {
    std::vector<VertexSet> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (draw(rng, 1, 100) <= percent)
                edges.push_back(VertexSet{u, v});
    return Hypergraph(n, edges);
}

inline SVector random_svector(std::mt19937_64& rng, int n, int max_entry) {
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int& x : s)
        x = draw(rng, 1, max_entry);
    return SVector(s);
}

/// Every graph on n labelled vertices.
inline std::vector<Hypergraph> all_graphs(int n) {
    std::vector<VertexSet> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            pairs.push_back(VertexSet{u, v});
    std::vector<Hypergraph> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
        std::vector<VertexSet> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((m >> i) & 1U)
                edges.push_back(pairs[i]);
        out.emplace_back(n, edges);
    }
    return out;
}

} // namespace testing_support
