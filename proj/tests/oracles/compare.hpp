#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kgh/kgh.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

namespace oracle {

/// Compares one instance against every oracle whose cap it fits under.
/// Returns a description of the first disagreement.
inline std::optional<std::string> compare_with_library(const kgh::Hypergraph& h, const kgh::SVector& s, int r) {
    const int n = h.n();
    std::ostringstream where;
    where << "n=" << n << " r=" << r << " edges=" << h.edge_count() << ": ";
    auto mismatch = [&](const std::string& what, long long lib, long long ref) {
        std::ostringstream out;
        out << where.str() << what << " library " << lib << " oracle " << ref;
        return out.str();
    };
    if (n <= kDefectCap) {
        const int c = kgh::cd(h, r, s).value, c_ref = defect(h, r, s, false);
        if (c != c_ref)
            return mismatch("cd", c, c_ref);
        const int e = kgh::ecd(h, r, s).value, e_ref = defect(h, r, s, true);
        if (e != e_ref)
            return mismatch("ecd", e, e_ref);
    }
    auto kg = kgh::build_kneser_s(h, r, s);
    if (kg.edges() != kneser_edges(h, r, s))
        return where.str() + "Kneser edge lists differ";
    if (s.all_ones() && n <= kAltSigmaCap) {
        std::vector<int> sigma(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            sigma[static_cast<std::size_t>(i)] = n - i;
        const int a = kgh::alt_sigma(h, r, sigma).value, a_ref = oracle::alt_sigma(h, r, sigma);
        if (a != a_ref)
            return mismatch("alt_sigma", a, a_ref);
        if (n <= 5) {
            const int ar = kgh::alt_r(h, r).value, ar_ref = oracle::alt_r(h, r);
            if (ar != ar_ref)
                return mismatch("alt_r", ar, ar_ref);
        }
    }
    if (kg.vertex_count() <= kChiCap && !kg.coloring_instance().has_singleton_edge()) {
        const int x = kgh::chromatic_number(kg.coloring_instance(), 20).value;
        const int x_ref = chi(kneser_support(h, r, s));
        if (x != x_ref)
            return mismatch("chi", x, x_ref);
    }
    return std::nullopt;
}

/// Every hypergraph on at most 3 vertices with s = 1 and s = 2, and every graph on 4.
template <typename Fn>
void for_each_small_instance(Fn&& fn) {
    using kgh::VertexSet;
    for (int n = 1; n <= 3; ++n) {
        std::vector<VertexSet> nonempty;
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
            nonempty.push_back(VertexSet(m));
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << nonempty.size()); ++pick) {
            std::vector<VertexSet> edges;
            for (std::size_t i = 0; i < nonempty.size(); ++i)
                if ((pick >> i) & 1U)
                    edges.push_back(nonempty[i]);
            kgh::Hypergraph h(n, edges);
            for (int r = 2; r <= 3; ++r) {
                fn(h, kgh::SVector::ones(n), r);
                fn(h, kgh::SVector::constant(n, 2), r);
            }
        }
    }
    for (const auto& g : testing_support::all_graphs(4))
        for (int r = 2; r <= 3; ++r)
            fn(g, kgh::SVector::ones(4), r);
}

/// 500 seeded random instances with n <= 6.
template <typename Fn>
void for_each_random_instance(Fn&& fn) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = testing_support::draw(rng, 1, 6);
        auto h = testing_support::random_hypergraph(rng, n, 8, 1, 4);
        const int r = testing_support::draw(rng, 2, 3);
        auto s = trial % 3 == 0 ? testing_support::random_svector(rng, n, 2) : kgh::SVector::ones(n);
        fn(h, s, r);
    }
}

} // namespace oracle
