#pragma once

// Brute-force reference implementations. They share only the data types with
// the library; every quantity is recomputed by literal enumeration.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kgh/hypergraph.hpp"

namespace oracle {

using kgh::Hypergraph;
using kgh::SVector;
using kgh::VertexSet;

inline constexpr int kDefectCap = 6;
inline constexpr int kChiCap = 12;
inline constexpr int kAltCap = 10;
inline constexpr int kAltSigmaCap = 6;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scans every edge, not only the minimal ones.
inline bool independent(const Hypergraph& h, std::uint64_t set) {
    for (VertexSet e : h.edges())
        if ((e.bits() & ~set) == 0)
            return false;
    return true;
}

/// n̄ minus the best sum of |N_j| over r-tuples of independent subsets of [n]
/// with each vertex i in at most s_i parts (and equitable sizes if asked).
inline int defect(const Hypergraph& h, int r, const SVector& s, bool equitable) {
    const int n = h.n();
    if (n > kDefectCap)
        throw CapExceeded("oracle::defect handles n <= 6");
    std::vector<std::uint64_t> indep;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (independent(h, m))
            indep.push_back(m);

    std::vector<std::uint64_t> tuple(static_cast<std::size_t>(r));
    int best = -1;
    auto evaluate = [&] {
        int total = 0, lo = 64, hi = 0;
        for (std::uint64_t p : tuple) {
            const int sz = __builtin_popcountll(p);
            total += sz;
            lo = std::min(lo, sz);
            hi = std::max(hi, sz);
        }
        if (equitable && hi - lo > 1)
            return;
        for (int v = 1; v <= n; ++v) {
            int count = 0;
            for (std::uint64_t p : tuple)
                count += static_cast<int>((p >> (v - 1)) & 1U);
            if (count > s.at(v))
                return;
        }
        best = std::max(best, total);
    };
    auto rec = [&](auto& self, int j) -> void {
        if (j == r) {
            evaluate();
            return;
        }
        for (std::uint64_t p : indep) {
            tuple[static_cast<std::size_t>(j)] = p;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return s.total() - best;
}

/// Smallest t with a proper t-coloring, by trying every assignment.
inline int chi(const Hypergraph& h) {
    const int n = h.n();
    if (n > kChiCap)
        throw CapExceeded("oracle::chi handles n <= 12");
    for (VertexSet e : h.edges())
        if (e.size() == 1)
            throw std::domain_error("singleton edge");
    if (n == 0)
        return 0;
    for (int t = 1;; ++t) {
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        while (true) {
            bool proper = true;
            for (VertexSet e : h.edges()) {
                const int first = c[static_cast<std::size_t>(e.min() - 1)];
                bool mono = true;
                for (int v : e)
                    if (c[static_cast<std::size_t>(v - 1)] != first)
                        mono = false;
                if (mono) {
                    proper = false;
                    break;
                }
            }
            if (proper)
                return t;
            int i = 0;
            while (i < n && ++c[static_cast<std::size_t>(i)] == t)
                c[static_cast<std::size_t>(i++)] = 0;
            if (i == n)
                break;
        }
    }
}

/// Longest subsequence of nonzero entries with consecutive terms distinct,
/// over every subset of positions.
inline int alt(const std::vector<int>& x) {
    const int n = static_cast<int>(x.size());
    if (n > kAltCap)
        throw CapExceeded("oracle::alt handles n <= 10");
    int best = 0;
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        int last = 0, len = 0;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!((m >> i) & 1U))
                continue;
            const int v = x[static_cast<std::size_t>(i)];
            if (v == 0 || v == last)
                ok = false;
            last = v;
            ++len;
        }
        if (ok)
            best = std::max(best, len);
    }
    return best;
}

/// max alt(X) over all X in {0..r}^n whose classes map under sigma to independent sets.
inline int alt_sigma(const Hypergraph& h, int r, const std::vector<int>& sigma) {
    const int n = h.n();
    if (n > kAltSigmaCap)
        throw CapExceeded("oracle::alt_sigma handles n <= 6");
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    int best = 0;
    while (true) {
        bool ok = true;
        for (int j = 1; j <= r && ok; ++j) {
            std::uint64_t cls = 0;
            for (int i = 0; i < n; ++i)
                if (x[static_cast<std::size_t>(i)] == j)
                    cls |= std::uint64_t{1} << (sigma[static_cast<std::size_t>(i)] - 1);
            ok = independent(h, cls);
        }
        if (ok)
            best = std::max(best, oracle::alt(x));
        int i = 0;
        while (i < n && ++x[static_cast<std::size_t>(i)] > r)
            x[static_cast<std::size_t>(i++)] = 0;
        if (i == n)
            return best;
    }
}

/// min over all n! orderings of alt_sigma.
inline int alt_r(const Hypergraph& h, int r) {
    std::vector<int> sigma(static_cast<std::size_t>(h.n()));
    for (int i = 0; i < h.n(); ++i)
        sigma[static_cast<std::size_t>(i)] = i + 1;
    int best = h.n() + 1;
    do
        best = std::min(best, oracle::alt_sigma(h, r, sigma));
    while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

/// All nondecreasing r-tuples of edge indices whose ground edges are s-disjoint.
inline std::vector<std::vector<int>> kneser_edges(const Hypergraph& h, int r, const SVector& s) {
    const int m = static_cast<int>(h.edge_count());
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<std::size_t>(r), 0);
    if (m == 0)
        return out;
    while (true) {
        bool sorted = std::is_sorted(idx.begin(), idx.end());
        if (sorted) {
            bool ok = true;
            for (int v = 1; v <= h.n() && ok; ++v) {
                int count = 0;
                for (int i : idx)
                    count += h.edges()[static_cast<std::size_t>(i)].contains(v) ? 1 : 0;
                ok = count <= s.at(v);
            }
            if (ok)
                out.push_back(idx);
        }
        int j = r - 1;
        while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == m)
            idx[static_cast<std::size_t>(j--)] = 0;
        if (j < 0)
            return out;
    }
}

/// Graph on the Kneser vertices whose edges are the supports of the multiset
/// edges; proper colorings of the two objects coincide.
inline Hypergraph kneser_support(const Hypergraph& h, int r, const SVector& s) {
    std::vector<VertexSet> edges;
    for (const auto& e : kneser_edges(h, r, s)) {
        VertexSet support;
        for (int i : e)
            support.insert(i + 1);
        edges.push_back(support);
    }
    return Hypergraph(static_cast<int>(h.edge_count()), edges);
}

inline int alpha(const Hypergraph& g) {
    int best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n()); ++m)
        if (independent(g, m))
            best = std::max(best, __builtin_popcountll(m));
    return best;
}

} // namespace oracle
