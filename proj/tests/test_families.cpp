#include <gtest/gtest.h>

#include <random>

#include "kgh/kgh.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace kgh;

TEST(Hnka, Examples) {
    EXPECT_EQ(hnka(HnkaParams(5, 2, 2, VertexSet{1, 2, 3}, true)).edge_count(), 7u);
    EXPECT_EQ(hnka(HnkaParams(9, 3, 2, VertexSet{})).edge_count(), binomial(9, 3));
    EXPECT_EQ(hnka(HnkaParams(4, 2, 2, VertexSet{1, 2})).edge_count(), 5u);
}

TEST(Hnka, EdgeCountAndValidation) {
    for (int n = 4; n <= 9; ++n)
        for (int a = 0; a < n; ++a)
            EXPECT_EQ(hnka(HnkaParams::prefix(n, 2, 2, a)).edge_count(), binomial(n, 2) - binomial(a, 2));
    EXPECT_THROW(HnkaParams(5, 3, 2, VertexSet{}), InputError);
    EXPECT_NO_THROW(HnkaParams(5, 3, 2, VertexSet{}, true));
    EXPECT_THROW(HnkaParams(4, 2, 2, VertexSet::full(4)), InputError);
    EXPECT_THROW(HnkaParams(4, 2, 1, VertexSet{}), InputError);
}

TEST(ClosedForms, Examples) {
    EXPECT_EQ(cd_hnka_closed(HnkaParams::prefix(6, 2, 2, 0)), 4);
    EXPECT_EQ(cd_hnka_closed(HnkaParams::prefix(8, 2, 2, 3)), 4);
    EXPECT_EQ(cd_hnka_closed(HnkaParams::prefix(10, 2, 3, 3)), 5);
    EXPECT_EQ(ecd_hnka_closed(HnkaParams::prefix(9, 3, 2, 2)), 5);
    EXPECT_EQ(ecd_hnka_closed(HnkaParams::prefix(10, 2, 3, 3)), 6);
    EXPECT_EQ(ecd_hnka_closed(HnkaParams::prefix(8, 2, 2, 3)), 5);
}

// The cd formula drops below zero once |A| + (r-1)(k-1) exceeds n, where the
// enumerated defect is 0. Within the n <= 9, k, r in {2,3} sweep this happens
// only at n=9, k=3, r=3, |A|=6; every other point matches.
TEST(ClosedForms, AgreeWithEnumerationOnSmallGrid) {
    int points = 0;
    for (int n = 4; n <= 9; ++n)
        for (int k = 2; k <= 3; ++k)
            for (int r = 2; r <= 3; ++r) {
                if (n < r * k)
                    continue;
                for (int a = 0; a <= n - k; ++a) {
                    auto p = HnkaParams::prefix(n, k, r, a);
                    auto h = hnka(p);
                    ++points;
                    EXPECT_EQ(ecd(h, r).value, ecd_hnka_closed(p)) << n << k << r << a;
                    const int enumerated = cd(h, r).value;
                    if (n == 9 && k == 3 && r == 3 && a == 6) {
                        EXPECT_EQ(cd_hnka_closed(p), -1);
                        EXPECT_EQ(enumerated, 0);
                    } else {
                        EXPECT_EQ(enumerated, cd_hnka_closed(p)) << n << k << r << a;
                    }
                }
            }
    EXPECT_EQ(points, 88);
}

TEST(ClosedForms, CdIsTheClampedFormulaEverywhere) {
    for (int n = 4; n <= 11; ++n)
        for (int k = 2; k <= 3; ++k)
            for (int r = 2; r <= 4; ++r) {
                if (n < r * k)
                    continue;
                for (int a = 0; a < n; ++a) {
                    auto p = HnkaParams::prefix(n, k, r, a);
                    EXPECT_EQ(cd(hnka(p), r).value, std::max<long long>(0, cd_hnka_closed(p)));
                }
            }
}

TEST(AltWitness, Examples) {
    auto r2 = alt_witness_hnka(HnkaParams(6, 2, 2, VertexSet{1, 2, 3}), identity_ordering(6));
    EXPECT_EQ(r2.claimed, 3);
    EXPECT_EQ(alt_value(r2.x), 3);
    auto r3 = alt_witness_hnka(HnkaParams(10, 2, 3, VertexSet{1, 2, 3}), identity_ordering(10));
    EXPECT_EQ(r3.claimed, 4);
    EXPECT_EQ(alt_value(r3.x), 4);
    auto block = alt_witness_hnka(HnkaParams(9, 3, 2, VertexSet{}), identity_ordering(9));
    EXPECT_EQ(block.construction, "block");
    EXPECT_EQ(alt_value(block.x), 4);
}

namespace {

void check_witness(const HnkaParams& p, const Ordering& sigma, const Hypergraph& h) {
    auto w = alt_witness_hnka(p, sigma);
    ASSERT_EQ(alt_value(w.x), w.claimed) << w.construction;
    for (int j = 1; j <= p.r; ++j)
        ASSERT_TRUE(is_independent(h, image(sigma, w.x.positions(j))))
            << w.construction << " n=" << p.n << " k=" << p.k << " r=" << p.r << " a=" << p.a();
    ASSERT_LE(alt_gap_upper_hnka(p), p.n - w.claimed);
}

} // namespace

TEST(AltWitness, ValidForEveryOrderingUpToSeven) {
    for (int n = 4; n <= 7; ++n)
        for (int k = 2; k <= 3; ++k)
            for (int r = 2; r <= 5; ++r) {
                if (n < r * k)
                    continue;
                for (int a = 0; a < n; ++a) {
                    auto p = HnkaParams::prefix(n, k, r, a);
                    auto h = hnka(p);
                    Ordering sigma = identity_ordering(n);
                    do
                        check_witness(p, sigma, h);
                    while (std::next_permutation(sigma.begin(), sigma.end()));
                }
            }
}

TEST(AltWitness, ValidForSampledOrderingsAndScatteredA) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 400; ++trial) {
        const int k = testing_support::draw(rng, 2, 3);
        const int r = testing_support::draw(rng, 2, 6);
        const int n = testing_support::draw(rng, r * k, std::min(20, r * k + 6));
        VertexSet A;
        const int a = testing_support::draw(rng, 0, n - 1);
        while (A.size() < a)
            A.insert(testing_support::draw(rng, 1, n));
        HnkaParams p(n, k, r, A);
        Ordering sigma = identity_ordering(n);
        for (std::size_t i = sigma.size(); i > 1; --i)
            std::swap(sigma[i - 1], sigma[rng() % i]);
        check_witness(p, sigma, hnka(p));
    }
}

TEST(AltWitness, BoundsTheExactAlternationNumber) {
    for (int n = 4; n <= 8; ++n)
        for (int r = 2; r <= 3; ++r) {
            if (n < 2 * r)
                continue;
            for (int a = 0; a < n; ++a) {
                auto p = HnkaParams::prefix(n, 2, r, a);
                const int exact = alt_r(hnka(p), r).value;
                EXPECT_LE(n - exact, alt_gap_upper_hnka(p));
            }
        }
}

TEST(AflColoring, Examples) {
    struct Case {
        int n, k, r, t;
    };
    for (auto c : {Case{5, 2, 2, 3}, Case{9, 2, 3, 3}, Case{6, 3, 2, 2}}) {
        auto col = afl_coloring(c.n, c.k, c.r);
        EXPECT_EQ(col.palette_size(), c.t);
        EXPECT_TRUE(build_kneser(complete_uniform(c.n, c.k), c.r).is_proper(col));
    }
    EXPECT_THROW(afl_coloring(5, 3, 2), InputError);
}

TEST(AflColoring, ProperOnAGrid) {
    for (int n = 4; n <= 11; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int r = 2; r <= 4; ++r) {
                if (n < r * k || binomial(n, k) > 200)
                    continue;
                auto col = afl_coloring(n, k, r);
                EXPECT_TRUE(build_kneser(complete_uniform(n, k), r).is_proper(col)) << n << k << r;
            }
}

TEST(HnkaColorings, Examples) {
    auto a = prop1_coloring(HnkaParams(8, 2, 2, VertexSet{1, 2, 3}));
    EXPECT_EQ(a.coloring.palette_size(), 5);
    EXPECT_EQ(a.combined_upper, 5);
    auto b = prop1_coloring(HnkaParams(6, 2, 2, VertexSet{}));
    EXPECT_EQ(b.coloring.palette_size(), 6);
    EXPECT_EQ(b.combined_upper, 4);
    auto c = prop1_coloring(HnkaParams(10, 2, 3, VertexSet::full(7)));
    EXPECT_EQ(c.coloring.palette_size(), 2);
}

TEST(HnkaColorings, BothColoringsProper) {
    for (int n = 4; n <= 10; ++n)
        for (int k = 2; k <= 3; ++k)
            for (int r = 2; r <= 3; ++r) {
                if (n < r * k)
                    continue;
                for (int a = 0; a < n; ++a) {
                    auto p = HnkaParams::prefix(n, k, r, a);
                    auto kg = build_kneser(hnka(p), r);
                    auto c = prop1_coloring(p);
                    ASSERT_TRUE(kg.is_proper(c.coloring));
                    ASSERT_TRUE(kg.is_proper(c.afl));
                    ASSERT_EQ(c.combined_upper, chi_hnka_closed(p).upper);
                }
            }
}

TEST(ChiClosed, Examples) {
    auto a = chi_hnka_closed(HnkaParams::prefix(8, 2, 2, 3));
    EXPECT_TRUE(a.exact);
    EXPECT_EQ(a.upper, 5);
    EXPECT_TRUE(a.hypothesis_holds);
    auto b = chi_hnka_closed(HnkaParams::prefix(9, 3, 2, 5));
    EXPECT_FALSE(b.hypothesis_holds);
    EXPECT_LE(b.lower, b.upper);
    auto c = chi_hnka_closed(HnkaParams::prefix(20, 2, 4, 5));
    EXPECT_EQ(c.lower, 5);
    EXPECT_EQ(c.upper, 5);
    EXPECT_TRUE(c.exact);
}

TEST(ChiClosed, ExactCasesMatchSolver) {
    int checked = 0;
    for (int n = 4; n <= 10; ++n)
        for (int k = 2; k <= 3; ++k)
            for (int r = 2; r <= 3; ++r) {
                if (n < 2 * r * k)
                    continue;
                for (int a = 0; a < n; ++a) {
                    auto p = HnkaParams::prefix(n, k, r, a);
                    auto closed = chi_hnka_closed(p);
                    auto h = hnka(p);
                    if (h.edge_count() > 40)
                        continue;
                    const int chi = chromatic_number(build_kneser(h, r).coloring_instance(), 40).value;
                    EXPECT_GE(chi, closed.lower);
                    EXPECT_LE(chi, closed.upper);
                    if (closed.exact && (a <= 2 * (k - 1) || a >= r * k - 1)) {
                        EXPECT_EQ(chi, closed.upper) << n << k << r << a;
                        ++checked;
                    }
                }
            }
    EXPECT_GT(checked, 5);
}

TEST(Multipartite, Examples) {
    EXPECT_EQ(complete_multipartite({2, 5}).edge_count(), 10u);
    EXPECT_EQ(complete_multipartite({1, 1, 6}).n(), 8);
    EXPECT_EQ(complete_multipartite({3, 3}).edge_count(), 9u);
    EXPECT_THROW(complete_multipartite({3}), InputError);
}

TEST(Multipartite, BipartiteEcdIdentity) {
    for (int t = 1; t <= 4; ++t)
        for (int c = 1; c <= 4; ++c)
            EXPECT_EQ(ecd(complete_multipartite({t, t + c}), 2).value, std::min(t, c - 1)) << t << c;
}

TEST(Multipartite, BalancedPartsHaveZeroEcd) {
    for (int r = 2; r <= 3; ++r)
        for (int n = 1; n <= 3; ++n) {
            auto k = complete_multipartite(std::vector<int>(static_cast<std::size_t>(r), n));
            EXPECT_EQ(ecd(k, r).value, 0);
            const int gap = r * n - alt_sigma(k, r, identity_ordering(r * n)).value;
            if (n == 1) {
                // K is the complete graph K_r; X = (1, 2, ..., r) alternates fully.
                EXPECT_EQ(gap, 0);
            } else if (r % 2 == 0) {
                EXPECT_EQ(gap, r / 2 * n);
            } else {
                EXPECT_EQ(gap, (r + 1) / 2 * n - 1);
            }
        }
}

TEST(Gbar, Examples) {
    auto k3 = complete_uniform(3, 2);
    auto a = gbar(k3, 2);
    EXPECT_EQ(a.n(), 6);
    EXPECT_EQ(a, complete_uniform(6, 2));
    auto p3 = Hypergraph::from_lists(3, {{1, 2}, {2, 3}});
    EXPECT_EQ(gbar(p3, 2).edge_count(), 13u);
    auto e2 = gbar(Hypergraph(2, {}), 2);
    EXPECT_EQ(e2.n(), 4);
    EXPECT_EQ(e2.edge_count(), 4u);
    EXPECT_THROW(gbar(complete_uniform(3, 3), 2), InputError);
}

TEST(IndependenceNumber, Examples) {
    EXPECT_EQ(independence_number(complete_uniform(3, 2)).alpha, 1);
    EXPECT_EQ(independence_number(Hypergraph::from_lists(3, {{1, 2}, {2, 3}})).alpha, 2);
    EXPECT_EQ(independence_number(Hypergraph(5, {})).alpha, 5);
}

TEST(IndependenceNumber, MatchesSubsetEnumeration) {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = testing_support::random_graph(rng, testing_support::draw(rng, 1, 12), 40);
        auto res = independence_number(g);
        ASSERT_EQ(res.alpha, oracle::alpha(g));
        ASSERT_EQ(res.witness.size(), res.alpha);
        ASSERT_TRUE(is_independent(g, res.witness));
    }
}

TEST(GbarIdentity, Examples) {
    auto a = verify_gbar_identity(complete_uniform(3, 2), 2);
    EXPECT_EQ(a.ecd, 4);
    EXPECT_TRUE(a.holds);
    auto b = verify_gbar_identity(Hypergraph::from_lists(3, {{1, 2}, {2, 3}}), 2);
    EXPECT_EQ(b.ecd, 2);
    EXPECT_TRUE(b.holds);
    EXPECT_TRUE(verify_gbar_identity(Hypergraph(3, {}), 3).holds);
}

TEST(GbarIdentity, AllGraphsOnFourVertices) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : testing_support::all_graphs(n))
            for (int r = 2; r <= 3; ++r)
                ASSERT_TRUE(verify_gbar_identity(g, r).holds);
}

TEST(Augmented, DefectsFollowTheBaseGraph) {
    // U-augmented construction: cd^r(H) = cd^{r-1}(F) and ecd^r(H) = |V(F)| once m >= r(|V(F)|+1).
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = testing_support::draw(rng, 2, 3);
        auto f = testing_support::random_graph(rng, n, 60);
        const int r = 3;
        auto h = augment_with_universal(f, r * (n + 1));
        EXPECT_EQ(cd(h, r).value, cd(f, r - 1).value);
        EXPECT_EQ(ecd(h, r).value, n);
    }
}

TEST(Conjecture, Examples) {
    auto a = conjecture_point(8, 2, 2, 3, 200, 10'000'000);
    EXPECT_EQ(a.verdict, Verdict::matches);
    EXPECT_EQ(a.chi, 5);
    auto b = conjecture_point(10, 2, 3, 3, 200, 10'000'000);
    EXPECT_EQ(b.conjectured, 4);
    EXPECT_NE(b.verdict, Verdict::skipped);
    auto c = conjecture_point(8, 2, 2, 2, 200, 10'000'000);
    EXPECT_EQ(c.verdict, Verdict::skipped);
}

TEST(Conjecture, GridIsOrderedAndGuarded) {
    ConjectureGrid g;
    g.n = {6, 8};
    g.k = {2, 2};
    g.r = {2, 3};
    g.max_kg_vertices = 20;
    auto pts = explore_conjecture(g);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        auto key = [](const ConjecturePoint& p) { return std::tie(p.n, p.k, p.r, p.a); };
        EXPECT_LT(key(pts[i - 1]), key(pts[i]));
    }
    for (const auto& p : pts) {
        if (p.kg_vertices > 20) {
            EXPECT_EQ(p.verdict, Verdict::skipped);
        }
    }
}
