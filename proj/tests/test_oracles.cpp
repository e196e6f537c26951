#include <gtest/gtest.h>

#include <random>

#include "kgh/kgh.hpp"
#include "oracles/compare.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace kgh;

TEST(Oracles, Examples) {
    // K_{2,3}: t=2, c=1, so ecd^2 = min{2, 0} = 0.
    EXPECT_EQ(oracle::defect(complete_multipartite({2, 3}), 2, SVector::ones(5), true), 0);
    EXPECT_EQ(oracle::defect(complete_uniform(4, 2), 2, SVector::ones(4), true), 2);
    EXPECT_EQ(oracle::defect(Hypergraph(4, {}), 2, SVector::ones(4), true), 0);
    EXPECT_THROW(oracle::defect(complete_multipartite({2, 5}), 2, SVector::ones(7), true), oracle::CapExceeded);

    EXPECT_EQ(oracle::chi(complete_uniform(4, 2)), 4);
    EXPECT_EQ(oracle::chi(oracle::kneser_support(complete_uniform(5, 2), 2, SVector::ones(5))), 3);
    EXPECT_EQ(oracle::chi(Hypergraph(5, {})), 1);

    EXPECT_EQ(oracle::alt({1, 2, 0, 2}), 2);
    EXPECT_EQ(oracle::alt({1, 2, 1}), 3);
    EXPECT_EQ(oracle::alt_sigma(Hypergraph::from_lists(2, {{1, 2}}), 2, {1, 2}), 2);
}

TEST(Oracles, ExhaustiveSmallGrid) {
    int count = 0;
    oracle::for_each_small_instance([&](const Hypergraph& h, const SVector& s, int r) {
        auto diff = oracle::compare_with_library(h, s, r);
        ASSERT_FALSE(diff.has_value()) << *diff;
        ++count;
    });
    EXPECT_GT(count, 500);
}

TEST(Oracles, FiveHundredRandomInstances) {
    int count = 0;
    oracle::for_each_random_instance([&](const Hypergraph& h, const SVector& s, int r) {
        auto diff = oracle::compare_with_library(h, s, r);
        ASSERT_FALSE(diff.has_value()) << *diff;
        ++count;
    });
    EXPECT_EQ(count, 500);
}

TEST(Oracles, AltValueOnAllShortVectors) {
    for (int n = 0; n <= 6; ++n) {
        std::vector<int> x(static_cast<std::size_t>(n), 0);
        while (true) {
            ASSERT_EQ(alt_value(AltVector(3, x)), oracle::alt(x));
            int i = 0;
            while (i < n && ++x[static_cast<std::size_t>(i)] > 3)
                x[static_cast<std::size_t>(i++)] = 0;
            if (i == n)
                break;
        }
    }
}
