#pragma once

#include <cstddef>
#include <cstdint>

namespace kgh {

/// Size limits for the exact kernels. Exceeding one raises ResourceError.
struct Guards {
    /// Ground vertex count accepted by the defect and theorem kernels.
    int max_n = 24;
    /// Vertex count accepted by alt^r (n! orderings).
    int max_alt_n = 9;
    /// Vertex count accepted by the removal-based brute-force defects (2^n subsets).
    int max_removal_n = 16;
    std::size_t max_independent_sets = std::size_t{1} << 22;
    std::size_t max_kneser_vertices = 5000;
    std::size_t max_kneser_edges = 10'000'000;
    std::uint64_t node_budget = 200'000'000;
};

} // namespace kgh
