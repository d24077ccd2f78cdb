#pragma once

#include <cstddef>
#include <cstdint>

#include "maxcut/weight_matrix.hpp"

namespace maxcut {

struct OracleResult {
    Weight optimalWeight;
    /// Lexicographically smallest optimal z with z[0] = +1 (-1 sorts before +1).
    CutAssignment witness;
    /// Assignments examined: 2^(n-1).
    std::uint64_t enumerated = 0;
};

inline constexpr std::size_t kDefaultOracleLimit = 24;

/// Exhaustive Max-Cut by Gray-code enumeration with O(n) incremental updates.
/// Throws SizeLimitError when w.size() > maxN.
OracleResult bruteForce(const WeightMatrix &w, std::size_t maxN = kDefaultOracleLimit);

/// Reference path: re-evaluates every assignment from scratch. Limited to n <= 16.
OracleResult bruteForceNaive(const WeightMatrix &w);

} // namespace maxcut
