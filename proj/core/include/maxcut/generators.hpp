#pragma once

#include <cstddef>
#include <cstdint>

#include "maxcut/weight_matrix.hpp"

namespace maxcut {

/// Complete graph with integer weights drawn uniformly from [lo, hi].
WeightMatrix randomIntegerGraph(std::size_t n, std::int64_t lo, std::int64_t hi, std::uint64_t seed);

/// Complete graph with real weights drawn uniformly from [lo, hi).
WeightMatrix randomRealGraph(std::size_t n, double lo, double hi, std::uint64_t seed);

} // namespace maxcut
