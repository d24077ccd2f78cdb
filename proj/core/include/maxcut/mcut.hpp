#pragma once

#include <string_view>

#include "maxcut/weight_matrix.hpp"

namespace maxcut {

/// Reads the MCUT text format:
///
///     # comment
///     n m
///     i j w      (m lines, 1 <= i < j <= n)
///
/// Unlisted pairs weigh 0. A weight without '.' or exponent is an integer.
/// Errors are ParseError carrying the offending line number.
WeightMatrix parseMcut(std::string_view text);

} // namespace maxcut
