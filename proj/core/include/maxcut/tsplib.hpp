#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxcut/weight_matrix.hpp"

namespace maxcut {

enum class EdgeWeightType { Explicit, Euc2D };

enum class EdgeWeightFormat { FullMatrix, UpperRow, LowerRow, UpperDiagRow, LowerDiagRow };

std::string toString(EdgeWeightType t);
std::string toString(EdgeWeightFormat f);

/// The subset of a TSPLIB-95 file needed to build a weight matrix.
struct TsplibInstance {
    std::string name;
    std::size_t dimension = 0;
    EdgeWeightType weightType = EdgeWeightType::Explicit;
    std::optional<EdgeWeightFormat> weightFormat; // EXPLICIT only
    std::vector<std::pair<double, double>> coords; // EUC_2D, indexed by node id - 1
    std::vector<std::int64_t> explicitWeights;     // EXPLICIT, in file order
};

/// Number of EDGE_WEIGHT_SECTION values a format carries for n nodes.
std::size_t explicitWeightCount(EdgeWeightFormat f, std::size_t n);

/// Parses NAME, DIMENSION, EDGE_WEIGHT_TYPE, EDGE_WEIGHT_FORMAT and the data
/// sections. Other keywords are ignored; DISPLAY_DATA_SECTION is read and dropped.
/// Throws UnsupportedFormat for weight types other than EXPLICIT and EUC_2D,
/// ParseError for missing keywords, truncated sections and bad tokens.
TsplibInstance parseTsplib(std::string_view text);

/// TSPLIB nint: floor(x + 0.5).
std::int64_t tsplibNint(double x);

/// Symmetric integer matrix with zero diagonal. EUC_2D distances are rounded with nint.
WeightMatrix toWeightMatrix(const TsplibInstance &inst);

} // namespace maxcut
