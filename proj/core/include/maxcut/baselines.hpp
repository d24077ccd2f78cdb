#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "maxcut/contraction.hpp"
#include "maxcut/weight_matrix.hpp"

namespace maxcut {

// Edge contraction (EC): contract the minimum-weight edge with additive
// folding until a single edge is left; its weight is the cut.
struct EcResult {
    CutAssignment assignment;
    ContractionTrace trace;
    /// Weight of the last remaining edge. Equals assignment.cutWeight.
    Weight finalEdgeWeight;
};

EcResult ecSolve(const WeightMatrix &w);

// Differencing edge contraction (DEC).

enum class DecDirection { MaxTotal, KeepSmaller, KeepLarger };

struct DecPolicy {
    DecDirection direction = DecDirection::MaxTotal;
};

std::string toString(DecDirection d);

struct DecResult {
    CutAssignment assignment;
    ContractionTrace trace;
    /// Number of minus signs in front of each vertex in its super-vertex label
    /// (e.g. 1-(2-3) gives 0, 1, 2). Even goes to U, odd to D.
    std::vector<std::size_t> minusSigns;
};

DecResult decSolve(const WeightMatrix &w, const DecPolicy &policy = {});

// Sahni-Gonzalez sequential assignment.

/// Visiting order for sequential greedy: an explicit permutation (SG) or
/// "adaptive", which picks the vertex with the largest |w(i,U) - w(i,D)| (SG3).
class SgOrder {
public:
    static SgOrder natural(std::size_t n);
    static SgOrder explicitOrder(std::vector<Vertex> order);
    static SgOrder adaptive() { return SgOrder(); }

    bool isAdaptive() const { return !order_.has_value(); }
    const std::vector<Vertex> &order() const;

private:
    SgOrder() = default;
    std::optional<std::vector<Vertex>> order_;
};

/// Requires an explicit order; throws InvalidArgument if it is not a permutation of 0..n-1.
CutAssignment sgSolve(const WeightMatrix &w, const SgOrder &order);
CutAssignment sgSolve(const WeightMatrix &w);

CutAssignment sg3Solve(const WeightMatrix &w);

} // namespace maxcut
