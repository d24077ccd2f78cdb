#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "maxcut/contraction.hpp"
#include "maxcut/error.hpp"
#include "maxcut/weight_matrix.hpp"

namespace maxcut {

/// Which of several equal-|w| edges is picked: the lexicographically smallest
/// (i, j) with i < j, or the largest. A contracted super-vertex is identified by
/// its smallest member vertex for this comparison, so ties resolve the same way
/// under either SurvivorRule.
enum class TieBreak { Lex, RevLex };

/// Which endpoint of the picked edge stays alive.
enum class SurvivorRule { KeepSmaller, KeepLarger };

/// Naive rescans every active pair per step (O(n^3) overall). Sorted keeps a
/// heap of pair weights with lazy invalidation (O(n^2 log n)).
enum class StabilizerEngine { Naive, Sorted };

struct StabilizerPolicy {
    TieBreak tieBreak = TieBreak::Lex;
    SurvivorRule survivorRule = SurvivorRule::KeepSmaller;
    /// Real-mode zero threshold; defaults to the matrix's epsilon. Ignored for integer matrices.
    std::optional<double> epsilon;
    StabilizerEngine engine = StabilizerEngine::Sorted;
};

std::string toString(TieBreak t);
std::string toString(SurvivorRule r);
std::string toString(StabilizerEngine e);

/// The signed edges collected by the contraction loop.
class StabilizerForest {
public:
    explicit StabilizerForest(std::size_t n = 0) : n_(n) {}

    /// Checks endpoints and sign; acyclicity is checked by isAcyclic()/propagateSigns().
    void add(SignedForestEdge e);

    std::size_t vertexCount() const { return n_; }
    const std::vector<SignedForestEdge> &edges() const { return edges_; }
    bool isAcyclic() const;

private:
    std::size_t n_;
    std::vector<SignedForestEdge> edges_;
};

/// Base vertex (smallest id) of every tree gets +1; every other vertex the
/// product of edge signs on its path from the base. Throws CorruptForest on a cycle.
std::vector<Spin> propagateSigns(const StabilizerForest &forest);

struct ContractionOutcome {
    Vertex removed;
    Vertex survivor;
};

/// Folds one endpoint of the picked edge (i, j) into the other:
/// w_sk <- w_sk + sign * w_rk for every other active k, then deactivates r.
/// sign must be -sign(w_ij).
template <typename T>
ContractionOutcome contractStep(WorkMatrix<T> &work, Vertex i, Vertex j, Spin sign, SurvivorRule rule) {
    if (i == j || !work.isActive(i) || !work.isActive(j)) {
        throw InvalidArgument("contraction endpoints must be two distinct active vertices");
    }
    const T w = work.at(i, j);
    if (w == T{}) {
        throw InvalidArgument("cannot contract a zero-weight edge");
    }
    if (sign != (w > T{} ? -1 : 1)) {
        throw InvalidArgument("contraction sign must be -sign(w_ij)");
    }
    const Vertex lo = std::min(i, j);
    const Vertex hi = std::max(i, j);
    const ContractionOutcome out = rule == SurvivorRule::KeepSmaller ? ContractionOutcome{hi, lo}
                                                                     : ContractionOutcome{lo, hi};
    work.fold(out.removed, out.survivor, sign);
    return out;
}

struct StabilizerResult {
    CutAssignment assignment;
    StabilizerForest forest;
    ContractionTrace trace;
};

/// Greedy max-|w| signed contraction followed by sign propagation over the
/// resulting forest. The cut weight is recomputed on the original matrix.
StabilizerResult stabilizerSolve(const WeightMatrix &w, const StabilizerPolicy &policy = {});

} // namespace maxcut
