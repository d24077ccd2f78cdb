#pragma once

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "maxcut/weight_matrix.hpp"

namespace maxcut {

/// Forest edge (i, j) with relative sign z_i * z_j.
struct SignedForestEdge {
    Vertex i;
    Vertex j;
    Spin sign;

    friend bool operator==(const SignedForestEdge &, const SignedForestEdge &) = default;
};

struct ContractionStep {
    Vertex i;
    Vertex j;
    Weight weightAtPick;
    Spin sign;
    Vertex removed;
    Vertex survivor;

    friend bool operator==(const ContractionStep &, const ContractionStep &) = default;
};

struct ContractionTrace {
    std::vector<ContractionStep> steps;

    friend bool operator==(const ContractionTrace &, const ContractionTrace &) = default;
};

/// One line per step, 1-based: "step i j weight_at_pick sign removed survivor".
void writeTrace(std::ostream &os, const ContractionTrace &trace);
std::string formatTrace(const ContractionTrace &trace);

/// Mutable copy of a weight matrix plus the set of vertices still alive.
///
/// fold() is the single update rule shared by all contraction heuristics:
/// the removed vertex's row is added into the survivor's with a +-1 coefficient.
template <typename T>
class WorkMatrix {
public:
    explicit WorkMatrix(const WeightMatrix &w)
        : n_(w.size()), cells_(w.cells<T>().begin(), w.cells<T>().end()), active_(n_, true), activeList_(n_) {
        for (Vertex v = 0; v < n_; ++v) {
            activeList_[v] = v;
        }
    }

    std::size_t size() const { return n_; }
    T at(Vertex i, Vertex j) const { return cells_[i * n_ + j]; }
    bool isActive(Vertex v) const { return v < n_ && active_[v]; }
    std::size_t activeCount() const { return activeList_.size(); }

    /// Active vertices in increasing order.
    std::span<const Vertex> activeVertices() const { return activeList_; }

    void fold(Vertex removed, Vertex survivor, int coeff) {
        T *dst = cells_.data() + survivor * n_;
        const T *src = cells_.data() + removed * n_;
        for (Vertex k : activeList_) {
            if (k == survivor || k == removed) {
                continue;
            }
            const T updated = coeff > 0 ? arith::add(dst[k], src[k]) : arith::sub(dst[k], src[k]);
            dst[k] = updated;
            cells_[k * n_ + survivor] = updated;
        }
        deactivate(removed);
    }

    void deactivate(Vertex v) {
        active_[v] = false;
        activeList_.erase(std::lower_bound(activeList_.begin(), activeList_.end(), v));
    }

private:
    std::size_t n_;
    std::vector<T> cells_;
    std::vector<bool> active_;
    std::vector<Vertex> activeList_;
};

} // namespace maxcut
