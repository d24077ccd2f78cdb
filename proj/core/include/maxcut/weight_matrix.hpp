#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "maxcut/weight.hpp"

namespace maxcut {

/// Vertex ids are 0-based in the library API. Files, traces and the CLI use 1-based ids.
using Vertex = std::size_t;

/// Per-vertex side label, always -1 or +1.
using Spin = std::int8_t;

/// One listed edge for buildMatrix, with 1-based endpoints and i < j.
struct EdgeEntry {
    std::size_t i;
    std::size_t j;
    Weight w;
};

/// Dense symmetric weight matrix of a complete graph with zero diagonal.
///
/// The matrix is immutable after construction. Integer-exact matrices store
/// int64 cells and every solver keeps them exact; real matrices store doubles
/// and carry a zero threshold used wherever an algorithm compares a weight to 0.
class WeightMatrix {
public:
    /// Builds from 1-based (i, j, w) entries; unlisted pairs are 0. Integer-exact
    /// iff every weight is integral.
    static WeightMatrix build(std::size_t n, std::span<const EdgeEntry> entries);

    /// Row-major n*n cells. Must be symmetric with a zero diagonal.
    static WeightMatrix fromDense(std::size_t n, std::vector<std::int64_t> cells);
    static WeightMatrix fromDense(std::size_t n, std::vector<double> cells);

    std::size_t size() const { return n_; }
    ArithmeticMode mode() const { return isInteger() ? ArithmeticMode::IntegerExact : ArithmeticMode::Real; }
    bool isInteger() const { return std::holds_alternative<std::vector<std::int64_t>>(cells_); }

    /// 0-based access.
    Weight at(Vertex i, Vertex j) const;

    template <typename T>
    std::span<const T> cells() const {
        return std::get<std::vector<T>>(cells_);
    }

    /// Calls f(std::span<const T>) with T = int64_t or double.
    template <typename F>
    decltype(auto) visit(F &&f) const {
        return std::visit([&](const auto &v) -> decltype(auto) { return f(std::span(v)); }, cells_);
    }

    /// 0 in integer mode; in real mode 1e-9 * max |w| unless overridden.
    double epsilon() const { return epsilon_; }
    WeightMatrix withEpsilon(double eps) const;

    const std::vector<std::string> &names() const { return names_; }
    void setNames(std::vector<std::string> names);

    /// Reinterprets integral real cells as integers; throws if any is not integral.
    WeightMatrix toInteger() const;
    WeightMatrix toReal() const;

private:
    WeightMatrix() = default;
    void validate() const;
    void initEpsilon();

    std::size_t n_ = 0;
    std::variant<std::vector<std::int64_t>, std::vector<double>> cells_;
    double epsilon_ = 0.0;
    std::vector<std::string> names_;
};

/// Vertex labels in {-1,+1}; U is the +1 side, D the -1 side.
struct CutAssignment {
    std::vector<Spin> z;
    Weight cutWeight;

    std::vector<Vertex> upper() const;
    std::vector<Vertex> lower() const;
};

/// Sum of weights of the edges whose endpoints carry opposite labels.
Weight cutWeight(const WeightMatrix &w, std::span<const Spin> z);

/// Sum of w_ij over i < j.
Weight totalWeight(const WeightMatrix &w);

/// (w(i,U), w(i,D)). i must be in neither set and the sets must be disjoint.
std::pair<Weight, Weight> sideWeights(const WeightMatrix &w, Vertex i, std::span<const Vertex> upper,
                                      std::span<const Vertex> lower);

/// Fills cutWeight from z and returns the assignment.
CutAssignment makeAssignment(const WeightMatrix &w, std::vector<Spin> z);

void checkSpins(std::span<const Spin> z, std::size_t n);

} // namespace maxcut
