#include "maxcut/weight_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace maxcut {

namespace {

template <typename T>
T sumCut(std::span<const T> cells, std::size_t n, std::span<const Spin> z) {
    T total{};
    for (std::size_t i = 0; i < n; ++i) {
        const T *row = cells.data() + i * n;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (z[i] != z[j]) {
                total = arith::add(total, row[j]);
            }
        }
    }
    return total;
}

} // namespace

WeightMatrix WeightMatrix::build(std::size_t n, std::span<const EdgeEntry> entries) {
    if (n < 1) {
        throw InvalidArgument("matrix needs at least one vertex");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    bool integral = true;
    for (const auto &e : entries) {
        const std::string pair = "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
        if (e.i < 1 || e.j < 1 || e.i > n || e.j > n || e.i == e.j) {
            throw InvalidArgument("edge " + pair + " out of range for n = " + std::to_string(n));
        }
        // (1,2) followed by (2,1) is reported as a duplicate, not as an ordering error.
        if (!seen.emplace(std::min(e.i, e.j), std::max(e.i, e.j)).second) {
            throw InvalidArgument("duplicate edge " + pair);
        }
        if (e.i > e.j) {
            throw InvalidArgument("edge " + pair + " needs i < j");
        }
        integral = integral && e.w.isIntegral();
    }

    WeightMatrix m;
    m.n_ = n;
    if (integral) {
        std::vector<std::int64_t> cells(n * n, 0);
        for (const auto &e : entries) {
            const auto v = e.w.isInteger() ? e.w.asInteger() : static_cast<std::int64_t>(e.w.toDouble());
            cells[(e.i - 1) * n + (e.j - 1)] = v;
            cells[(e.j - 1) * n + (e.i - 1)] = v;
        }
        m.cells_ = std::move(cells);
    } else {
        std::vector<double> cells(n * n, 0.0);
        for (const auto &e : entries) {
            cells[(e.i - 1) * n + (e.j - 1)] = e.w.toDouble();
            cells[(e.j - 1) * n + (e.i - 1)] = e.w.toDouble();
        }
        m.cells_ = std::move(cells);
    }
    m.initEpsilon();
    return m;
}

WeightMatrix WeightMatrix::fromDense(std::size_t n, std::vector<std::int64_t> cells) {
    WeightMatrix m;
    m.n_ = n;
    m.cells_ = std::move(cells);
    m.validate();
    m.initEpsilon();
    return m;
}

WeightMatrix WeightMatrix::fromDense(std::size_t n, std::vector<double> cells) {
    WeightMatrix m;
    m.n_ = n;
    m.cells_ = std::move(cells);
    m.validate();
    m.initEpsilon();
    return m;
}

void WeightMatrix::validate() const {
    if (n_ < 1) {
        throw InvalidArgument("matrix needs at least one vertex");
    }
    visit([&](auto cells) {
        if (cells.size() != n_ * n_) {
            throw InvalidArgument("dense matrix has " + std::to_string(cells.size()) + " cells, expected " +
                                  std::to_string(n_ * n_));
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (cells[i * n_ + i] != 0) {
                throw InvalidArgument("nonzero diagonal at vertex " + std::to_string(i + 1));
            }
            for (std::size_t j = i + 1; j < n_; ++j) {
                if (cells[i * n_ + j] != cells[j * n_ + i]) {
                    throw InvalidArgument("matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ")");
                }
            }
        }
    });
}

void WeightMatrix::initEpsilon() {
    if (isInteger()) {
        epsilon_ = 0.0;
        return;
    }
    double maxAbs = 0.0;
    for (double v : std::get<std::vector<double>>(cells_)) {
        maxAbs = std::max(maxAbs, std::fabs(v));
    }
    epsilon_ = 1e-9 * maxAbs;
}

Weight WeightMatrix::at(Vertex i, Vertex j) const {
    if (i >= n_ || j >= n_) {
        throw InvalidArgument("vertex index out of range");
    }
    return visit([&](auto cells) { return Weight(cells[i * n_ + j]); });
}

WeightMatrix WeightMatrix::withEpsilon(double eps) const {
    if (!(eps >= 0.0)) {
        throw InvalidArgument("epsilon must be non-negative");
    }
    WeightMatrix m = *this;
    if (!m.isInteger()) {
        m.epsilon_ = eps;
    }
    return m;
}

void WeightMatrix::setNames(std::vector<std::string> names) {
    if (!names.empty() && names.size() != n_) {
        throw InvalidArgument("expected " + std::to_string(n_) + " vertex names");
    }
    names_ = std::move(names);
}

WeightMatrix WeightMatrix::toInteger() const {
    if (isInteger()) {
        return *this;
    }
    const auto &src = std::get<std::vector<double>>(cells_);
    std::vector<std::int64_t> cells(src.size());
    for (std::size_t k = 0; k < src.size(); ++k) {
        if (!Weight(src[k]).isIntegral()) {
            throw InvalidArgument("matrix has non-integral weights");
        }
        cells[k] = static_cast<std::int64_t>(src[k]);
    }
    WeightMatrix m = fromDense(n_, std::move(cells));
    m.names_ = names_;
    return m;
}

WeightMatrix WeightMatrix::toReal() const {
    if (!isInteger()) {
        return *this;
    }
    const auto &src = std::get<std::vector<std::int64_t>>(cells_);
    std::vector<double> cells(src.begin(), src.end());
    WeightMatrix m = fromDense(n_, std::move(cells));
    m.names_ = names_;
    return m;
}

std::vector<Vertex> CutAssignment::upper() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < z.size(); ++v) {
        if (z[v] == 1) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Vertex> CutAssignment::lower() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < z.size(); ++v) {
        if (z[v] == -1) {
            out.push_back(v);
        }
    }
    return out;
}

void checkSpins(std::span<const Spin> z, std::size_t n) {
    if (z.size() != n) {
        throw InvalidArgument("assignment has length " + std::to_string(z.size()) + ", expected " +
                              std::to_string(n));
    }
    for (std::size_t v = 0; v < z.size(); ++v) {
        if (z[v] != 1 && z[v] != -1) {
            throw InvalidArgument("label of vertex " + std::to_string(v + 1) + " is not -1 or +1");
        }
    }
}

Weight cutWeight(const WeightMatrix &w, std::span<const Spin> z) {
    checkSpins(z, w.size());
    return w.visit([&](auto cells) { return Weight(sumCut(cells, w.size(), z)); });
}

Weight totalWeight(const WeightMatrix &w) {
    const std::size_t n = w.size();
    return w.visit([&](auto cells) {
        using T = typename decltype(cells)::value_type;
        T total{};
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                total = arith::add(total, cells[i * n + j]);
            }
        }
        return Weight(total);
    });
}

std::pair<Weight, Weight> sideWeights(const WeightMatrix &w, Vertex i, std::span<const Vertex> upper,
                                      std::span<const Vertex> lower) {
    const std::size_t n = w.size();
    if (i >= n) {
        throw InvalidArgument("vertex index out of range");
    }
    std::vector<std::int8_t> side(n, 0);
    for (Vertex v : upper) {
        if (v >= n) {
            throw InvalidArgument("vertex index out of range");
        }
        side[v] = 1;
    }
    for (Vertex v : lower) {
        if (v >= n) {
            throw InvalidArgument("vertex index out of range");
        }
        if (side[v] == 1) {
            throw InvalidArgument("U and D overlap at vertex " + std::to_string(v + 1));
        }
        side[v] = -1;
    }
    if (side[i] != 0) {
        throw InvalidArgument("vertex " + std::to_string(i + 1) + " is already assigned");
    }
    return w.visit([&](auto cells) {
        using T = typename decltype(cells)::value_type;
        T up{}, down{};
        for (Vertex v : upper) {
            up = arith::add(up, cells[i * n + v]);
        }
        for (Vertex v : lower) {
            down = arith::add(down, cells[i * n + v]);
        }
        return std::pair<Weight, Weight>(Weight(up), Weight(down));
    });
}

CutAssignment makeAssignment(const WeightMatrix &w, std::vector<Spin> z) {
    CutAssignment out;
    out.cutWeight = cutWeight(w, z);
    out.z = std::move(z);
    return out;
}

} // namespace maxcut
