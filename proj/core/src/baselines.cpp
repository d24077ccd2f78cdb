#include "maxcut/baselines.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "maxcut/error.hpp"

namespace maxcut {

namespace {

template <typename T>
EcResult ecTyped(const WeightMatrix &w) {
    const std::size_t n = w.size();
    WorkMatrix<T> work(w);
    std::vector<Vertex> owner(n);
    for (Vertex v = 0; v < n; ++v) {
        owner[v] = v;
    }
    ContractionTrace trace;

    while (work.activeCount() > 2) {
        const auto active = work.activeVertices();
        Vertex bi = 0, bj = 0;
        bool found = false;
        T best{};
        for (std::size_t a = 0; a < active.size(); ++a) {
            for (std::size_t b = a + 1; b < active.size(); ++b) {
                const T v = work.at(active[a], active[b]);
                if (!found || v < best) {
                    found = true;
                    best = v;
                    bi = active[a];
                    bj = active[b];
                }
            }
        }
        work.fold(bj, bi, 1);
        for (Vertex v = 0; v < n; ++v) {
            if (owner[v] == bj) {
                owner[v] = bi;
            }
        }
        trace.steps.push_back({bi, bj, Weight(best), Spin{1}, bj, bi});
    }

    const auto last = work.activeVertices();
    std::vector<Spin> z(n);
    for (Vertex v = 0; v < n; ++v) {
        z[v] = owner[v] == last[0] ? 1 : -1;
    }
    EcResult result{makeAssignment(w, std::move(z)), std::move(trace), Weight(work.at(last[0], last[1]))};
    if (!(result.assignment.cutWeight == result.finalEdgeWeight)) {
        throw std::logic_error("EC final edge weight disagrees with the recomputed cut");
    }
    return result;
}

template <typename T>
DecResult decTyped(const WeightMatrix &w, const DecPolicy &policy) {
    const std::size_t n = w.size();
    const double eps = w.epsilon();
    WorkMatrix<T> work(w);
    std::vector<std::vector<Vertex>> members(n);
    for (Vertex v = 0; v < n; ++v) {
        members[v] = {v};
    }
    std::vector<std::size_t> minus(n, 0);
    ContractionTrace trace;

    auto positive = [eps](T v) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
            return v > 0;
        } else {
            return v > eps;
        }
    };

    while (work.activeCount() >= 2) {
        const auto active = work.activeVertices();
        Vertex bi = 0, bj = 0;
        bool found = false;
        T best{};
        for (std::size_t a = 0; a < active.size(); ++a) {
            for (std::size_t b = a + 1; b < active.size(); ++b) {
                const T v = work.at(active[a], active[b]);
                if (positive(v) && (!found || v > best)) {
                    found = true;
                    best = v;
                    bi = active[a];
                    bj = active[b];
                }
            }
        }
        if (!found) {
            break;
        }

        Vertex survivor = bi;
        switch (policy.direction) {
        case DecDirection::KeepSmaller:
            survivor = bi;
            break;
        case DecDirection::KeepLarger:
            survivor = bj;
            break;
        case DecDirection::MaxTotal: {
            // Keeping i adds sum_k (w_ik - w_jk) to the total; keeping j adds its negation.
            T delta{};
            for (Vertex k : active) {
                if (k != bi && k != bj) {
                    delta = arith::add(delta, arith::sub(work.at(bi, k), work.at(bj, k)));
                }
            }
            survivor = delta >= T{} ? bi : bj;
            break;
        }
        }
        const Vertex removed = survivor == bi ? bj : bi;

        work.fold(removed, survivor, -1);
        for (Vertex m : members[removed]) {
            ++minus[m];
            members[survivor].push_back(m);
        }
        members[removed].clear();
        trace.steps.push_back({bi, bj, Weight(best), Spin{-1}, removed, survivor});
    }

    std::vector<Spin> z(n);
    for (Vertex v = 0; v < n; ++v) {
        z[v] = minus[v] % 2 == 0 ? 1 : -1;
    }
    return DecResult{makeAssignment(w, std::move(z)), std::move(trace), std::move(minus)};
}

/// Applies the SG rule: U if w(i,U) < w(i,D), else D.
template <typename T>
void assignVertex(std::span<const T> cells, std::size_t n, Vertex i, std::vector<T> &toUpper,
                  std::vector<T> &toLower, std::vector<Spin> &z) {
    const T *row = cells.data() + i * n;
    if (toUpper[i] < toLower[i]) {
        z[i] = 1;
        for (Vertex k = 0; k < n; ++k) {
            toUpper[k] = arith::add(toUpper[k], row[k]);
        }
    } else {
        z[i] = -1;
        for (Vertex k = 0; k < n; ++k) {
            toLower[k] = arith::add(toLower[k], row[k]);
        }
    }
}

template <typename T>
std::vector<Spin> sgTyped(std::span<const T> cells, std::size_t n, const std::vector<Vertex> &order) {
    std::vector<T> toUpper(n), toLower(n);
    std::vector<Spin> z(n, 0);
    for (Vertex i : order) {
        assignVertex(cells, n, i, toUpper, toLower, z);
    }
    return z;
}

template <typename T>
std::vector<Spin> sg3Typed(std::span<const T> cells, std::size_t n) {
    std::vector<T> toUpper(n), toLower(n);
    std::vector<Spin> z(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = n;
        T bestScore{};
        for (Vertex i = 0; i < n; ++i) {
            if (z[i] != 0) {
                continue;
            }
            const T score = arith::abs(arith::sub(toUpper[i], toLower[i]));
            if (pick == n || score > bestScore) {
                pick = i;
                bestScore = score;
            }
        }
        assignVertex(cells, n, pick, toUpper, toLower, z);
    }
    return z;
}

} // namespace

std::string toString(DecDirection d) {
    switch (d) {
    case DecDirection::MaxTotal:
        return "max-total";
    case DecDirection::KeepSmaller:
        return "keep-smaller";
    case DecDirection::KeepLarger:
        return "keep-larger";
    }
    return "?";
}

EcResult ecSolve(const WeightMatrix &w) {
    if (w.size() < 2) {
        throw InvalidArgument("EC needs at least two vertices");
    }
    return w.isInteger() ? ecTyped<std::int64_t>(w) : ecTyped<double>(w);
}

DecResult decSolve(const WeightMatrix &w, const DecPolicy &policy) {
    return w.isInteger() ? decTyped<std::int64_t>(w, policy) : decTyped<double>(w, policy);
}

SgOrder SgOrder::natural(std::size_t n) {
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) {
        order[v] = v;
    }
    return explicitOrder(std::move(order));
}

SgOrder SgOrder::explicitOrder(std::vector<Vertex> order) {
    SgOrder o;
    o.order_ = std::move(order);
    return o;
}

const std::vector<Vertex> &SgOrder::order() const {
    if (!order_) {
        throw InvalidArgument("adaptive order has no fixed permutation");
    }
    return *order_;
}

CutAssignment sgSolve(const WeightMatrix &w, const SgOrder &order) {
    const std::size_t n = w.size();
    const auto &perm = order.order();
    std::vector<bool> seen(n, false);
    if (perm.size() != n) {
        throw InvalidArgument("SG order is not a permutation of the vertices");
    }
    for (Vertex v : perm) {
        if (v >= n || seen[v]) {
            throw InvalidArgument("SG order is not a permutation of the vertices");
        }
        seen[v] = true;
    }
    auto z = w.visit([&](auto cells) { return sgTyped(cells, n, perm); });
    return makeAssignment(w, std::move(z));
}

CutAssignment sgSolve(const WeightMatrix &w) { return sgSolve(w, SgOrder::natural(w.size())); }

CutAssignment sg3Solve(const WeightMatrix &w) {
    auto z = w.visit([&](auto cells) { return sg3Typed(cells, w.size()); });
    return makeAssignment(w, std::move(z));
}

} // namespace maxcut
