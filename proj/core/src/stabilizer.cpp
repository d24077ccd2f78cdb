#include "maxcut/stabilizer.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>

#include "maxcut/disjoint_sets.hpp"

namespace maxcut {

std::string toString(TieBreak t) { return t == TieBreak::Lex ? "lex" : "revlex"; }
std::string toString(SurvivorRule r) { return r == SurvivorRule::KeepSmaller ? "small" : "large"; }
std::string toString(StabilizerEngine e) { return e == StabilizerEngine::Naive ? "naive" : "sorted"; }

void StabilizerForest::add(SignedForestEdge e) {
    if (e.i >= n_ || e.j >= n_ || e.i == e.j) {
        throw InvalidArgument("forest edge needs two distinct vertices in range");
    }
    if (e.sign != 1 && e.sign != -1) {
        throw InvalidArgument("forest edge sign must be -1 or +1");
    }
    edges_.push_back(e);
}

bool StabilizerForest::isAcyclic() const {
    DisjointSets sets(n_);
    for (const auto &e : edges_) {
        if (!sets.unite(e.i, e.j)) {
            return false;
        }
    }
    return true;
}

std::vector<Spin> propagateSigns(const StabilizerForest &forest) {
    const std::size_t n = forest.vertexCount();
    if (!forest.isAcyclic()) {
        throw CorruptForest("stabilizer forest contains a cycle");
    }
    std::vector<std::vector<std::pair<Vertex, Spin>>> adj(n);
    for (const auto &e : forest.edges()) {
        adj[e.i].emplace_back(e.j, e.sign);
        adj[e.j].emplace_back(e.i, e.sign);
    }
    // Scanning bases in increasing order makes each tree's base its smallest vertex.
    std::vector<Spin> z(n, 0);
    std::vector<Vertex> stack;
    for (Vertex base = 0; base < n; ++base) {
        if (z[base] != 0) {
            continue;
        }
        z[base] = 1;
        stack.push_back(base);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (auto [v, sign] : adj[u]) {
                if (z[v] == 0) {
                    z[v] = static_cast<Spin>(z[u] * sign);
                    stack.push_back(v);
                }
            }
        }
    }
    return z;
}

namespace {

template <typename T>
bool negligible(T magnitude, double eps) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
        return magnitude == 0;
    } else {
        return magnitude <= eps;
    }
}

/// Tie key of a pair of super-vertices: their smallest member vertices, ordered.
/// Under KeepSmaller a super-vertex's id is its smallest member, so this is the
/// plain (i, j) order; under KeepLarger it keeps ties independent of which
/// endpoint survived.
using PairKey = std::pair<Vertex, Vertex>;

inline PairKey pairKey(Vertex a, Vertex b) { return a < b ? PairKey{a, b} : PairKey{b, a}; }

/// True when pair key a should win a tie against b.
inline bool tiePrefers(TieBreak t, const PairKey &a, const PairKey &b) { return t == TieBreak::Lex ? a < b : a > b; }

struct Pick {
    Vertex i;
    Vertex j;
};

template <typename T>
class Contractor {
public:
    Contractor(const WeightMatrix &w, const StabilizerPolicy &policy, double eps)
        : work_(w), policy_(policy), eps_(eps), forest_(w.size()), smallest_(w.size()) {
        for (Vertex v = 0; v < w.size(); ++v) {
            smallest_[v] = v;
        }
    }

    PairKey key(Vertex i, Vertex j) const { return pairKey(smallest_[i], smallest_[j]); }

    void record(Pick p) {
        const T w = work_.at(p.i, p.j);
        const Spin sign = w > T{} ? -1 : 1;
        const auto out = contractStep(work_, p.i, p.j, sign, policy_.survivorRule);
        forest_.add({p.i, p.j, sign});
        trace_.steps.push_back({p.i, p.j, Weight(w), sign, out.removed, out.survivor});
        smallest_[out.survivor] = std::min(smallest_[out.survivor], smallest_[out.removed]);
        lastSurvivor_ = out.survivor;
    }

    WorkMatrix<T> work_;
    const StabilizerPolicy &policy_;
    double eps_;
    StabilizerForest forest_;
    ContractionTrace trace_;
    std::vector<Vertex> smallest_;
    Vertex lastSurvivor_ = 0;
};

template <typename T>
void runNaive(Contractor<T> &c) {
    auto &work = c.work_;
    while (work.activeCount() >= 2) {
        const auto active = work.activeVertices();
        bool found = false;
        Pick best{};
        T bestMag{};
        for (std::size_t a = 0; a < active.size(); ++a) {
            for (std::size_t b = a + 1; b < active.size(); ++b) {
                const Vertex i = active[a];
                const Vertex j = active[b];
                const T mag = arith::abs(work.at(i, j));
                if (!found || mag > bestMag ||
                    (mag == bestMag && tiePrefers(c.policy_.tieBreak, c.key(i, j), c.key(best.i, best.j)))) {
                    found = true;
                    best = {i, j};
                    bestMag = mag;
                }
            }
        }
        if (negligible(bestMag, c.eps_)) {
            break;
        }
        c.record(best);
    }
}

template <typename T>
struct HeapEntry {
    T magnitude;
    T value;
    std::uint32_t i;
    std::uint32_t j;
    PairKey key;
};

template <typename T>
void runSorted(Contractor<T> &c) {
    auto &work = c.work_;
    const TieBreak tie = c.policy_.tieBreak;
    // std::priority_queue is a max-heap on this "lower priority than" relation.
    auto lower = [tie](const HeapEntry<T> &a, const HeapEntry<T> &b) {
        if (a.magnitude != b.magnitude) {
            return a.magnitude < b.magnitude;
        }
        return tiePrefers(tie, b.key, a.key);
    };

    const std::size_t n = work.size();
    std::vector<HeapEntry<T>> initial;
    initial.reserve(n * (n - 1) / 2);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const T v = work.at(i, j);
            const T mag = arith::abs(v);
            if (!negligible(mag, c.eps_)) {
                initial.push_back({mag, v, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), c.key(i, j)});
            }
        }
    }
    std::priority_queue<HeapEntry<T>, std::vector<HeapEntry<T>>, decltype(lower)> heap(lower, std::move(initial));

    while (work.activeCount() >= 2 && !heap.empty()) {
        const HeapEntry<T> top = heap.top();
        heap.pop();
        // Stale: an endpoint was contracted away, or the pair's weight or tie key
        // changed since the push.
        if (!work.isActive(top.i) || !work.isActive(top.j) || work.at(top.i, top.j) != top.value ||
            c.key(top.i, top.j) != top.key) {
            continue;
        }

        c.record({top.i, top.j});
        const Vertex s = c.lastSurvivor_;
        for (Vertex k : work.activeVertices()) {
            if (k == s) {
                continue;
            }
            const T v = work.at(s, k);
            const T mag = arith::abs(v);
            if (!negligible(mag, c.eps_)) {
                heap.push({mag, v, static_cast<std::uint32_t>(std::min(s, k)),
                           static_cast<std::uint32_t>(std::max(s, k)), c.key(s, k)});
            }
        }
    }
}

template <typename T>
StabilizerResult solveTyped(const WeightMatrix &w, const StabilizerPolicy &policy, double eps) {
    Contractor<T> c(w, policy, eps);
    if (policy.engine == StabilizerEngine::Naive) {
        runNaive(c);
    } else {
        runSorted(c);
    }
    StabilizerResult result{makeAssignment(w, propagateSigns(c.forest_)), std::move(c.forest_),
                            std::move(c.trace_)};
    return result;
}

} // namespace

StabilizerResult stabilizerSolve(const WeightMatrix &w, const StabilizerPolicy &policy) {
    if (w.isInteger()) {
        return solveTyped<std::int64_t>(w, policy, 0.0);
    }
    const double eps = policy.epsilon.value_or(w.epsilon());
    if (!(eps >= 0.0)) {
        throw InvalidArgument("epsilon must be non-negative");
    }
    return solveTyped<double>(w, policy, eps);
}

} // namespace maxcut
