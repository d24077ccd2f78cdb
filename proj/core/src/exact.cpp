#include "maxcut/exact.hpp"

#include <bit>
#include <string>
#include <vector>

#include "maxcut/error.hpp"

namespace maxcut {

namespace {

// Bit k-1 of a mask set means vertex k sits on the -1 side; vertex 0 is always +1.
std::vector<Spin> spinsFromMask(std::uint64_t mask, std::size_t n) {
    std::vector<Spin> z(n, 1);
    for (std::size_t v = 1; v < n; ++v) {
        if ((mask >> (v - 1)) & 1U) {
            z[v] = -1;
        }
    }
    return z;
}

/// a precedes b lexicographically: at the first differing vertex a has -1.
bool lexBefore(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

template <typename T>
void checkHeadroom(std::span<const T> cells) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
        // Every partial cut and vertex field is bounded by the sum of |w|.
        std::int64_t bound = 0;
        for (T v : cells) {
            bound = arith::add(bound, arith::abs(v));
        }
    }
}

template <typename T>
OracleResult grayCode(std::span<const T> cells, const WeightMatrix &w) {
    const std::size_t n = w.size();
    checkHeadroom(cells);

    // field[v] = sum_k w_vk z_k; flipping v changes the cut by z_v * field[v].
    std::vector<T> field(n, T{});
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t k = 0; k < n; ++k) {
            field[v] += cells[v * n + k];
        }
    }
    std::vector<Spin> z(n, 1);
    T cut{};
    T best{};
    std::uint64_t bestMask = 0;
    std::uint64_t mask = 0;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);

    for (std::uint64_t g = 1; g < count; ++g) {
        const std::size_t v = static_cast<std::size_t>(std::countr_zero(g)) + 1;
        const T zv = static_cast<T>(z[v]);
        cut += zv * field[v];
        const T *row = cells.data() + v * n;
        for (std::size_t k = 0; k < n; ++k) {
            field[k] -= 2 * zv * row[k];
        }
        z[v] = static_cast<Spin>(-z[v]);
        mask ^= std::uint64_t{1} << (v - 1);

        if (cut > best || (cut == best && lexBefore(mask, bestMask))) {
            best = cut;
            bestMask = mask;
        }
    }

    OracleResult out;
    out.witness = makeAssignment(w, spinsFromMask(bestMask, n));
    out.optimalWeight = out.witness.cutWeight;
    out.enumerated = count;
    return out;
}

} // namespace

OracleResult bruteForce(const WeightMatrix &w, std::size_t maxN) {
    const std::size_t n = w.size();
    if (n > maxN || n > 63) {
        throw SizeLimitError("exact search limited to n <= " + std::to_string(std::min<std::size_t>(maxN, 63)) +
                             ", instance has n = " + std::to_string(n));
    }
    return w.visit([&](auto cells) { return grayCode(cells, w); });
}

OracleResult bruteForceNaive(const WeightMatrix &w) {
    const std::size_t n = w.size();
    if (n > 16) {
        throw SizeLimitError("naive exact search limited to n <= 16");
    }
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    OracleResult out;
    out.enumerated = count;
    bool have = false;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        auto z = spinsFromMask(mask, n);
        const Weight c = cutWeight(w, z);
        const bool better = !have || out.optimalWeight < c ||
                            (c == out.optimalWeight && z < out.witness.z);
        if (better) {
            have = true;
            out.optimalWeight = c;
            out.witness = CutAssignment{std::move(z), c};
        }
    }
    return out;
}

} // namespace maxcut
