#include "maxcut/generators.hpp"

#include <random>
#include <vector>

namespace maxcut {

namespace {

template <typename T, typename Dist>
WeightMatrix fill(std::size_t n, Dist dist, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<T> cells(n * n, T{});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const T v = dist(rng);
            cells[i * n + j] = v;
            cells[j * n + i] = v;
        }
    }
    return WeightMatrix::fromDense(n, std::move(cells));
}

} // namespace

WeightMatrix randomIntegerGraph(std::size_t n, std::int64_t lo, std::int64_t hi, std::uint64_t seed) {
    return fill<std::int64_t>(n, std::uniform_int_distribution<std::int64_t>(lo, hi), seed);
}

WeightMatrix randomRealGraph(std::size_t n, double lo, double hi, std::uint64_t seed) {
    return fill<double>(n, std::uniform_real_distribution<double>(lo, hi), seed);
}

} // namespace maxcut
