#include "maxcut/weight.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace maxcut {

std::int64_t Weight::asInteger() const {
    if (const auto *v = std::get_if<std::int64_t>(&value_)) {
        return *v;
    }
    throw InvalidArgument("weight is not an exact integer");
}

double Weight::toDouble() const {
    return std::visit([](auto v) { return static_cast<double>(v); }, value_);
}

bool Weight::isIntegral() const {
    if (isInteger()) {
        return true;
    }
    const double v = std::get<double>(value_);
    return std::isfinite(v) && std::trunc(v) == v && v >= -9.2e18 && v <= 9.2e18;
}

std::string Weight::toString() const {
    std::array<char, 64> buf{};
    auto res = std::visit([&](auto v) { return std::to_chars(buf.data(), buf.data() + buf.size(), v); }, value_);
    return std::string(buf.data(), res.ptr);
}

bool operator==(const Weight &a, const Weight &b) {
    if (a.isInteger() && b.isInteger()) {
        return a.asInteger() == b.asInteger();
    }
    return a.toDouble() == b.toDouble();
}

bool operator<(const Weight &a, const Weight &b) {
    if (a.isInteger() && b.isInteger()) {
        return a.asInteger() < b.asInteger();
    }
    return a.toDouble() < b.toDouble();
}

} // namespace maxcut
