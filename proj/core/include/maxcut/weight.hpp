#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "maxcut/error.hpp"

namespace maxcut {

enum class ArithmeticMode { IntegerExact, Real };

/// A scalar that is either an exact 64-bit integer or a double.
///
/// Solvers run on a concrete element type internally; Weight is what crosses
/// the public API so that integer instances never round-trip through double.
class Weight {
public:
    Weight() : value_(std::int64_t{0}) {}
    Weight(std::int64_t v) : value_(v) {}
    Weight(int v) : value_(std::int64_t{v}) {}
    Weight(double v) : value_(v) {}

    bool isInteger() const { return std::holds_alternative<std::int64_t>(value_); }

    /// Throws InvalidArgument for real weights.
    std::int64_t asInteger() const;
    double toDouble() const;

    /// True when the value is integral and representable as int64 (1.0 counts).
    bool isIntegral() const;

    /// Decimal for integers, shortest round-trip form for reals.
    std::string toString() const;

    template <typename T>
    T as() const {
        if constexpr (std::is_same_v<T, std::int64_t>) {
            return asInteger();
        } else {
            return toDouble();
        }
    }

    friend bool operator==(const Weight &a, const Weight &b);
    /// Exact when both are integers, otherwise compared as doubles.
    friend bool operator<(const Weight &a, const Weight &b);

private:
    std::variant<std::int64_t, double> value_;
};

namespace arith {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer weight overflow in addition");
    }
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("integer weight overflow in subtraction");
    }
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer weight overflow in multiplication");
    }
    return r;
}

inline double add(double a, double b) { return a + b; }
inline double sub(double a, double b) { return a - b; }
inline double mul(double a, double b) { return a * b; }

inline std::int64_t abs(std::int64_t a) {
    if (a == INT64_MIN) {
        throw OverflowError("integer weight overflow in abs");
    }
    return a < 0 ? -a : a;
}
inline double abs(double a) { return a < 0 ? -a : a; }

} // namespace arith

} // namespace maxcut
