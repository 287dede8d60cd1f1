#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace termirial {

/// Exact non-negative integer. Backed by an arbitrary-precision integer;
/// the non-negativity invariant is checked at the API boundary.
using Natural = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

/// Termirial order. Valid orders are -1, 0, 1, 2, ...
class Order {
public:
    static constexpr int kMin = -1;

    constexpr Order() = default;
    constexpr explicit Order(int p) : value_(p) {
        if (p < kMin) throw std::invalid_argument("termirial order must be >= -1");
    }

    constexpr int value() const noexcept { return value_; }
    constexpr Order next() const { return Order(value_ + 1); }
    constexpr Order prev() const { return Order(value_ - 1); }

    friend constexpr auto operator<=>(Order, Order) = default;

private:
    int value_ = 0;
};

/// Raised by oracles and builders when a request would exceed its work budget.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses an unsigned decimal string; throws std::invalid_argument otherwise.
Natural parse_natural(std::string_view text);

/// Decimal rendering, optionally grouped by thousands with `separator`.
std::string to_decimal(const Natural& value, char separator = '\0');

}  // namespace termirial
