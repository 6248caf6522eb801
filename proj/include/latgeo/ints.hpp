#pragma once

#include <compare>
#include <cstdint>

#include "latgeo/errors.hpp"

namespace latgeo {

/// Exact 64-bit integer. Every arithmetic operation is overflow-checked and
/// throws OverflowError rather than wrapping. Coordinates, determinants and
/// all derived quantities in this library use this type, so a silent wrap
/// can never corrupt a geometric predicate.
class Int {
 public:
  constexpr Int() = default;
  constexpr Int(long long v) : v_(v) {}  // NOLINT: implicit by design

  [[nodiscard]] constexpr long long value() const { return v_; }

  friend Int operator+(Int a, Int b) {
    long long r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError{};
    return r;
  }
  friend Int operator-(Int a, Int b) {
    long long r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError{};
    return r;
  }
  friend Int operator*(Int a, Int b) {
    long long r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError{};
    return r;
  }
  friend Int operator-(Int a) { return Int(0) - a; }

  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }

  friend constexpr bool operator==(Int a, Int b) = default;
  friend constexpr auto operator<=>(Int a, Int b) = default;

 private:
  long long v_ = 0;
};

[[nodiscard]] inline Int abs(Int a) { return a < 0 ? -a : a; }

[[nodiscard]] inline int sign(Int a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

/// Nonnegative gcd; gcd(0, 0) = 0.
[[nodiscard]] inline Int gcd(Int a, Int b) {
  unsigned long long x = a < 0 ? 0ULL - static_cast<unsigned long long>(a.value())
                               : static_cast<unsigned long long>(a.value());
  unsigned long long y = b < 0 ? 0ULL - static_cast<unsigned long long>(b.value())
                               : static_cast<unsigned long long>(b.value());
  while (y != 0) {
    unsigned long long t = x % y;
    x = y;
    y = t;
  }
  if (x > static_cast<unsigned long long>(INT64_MAX)) throw OverflowError{};
  return static_cast<long long>(x);
}

/// Quotient rounded toward negative infinity. b must be nonzero.
[[nodiscard]] inline Int floor_div(Int a, Int b) {
  if (b == 0) throw PreconditionError("floor_div by zero");
  if (a == Int(INT64_MIN) && b == -1) throw OverflowError{};
  long long q = a.value() / b.value();
  long long r = a.value() % b.value();
  if (r != 0 && ((r < 0) != (b.value() < 0))) --q;
  return q;
}

/// Quotient rounded toward positive infinity. b must be nonzero.
[[nodiscard]] inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

/// Exact quotient; throws InternalError when b does not divide a.
[[nodiscard]] inline Int exact_div(Int a, Int b) {
  if (b == 0) throw PreconditionError("exact_div by zero");
  if (a == Int(INT64_MIN) && b == -1) throw OverflowError{};
  if (a.value() % b.value() != 0) throw InternalError("exact_div: not divisible");
  return a.value() / b.value();
}

}  // namespace latgeo
