#pragma once

#include "latgeo/ints.hpp"

namespace latgeo {

/// Exact rational with checked 64-bit numerator/denominator, kept reduced
/// with a positive denominator. Used only for the small linear systems that
/// bound enumeration regions, so the magnitudes stay tiny.
class Rat {
 public:
  Rat() = default;
  Rat(Int num, Int den = 1) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = gcd(num, den);
    if (g > 1) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
    num_ = num;
    den_ = den;
  }

  [[nodiscard]] Int num() const { return num_; }
  [[nodiscard]] Int den() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rat operator*(const Rat& a, const Rat& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw PreconditionError("rational division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  friend bool operator==(const Rat& a, const Rat& b) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return (a.num_ * b.den_) <=> (b.num_ * a.den_);  // denominators positive
  }

  [[nodiscard]] Int floor() const { return floor_div(num_, den_); }
  [[nodiscard]] Int ceil() const { return ceil_div(num_, den_); }

 private:
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace latgeo
