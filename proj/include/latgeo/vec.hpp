#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <vector>

#include "latgeo/ints.hpp"

namespace latgeo {

/// Maximum ambient dimension handled by the library.
inline constexpr int kMaxDim = 5;

/// A point of Z^d (or an integer linear functional on it), 1 <= d <= 5.
/// Fixed-capacity so hot loops stay allocation-free.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int dim) : dim_(check_dim(dim)) {}
  Vec(std::initializer_list<Int> cs) : dim_(check_dim(static_cast<int>(cs.size()))) {
    int i = 0;
    for (Int c : cs) c_[i++] = c;
  }

  [[nodiscard]] static Vec zero(int dim) { return Vec(dim); }
  [[nodiscard]] static Vec unit(int dim, int axis) {
    Vec e(dim);
    e[axis] = 1;
    return e;
  }

  [[nodiscard]] int dim() const { return dim_; }
  Int& operator[](int i) { return c_[i]; }
  Int operator[](int i) const { return c_[i]; }

  friend Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.require_same_dim(b));
    for (int i = 0; i < r.dim_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.require_same_dim(b));
    for (int i = 0; i < r.dim_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend Vec operator-(const Vec& a) {
    Vec r(a.dim_);
    for (int i = 0; i < r.dim_; ++i) r.c_[i] = -a.c_[i];
    return r;
  }
  friend Vec operator*(Int k, const Vec& a) {
    Vec r(a.dim_);
    for (int i = 0; i < r.dim_; ++i) r.c_[i] = k * a.c_[i];
    return r;
  }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  /// Lexicographic order (dimension first); used everywhere a
  /// deterministic ordering of points is required.
  friend std::strong_ordering operator<=>(const Vec& a, const Vec& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    for (int i = 0; i < a.dim_; ++i)
      if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  static int check_dim(int d) {
    if (d < 0 || d > kMaxDim) throw PreconditionError("vector dimension out of range");
    return d;
  }
  int require_same_dim(const Vec& o) const {
    if (dim_ != o.dim_) throw PreconditionError("dimension mismatch");
    return dim_;
  }

  int dim_ = 0;
  std::array<Int, kMaxDim> c_{};
};

/// Dual vectors (functionals) share the representation of points.
using DualVec = Vec;

[[nodiscard]] inline Int dot(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) throw PreconditionError("dimension mismatch");
  Int s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

[[nodiscard]] inline bool is_zero(const Vec& a) {
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] != 0) return false;
  return true;
}

struct PrimitivePart {
  Vec direction;   // primitive (content 1), zero vector stays zero
  Int multiplier;  // nonnegative content; v == multiplier * direction
};

/// Divide out the content of v. For v == 0 the multiplier is 0 and the
/// direction is the zero vector.
[[nodiscard]] inline PrimitivePart primitive_part(const Vec& v) {
  Int g = 0;
  for (int i = 0; i < v.dim(); ++i) g = gcd(g, v[i]);
  if (g == 0) return {v, 0};
  Vec d(v.dim());
  for (int i = 0; i < v.dim(); ++i) d[i] = exact_div(v[i], g);
  return {d, g};
}

}  // namespace latgeo
