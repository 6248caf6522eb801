#pragma once

#include <utility>

#include "latgeo/mat.hpp"

namespace latgeo {

/// Affine lattice automorphism x -> linear * x + translation with
/// |det linear| == 1. The constructor enforces unimodularity, so a value of
/// this type is always a genuine lattice symmetry.
class UnimodularAffineMap {
 public:
  UnimodularAffineMap(Mat linear, Vec translation)
      : linear_(std::move(linear)), translation_(translation) {
    if (linear_.rows() != linear_.cols() || linear_.rows() != translation_.dim())
      throw PreconditionError("affine map shape mismatch");
    Int d = det(linear_);
    if (d != 1 && d != -1) throw PreconditionError("linear part is not unimodular");
  }

  [[nodiscard]] static UnimodularAffineMap identity(int dim) {
    return {Mat::identity(dim), Vec::zero(dim)};
  }

  [[nodiscard]] int dim() const { return translation_.dim(); }
  [[nodiscard]] const Mat& linear() const { return linear_; }
  [[nodiscard]] const Vec& translation() const { return translation_; }

  [[nodiscard]] Vec operator()(const Vec& p) const { return linear_.apply(p) + translation_; }

 private:
  Mat linear_;
  Vec translation_;
};

[[nodiscard]] inline Vec apply(const UnimodularAffineMap& f, const Vec& p) { return f(p); }

/// Composition f after g: x -> f(g(x)).
[[nodiscard]] inline UnimodularAffineMap compose(const UnimodularAffineMap& f,
                                                 const UnimodularAffineMap& g) {
  return {f.linear() * g.linear(), f.linear().apply(g.translation()) + f.translation()};
}

[[nodiscard]] inline UnimodularAffineMap inverse(const UnimodularAffineMap& f) {
  Mat inv = inverse_unimodular(f.linear());
  return {inv, -inv.apply(f.translation())};
}

}  // namespace latgeo
