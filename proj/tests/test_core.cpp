// Exact arithmetic and linear-algebra kernels: checked integers, rationals,
// vectors, matrices, and box enumeration.  Determinants, Hermite forms, and
// adjugates are cross-checked against the naive reference implementations in
// oracles.hpp and against their defining identities.

#include <catch2/catch_amalgamated.hpp>
#include <cstdint>
#include <random>
#include <vector>

#include "latgeo/errors.hpp"
#include "latgeo/hbox.hpp"
#include "latgeo/mat.hpp"
#include "latgeo/rat.hpp"
#include "latgeo/vec.hpp"
#include "oracles.hpp"

using namespace latgeo;

TEST_CASE("checked integer arithmetic") {
  SECTION("ordinary values") {
    REQUIRE(Int(3) + Int(4) == 7);
    REQUIRE(Int(3) - Int(10) == -7);
    REQUIRE(Int(-6) * Int(7) == -42);
    REQUIRE(-Int(5) == -5);
    Int a = 10;
    a += 5;
    a *= 2;
    a -= 1;
    REQUIRE(a == 29);
  }

  SECTION("overflow throws instead of wrapping") {
    REQUIRE_THROWS_AS(Int(INT64_MAX) + Int(1), OverflowError);
    REQUIRE_THROWS_AS(Int(INT64_MIN) - Int(1), OverflowError);
    REQUIRE_THROWS_AS(Int(INT64_MAX) * Int(2), OverflowError);
    REQUIRE_THROWS_AS(-Int(INT64_MIN), OverflowError);
    REQUIRE(Int(INT64_MAX) + Int(0) == INT64_MAX);  // boundary itself is fine
  }

  SECTION("gcd") {
    REQUIRE(gcd(0, 0) == 0);
    REQUIRE(gcd(0, -7) == 7);
    REQUIRE(gcd(-6, 15) == 3);
    REQUIRE(gcd(12, 18) == 6);
    REQUIRE(gcd(Int(INT64_MIN), 3) == 1);  // magnitude reduction avoids negation overflow
    REQUIRE_THROWS_AS(gcd(Int(INT64_MIN), 0), OverflowError);  // |INT64_MIN| has no Int home
  }

  SECTION("floor and ceiling division") {
    REQUIRE(floor_div(7, 2) == 3);
    REQUIRE(floor_div(-7, 2) == -4);
    REQUIRE(floor_div(7, -2) == -4);
    REQUIRE(floor_div(-7, -2) == 3);
    REQUIRE(ceil_div(7, 2) == 4);
    REQUIRE(ceil_div(-7, 2) == -3);
    REQUIRE(ceil_div(7, -2) == -3);
    REQUIRE(ceil_div(-7, -2) == 4);
    REQUIRE(floor_div(6, 3) == 2);
    REQUIRE(ceil_div(6, 3) == 2);
    REQUIRE_THROWS_AS(floor_div(1, 0), PreconditionError);
    REQUIRE_THROWS_AS(floor_div(Int(INT64_MIN), -1), OverflowError);
  }

  SECTION("exact division") {
    REQUIRE(exact_div(42, -7) == -6);
    REQUIRE_THROWS_AS(exact_div(7, 2), InternalError);
    REQUIRE_THROWS_AS(exact_div(1, 0), PreconditionError);
    REQUIRE_THROWS_AS(exact_div(Int(INT64_MIN), -1), OverflowError);
  }

  SECTION("abs and sign") {
    REQUIRE(abs(Int(-9)) == 9);
    REQUIRE(abs(Int(9)) == 9);
    REQUIRE(sign(Int(-3)) == -1);
    REQUIRE(sign(Int(0)) == 0);
    REQUIRE(sign(Int(12)) == 1);
  }
}

TEST_CASE("exact rationals") {
  SECTION("construction reduces and normalizes the sign") {
    Rat r(6, -4);
    REQUIRE(r.num() == -3);
    REQUIRE(r.den() == 2);
    REQUIRE(Rat(0, 5) == Rat(0));
    REQUIRE_THROWS_AS(Rat(1, 0), PreconditionError);
  }

  SECTION("arithmetic and comparisons") {
    REQUIRE(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    REQUIRE(Rat(1, 2) - Rat(2, 3) == Rat(-1, 6));
    REQUIRE(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    REQUIRE(Rat(1, 2) / Rat(3, 4) == Rat(2, 3));
    REQUIRE_THROWS_AS(Rat(1, 2) / Rat(0), PreconditionError);
    REQUIRE(Rat(-1, 3) < Rat(1, 4));
    REQUIRE(Rat(7, 2) > Rat(3));
  }

  SECTION("floor and ceiling") {
    REQUIRE(Rat(7, 2).floor() == 3);
    REQUIRE(Rat(7, 2).ceil() == 4);
    REQUIRE(Rat(-7, 2).floor() == -4);
    REQUIRE(Rat(-7, 2).ceil() == -3);
    REQUIRE(Rat(4).floor() == 4);
    REQUIRE(Rat(4).ceil() == 4);
  }
}

TEST_CASE("vectors") {
  SECTION("construction and arithmetic") {
    Vec v{1, -2, 3};
    REQUIRE(v.dim() == 3);
    REQUIRE(v[1] == -2);
    REQUIRE(Vec::zero(4) == Vec{0, 0, 0, 0});
    REQUIRE(Vec::unit(3, 1) == Vec{0, 1, 0});
    REQUIRE(Vec{1, 2} + Vec{3, 4} == Vec{4, 6});
    REQUIRE(Vec{1, 2} - Vec{3, 4} == Vec{-2, -2});
    REQUIRE(Int(3) * Vec{1, -1} == Vec{3, -3});
    REQUIRE(dot(Vec{1, 2, 3}, Vec{4, 5, 6}) == 32);
    REQUIRE_THROWS_AS((Vec{1, 2} + Vec{1, 2, 3}), PreconditionError);
    REQUIRE_THROWS_AS(dot(Vec{1, 2}, Vec{1, 2, 3}), PreconditionError);
    REQUIRE_THROWS_AS(Vec(6), PreconditionError);  // above the supported dimension
  }

  SECTION("lexicographic order") {
    REQUIRE(Vec{1, 2} < Vec{1, 3});
    REQUIRE(Vec{0, 9} < Vec{1, 0});
    REQUIRE_FALSE(Vec{2, 0} < Vec{2, 0});
  }

  SECTION("primitive part") {
    auto p = primitive_part(Vec{4, -6});
    REQUIRE(p.direction == Vec{2, -3});
    REQUIRE(p.multiplier == 2);
    REQUIRE(p.multiplier * p.direction == Vec{4, -6});
    auto z = primitive_part(Vec::zero(3));
    REQUIRE(z.multiplier == 0);
    REQUIRE(z.direction == Vec::zero(3));
    REQUIRE(primitive_part(Vec{0, -5, 0}).direction == Vec{0, -1, 0});
  }
}

TEST_CASE("determinants match cofactor expansion") {
  REQUIRE(det(Mat::identity(4)) == 1);
  REQUIRE(det(Mat{{2, 1}, {1, 2}}) == 3);
  REQUIRE(det(Mat{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}) == 0);  // rank-deficient

  std::mt19937_64 rng(0xC0FEu);
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 60; ++t) {
      Mat m = oracles::random_mat(rng, n, 9);
      REQUIRE(det(m) == oracles::oracle_det(m));
    }
  }
}

TEST_CASE("hermite normal form") {
  std::mt19937_64 rng(0xAB5u);

  SECTION("u * m == h with unimodular u, lower-triangular h") {
    for (int n = 2; n <= 4; ++n) {
      for (int t = 0; t < 40; ++t) {
        Mat m = oracles::random_mat(rng, n, 8);
        HnfResult r = hermite_normal_form(m);
        REQUIRE(abs(det(r.u)) == 1);
        REQUIRE(r.u * m == r.h);
        if (det(m) != 0) {
          for (int i = 0; i < n; ++i) {
            REQUIRE(r.h.at(i, i) > 0);
            for (int j = i + 1; j < n; ++j) REQUIRE(r.h.at(i, j) == 0);  // upper part clear
            for (int j = 0; j < i; ++j) {  // entries below the diagonal of their column, reduced
              REQUIRE(r.h.at(i, j) >= 0);
              REQUIRE(r.h.at(i, j) < r.h.at(j, j));
            }
          }
          REQUIRE(abs(det(r.h)) == abs(det(m)));
        }
      }
    }
  }

  SECTION("normal form is invariant under unimodular row operations") {
    for (int t = 0; t < 30; ++t) {
      Mat m = oracles::random_mat(rng, 3, 6);
      Mat u0 = oracles::random_unimodular(rng, 3);
      REQUIRE(hermite_normal_form(u0 * m).h == hermite_normal_form(m).h);
    }
  }

  SECTION("rank") {
    REQUIRE(rank(Mat::identity(3)) == 3);
    REQUIRE(rank(Mat{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}}) == 2);
    REQUIRE(rank(Mat{{0, 0}, {0, 0}}) == 0);
    REQUIRE(rank(Mat{{1, 2, 3}}) == 1);
  }
}

TEST_CASE("adjugate and unimodular inverse") {
  std::mt19937_64 rng(0x5ca1eu);
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 30; ++t) {
      Mat m = oracles::random_mat(rng, n, 6);
      Mat adj = adjugate(m);
      Mat prod = adj * m;
      Int d = det(m);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) REQUIRE(prod.at(i, j) == (i == j ? d : Int(0)));
    }
    for (int t = 0; t < 30; ++t) {
      Mat u = oracles::random_unimodular(rng, n);
      REQUIRE(inverse_unimodular(u) * u == Mat::identity(n));
      REQUIRE(u * inverse_unimodular(u) == Mat::identity(n));
    }
  }
  REQUIRE_THROWS_AS(inverse_unimodular(Mat{{2, 0}, {0, 1}}), PreconditionError);
}

TEST_CASE("hyperplane normals and functional completion") {
  SECTION("normal is orthogonal to the rows and primitive") {
    std::mt19937_64 rng(0xFACEu);
    for (int d = 3; d <= 5; ++d) {
      for (int t = 0; t < 25; ++t) {
        Mat dirs(d - 1, d);
        for (int i = 0; i < d - 1; ++i)
          for (int j = 0; j < d; ++j)
            dirs.at(i, j) = std::uniform_int_distribution<long long>(-5, 5)(rng);
        Vec n = hyperplane_normal(dirs);
        for (int i = 0; i < d - 1; ++i) REQUIRE(dot(n, dirs.row(i)) == 0);
        if (rank(dirs) == d - 1) {
          REQUIRE(!is_zero(n));
          REQUIRE(primitive_part(n).multiplier == 1);
        } else {
          REQUIRE(is_zero(n));
        }
      }
    }
    REQUIRE_THROWS_AS(hyperplane_normal(Mat{{1, 0, 0}}), PreconditionError);  // shape mismatch
  }

  SECTION("completion to a unimodular matrix") {
    for (Vec y : {Vec{1, 0, 0}, Vec{0, 0, -1}, Vec{2, 3, 5}, Vec{3, -5, 7, 1}, Vec{1, 1}}) {
      Mat u = complete_primitive_to_unimodular(y);
      REQUIRE(abs(det(u)) == 1);
      REQUIRE(u.row(u.rows() - 1) == y);
    }
    REQUIRE_THROWS_AS(complete_primitive_to_unimodular(Vec{2, 4}), PreconditionError);
    REQUIRE_THROWS_AS(complete_primitive_to_unimodular(Vec{0, 0}), PreconditionError);
  }
}

TEST_CASE("integer boxes and lattice enumeration") {
  SECTION("box of points") {
    IntBox b = IntBox::of_points({Vec{1, -2}, Vec{-3, 4}, Vec{0, 0}});
    REQUIRE(b.lo == Vec{-3, -2});
    REQUIRE(b.hi == Vec{1, 4});
    REQUIRE(b.cell_count() == 35);
    REQUIRE_FALSE(b.empty());
    IntBox e{Vec{1, 1}, Vec{0, 2}};
    REQUIRE(e.empty());
    REQUIRE(e.cell_count() == 0);
  }

  SECTION("bounding box of a halfspace intersection") {
    // x >= 0, y >= 0, x + y <= 3, written as <a, y> <= b.
    std::vector<HalfSpace> hs{{Vec{-1, 0}, 0}, {Vec{0, -1}, 0}, {Vec{1, 1}, 3}};
    IntBox b = bounding_box(hs, 2);
    REQUIRE(b.lo == Vec{0, 0});
    REQUIRE(b.hi == Vec{3, 3});
    // Fractional vertices: the box is rounded inward to the lattice points
    // the region can actually contain.
    std::vector<HalfSpace> sheared{{Vec{-2, 1}, 1}, {Vec{0, -1}, 0}, {Vec{2, 1}, 5}};
    IntBox s = bounding_box(sheared, 2);
    REQUIRE(s.lo == Vec{0, 0});  // x ranges over [-1/2, 5/2]
    REQUIRE(s.hi == Vec{2, 3});
  }

  SECTION("enumeration visits every cell once, in lexicographic order") {
    IntBox b{Vec{-1, 0, 2}, Vec{1, 1, 3}};
    std::vector<Vec> seen;
    for_each_lattice_point(b, 1000, [&](const Vec& p) { seen.push_back(p); });
    REQUIRE(static_cast<long long>(seen.size()) == b.cell_count().value());
    REQUIRE(std::is_sorted(seen.begin(), seen.end()));
    REQUIRE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    REQUIRE(seen.front() == Vec{-1, 0, 2});
    REQUIRE(seen.back() == Vec{1, 1, 3});
  }

  SECTION("enumeration limit guard") {
    IntBox big{Vec{0, 0, 0}, Vec{99, 99, 99}};
    REQUIRE_THROWS_AS(for_each_lattice_point(big, 100'000, [](const Vec&) {}), ResourceLimitError);
  }
}
