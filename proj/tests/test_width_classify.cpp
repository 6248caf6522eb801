// Lattice width, dual-vector enumeration, and the trichotomy classifiers for
// polygons and 3-polytopes, cross-checked against exhaustive dual scans and
// reference constructions.

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <utility>
#include <vector>

#include "latgeo/classify.hpp"
#include "latgeo/polytope.hpp"
#include "latgeo/search.hpp"
#include "latgeo/width.hpp"
#include "oracles.hpp"

using namespace latgeo;

namespace {

Polytope simplex3(long long k) {
  return hull({{0, 0, 0}, {k, 0, 0}, {0, k, 0}, {0, 0, k}});
}

Polytope cube3(long long k) {
  return hull({{0, 0, 0}, {k, 0, 0}, {0, k, 0}, {k, k, 0},
               {0, 0, k}, {k, 0, k}, {0, k, k}, {k, k, k}});
}

Polytope prism() {
  return hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
}

bool lex_pos(const Vec& y) {
  for (int i = 0; i < y.dim(); ++i) {
    if (y[i] > 0) return true;
    if (y[i] < 0) return false;
  }
  return false;
}

Int spread_over(const std::vector<Vec>& pts, const Vec& y) {
  Int mn = dot(y, pts[0]), mx = mn;
  for (const Vec& p : pts) {
    Int s = dot(y, p);
    mn = std::min(mn, s);
    mx = std::max(mx, s);
  }
  return mx - mn;
}

// Exhaustive reference: every primitive, sign-normalized dual vector with
// entries in [-range, range] whose spread stays within wmax.
std::vector<DualVectorEntry> brute_duals(const Polytope& p, Int wmax, long long range) {
  std::vector<DualVectorEntry> out;
  int d = p.ambient_dim();
  Vec lo = Vec::zero(d), hi = Vec::zero(d);
  for (int i = 0; i < d; ++i) {
    lo[i] = -range;
    hi[i] = range;
  }
  for_each_lattice_point(IntBox{lo, hi}, 100'000'000, [&](const Vec& y) {
    if (!lex_pos(y)) return;
    if (primitive_part(y).multiplier != 1) return;
    Int s = spread_over(p.vertices(), y);
    if (s <= wmax) out.push_back({y, s});
  });
  std::sort(out.begin(), out.end(),
            [](const DualVectorEntry& a, const DualVectorEntry& b) { return a.direction < b.direction; });
  return out;
}

}  // namespace

TEST_CASE("lattice width on fixtures") {
  REQUIRE(lattice_width(cube3(1)).width == 1);
  REQUIRE(lattice_width(cube3(2)).width == 2);
  REQUIRE(lattice_width(simplex3(1)).width == 1);
  REQUIRE(lattice_width(simplex3(2)).width == 2);
  REQUIRE(lattice_width(simplex3(3)).width == 3);
  REQUIRE(lattice_width(prism()).width == 1);
  // Width is computed in hull coordinates for lower-dimensional polytopes.
  REQUIRE(lattice_width(hull({{0, 0}, {2, 0}, {0, 2}})).width == 2);
}

TEST_CASE("width minimizer directions") {
  for (const Polytope& p : {cube3(2), simplex3(3), prism(), cube3(1)}) {
    WidthResult w = lattice_width(p);
    REQUIRE_FALSE(w.directions.empty());
    std::vector<DualVec> seen;
    for (const DualVec& y : w.directions) {
      REQUIRE(lex_pos(y));
      REQUIRE(primitive_part(y).multiplier == 1);
      REQUIRE(spread_over(p.embedded_vertices(), y) == w.width);
      seen.push_back(y);
    }
    std::sort(seen.begin(), seen.end());
    REQUIRE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
  // The unit cube's three axis directions are exactly the minimizers.
  WidthResult w = lattice_width(cube3(1));
  REQUIRE(w.directions.size() == 3);
}

TEST_CASE("width agrees with the exhaustive dual scan") {
  std::mt19937_64 rng(0x31D7u);
  int checked = 0;
  for (int t = 0; t < 25; ++t) {
    std::vector<Vec> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(oracles::random_vec(rng, 3, -3, 3));
    Polytope p = hull(pts);
    if (p.affine_dim() != 3) continue;
    ++checked;
    REQUIRE(lattice_width(p).width == oracles::oracle_width(p.vertices(), 6));
  }
  REQUIRE(checked >= 15);
  for (const Polytope& p : {cube3(2), simplex3(3), prism()})
    REQUIRE(lattice_width(p).width == oracles::oracle_width(p.vertices(), 6));
}

TEST_CASE("width is a lattice invariant") {
  std::mt19937_64 rng(0x11EAu);
  for (const Polytope& p : {simplex3(2), cube3(2), prism()}) {
    Int w = lattice_width(p).width;
    for (int t = 0; t < 8; ++t) {
      UnimodularAffineMap f{oracles::random_unimodular(rng, 3),
                            oracles::random_vec(rng, 3, -3, 3)};
      std::vector<Vec> img;
      for (const Vec& v : p.vertices()) img.push_back(f(v));
      REQUIRE(lattice_width(hull(img)).width == w);
    }
  }
}

TEST_CASE("bounded dual-vector enumeration matches brute force") {
  for (const Polytope& p : {simplex3(2), cube3(1), cube3(2), prism()}) {
    for (Int wmax : {Int(1), Int(2)}) {
      std::vector<DualVectorEntry> lib = dual_vectors_up_to_width(p, wmax);
      std::sort(lib.begin(), lib.end(), [](const DualVectorEntry& a, const DualVectorEntry& b) {
        return a.direction < b.direction;
      });
      REQUIRE(lib == brute_duals(p, wmax, 4));
    }
  }
}

TEST_CASE("doubled triangle recognition") {
  const Polytope& dd = doubled_triangle();
  REQUIRE(normalized_volume(dd) == 4);
  REQUIRE(lattice_points(dd).total == 6);
  REQUIRE(detail::is_doubled_triangle(dd));

  // Recognition agrees with the canonical-form comparison on every polygon
  // class of normalized volume at most six.
  std::vector<Polytope> classes = enumerate_polygons(6);
  int hits = 0;
  for (const Polytope& p : classes) {
    bool direct = detail::is_doubled_triangle(p);
    bool canon = canonical_form(p) == detail::doubled_triangle_form();
    REQUIRE(direct == canon);
    hits += direct ? 1 : 0;
  }
  REQUIRE(hits == 1);
  REQUIRE(classes.size() >= 13);  // at least the classes of volume <= 4
}

TEST_CASE("polygon trichotomy") {
  SECTION("interior points") {
    PolygonClass c = classify_polygon(hull({{0, 0}, {3, 0}, {0, 3}}));
    REQUIRE(c.kind == PolygonKind::HasInteriorPoints);
  }

  SECTION("doubled triangle") {
    PolygonClass c = classify_polygon(hull({{5, 1}, {7, 1}, {5, 3}}));
    REQUIRE(c.kind == PolygonKind::TwoDelta2);
  }

  SECTION("two-row polygons and their parameters") {
    auto expect = [](std::initializer_list<Vec> pts, long long h1, long long h2) {
      PolygonClass c = classify_polygon(hull(pts));
      REQUIRE(c.kind == PolygonKind::Lawrence);
      REQUIRE(c.h1 == h1);
      REQUIRE(c.h2 == h2);
    };
    expect({Vec{0, 0}, Vec{1, 0}, Vec{0, 1}}, 1, 0);            // unit triangle
    expect({Vec{0, 0}, Vec{1, 0}, Vec{0, 1}, Vec{1, 1}}, 1, 1);  // unit square
    expect({Vec{0, 0}, Vec{4, 0}, Vec{0, 1}, Vec{2, 1}}, 4, 2);
    expect({Vec{0, 0}, Vec{5, 0}, Vec{0, 1}}, 5, 0);
    // A sheared presentation reduces to the same parameters.
    expect({Vec{0, 0}, Vec{4, 4}, Vec{0, 1}, Vec{2, 3}}, 4, 2);
  }

  SECTION("reconstruction round-trip") {
    for (long long h1 = 1; h1 <= 4; ++h1)
      for (long long h2 = 0; h2 <= h1; ++h2) {
        Polytope p = lawrence_polygon(h1, h2);
        PolygonClass c = classify_polygon(p);
        REQUIRE(c.kind == PolygonKind::Lawrence);
        REQUIRE(c.h1 == h1);
        REQUIRE(c.h2 == h2);
      }
    REQUIRE_THROWS_AS(lawrence_polygon(2, 3), PreconditionError);
    REQUIRE_THROWS_AS(lawrence_polygon(0, 0), PreconditionError);
  }

  SECTION("dimension validation") {
    REQUIRE_THROWS_AS(classify_polygon(simplex3(1)), PreconditionError);
    REQUIRE_THROWS_AS(classify_polygon(hull({{0, 0}, {1, 0}})), PreconditionError);
  }
}

TEST_CASE("width-one polytopes split into two consecutive levels") {
  SECTION("witness structure") {
    auto w = is_cayley(prism());
    REQUIRE(w.has_value());
    LatticePointSet pts = lattice_points(prism());
    REQUIRE(static_cast<long long>(w->lower.size() + w->upper.size()) == pts.total);
    for (const Vec& x : w->lower) REQUIRE(dot(w->direction, x) == w->base_level);
    for (const Vec& x : w->upper) REQUIRE(dot(w->direction, x) == w->base_level + 1);
    REQUIRE_FALSE(w->lower.empty());
    REQUIRE_FALSE(w->upper.empty());
  }

  SECTION("slabs of any thickness pattern") {
    Polytope slab = hull({{0, 0, 0}, {3, 0, 0}, {0, 4, 0}, {3, 4, 0},
                          {0, 0, 1}, {3, 0, 1}, {0, 4, 1}, {3, 4, 1}});
    auto w = is_cayley(slab);
    REQUIRE(w.has_value());
    REQUIRE(w->lower.size() == 20);
    REQUIRE(w->upper.size() == 20);
  }

  SECTION("wider polytopes are refused") {
    REQUIRE_FALSE(is_cayley(simplex3(2)).has_value());
    REQUIRE_FALSE(is_cayley(cube3(2)).has_value());
    REQUIRE_THROWS_AS(is_cayley(hull({{0, 0}, {1, 0}, {0, 1}})), PreconditionError);
  }
}

TEST_CASE("projection onto the doubled triangle") {
  SECTION("the doubled tetrahedron projects") {
    auto w = projects_onto_2delta2(simplex3(2));
    REQUIRE(w.has_value());
    REQUIRE(w->map.rows() == 2);
    REQUIRE(w->map.cols() == 3);
    // Both rows are spread-2 functionals.
    for (int r = 0; r < 2; ++r) REQUIRE(spread_over(simplex3(2).vertices(), w->map.row(r)) == 2);
    // The rows form a surjection onto the plane lattice: some 2x2 minor pair
    // has gcd one.
    Vec y1 = w->map.row(0), y2 = w->map.row(1);
    Int g = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) g = gcd(g, y1[a] * y2[b] - y1[b] * y2[a]);
    REQUIRE(g == 1);
    // The image polygon is the doubled triangle and covers every mapped
    // lattice point of the source.
    Polytope image = hull(w->image_vertices);
    REQUIRE(detail::is_doubled_triangle(image));
    for (const Vec& x : lattice_points(simplex3(2)).points) {
      Vec ix{dot(y1, x), dot(y2, x)};
      REQUIRE(image.contains(ix));
    }
  }

  SECTION("negatives") {
    // The unit simplex cannot surject: every candidate row pair has even
    // minors.  Wide and interior-point polytopes fail for spread reasons.
    REQUIRE_FALSE(projects_onto_2delta2(simplex3(1)).has_value());
    REQUIRE_FALSE(projects_onto_2delta2(simplex3(3)).has_value());
    REQUIRE_FALSE(projects_onto_2delta2(cube3(1)).has_value());
    for (const Polytope& p : catalog()) REQUIRE_FALSE(projects_onto_2delta2(p).has_value());
  }
}

TEST_CASE("trichotomy for 3-polytopes") {
  SECTION("interior points") {
    Classification c = classify_3d(cube3(2));
    REQUIRE(c.tag == Tag3::HasInteriorPoints);
    REQUIRE(c.interior_points == 1);
    REQUIRE_FALSE(c.cayley.has_value());
    REQUIRE_FALSE(c.projection.has_value());
  }

  SECTION("width one") {
    Classification c = classify_3d(prism());
    REQUIRE(c.tag == Tag3::Cayley);
    REQUIRE(c.interior_points == 0);
    REQUIRE(c.width == 1);
    REQUIRE(c.cayley.has_value());
  }

  SECTION("projection") {
    Classification c = classify_3d(simplex3(2));
    REQUIRE(c.tag == Tag3::ProjectsTo2Delta2);
    REQUIRE(c.interior_points == 0);
    REQUIRE(c.width == 2);
    REQUIRE(c.projection.has_value());
  }

  SECTION("exceptional members name their containers") {
    const std::vector<Polytope>& cat = catalog();
    Classification c = classify_3d(cat[2]);  // the triple-dilated simplex
    REQUIRE(c.tag == Tag3::Exceptional);
    REQUIRE(c.interior_points == 0);
    REQUIRE(c.width == 3);
    REQUIRE(std::find(c.containers.begin(), c.containers.end(), 3) != c.containers.end());

    ClassifyOptions no_containers;
    no_containers.find_containers = false;
    Classification fast = classify_3d(cat[2], no_containers);
    REQUIRE(fast.tag == Tag3::Exceptional);
    REQUIRE(fast.containers.empty());
  }

  SECTION("catalog widths") {
    const std::vector<Polytope>& cat = catalog();
    REQUIRE(cat.size() == 9);
    std::vector<long long> widths;
    for (const Polytope& p : cat) widths.push_back(lattice_width(p).width.value());
    REQUIRE(widths == std::vector<long long>{3, 3, 3, 2, 2, 2, 2, 2, 2});
  }

  SECTION("dimension validation") {
    REQUIRE_THROWS_AS(classify_3d(hull({{0, 0}, {1, 0}, {0, 1}})), PreconditionError);
    REQUIRE_THROWS_AS(classify_3d(hull({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})), PreconditionError);
  }
}

TEST_CASE("four smallest polygons with one interior point") {
  const std::vector<Polytope>& polys = smallest_interior_point_polygons();
  REQUIRE(polys.size() == 4);
  std::vector<CanonicalForm> forms;
  for (const Polytope& p : polys) {
    REQUIRE(p.affine_dim() == 2);
    REQUIRE(lattice_points(p).relative_interior == 1);
    forms.push_back(canonical_form(p));
  }
  std::sort(forms.begin(), forms.end());
  REQUIRE(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
}
