#include <cmath>

#include "doctest.h"
#include "hullfn/hull_functions.hpp"
#include "hullfn/shapes.hpp"
#include "test_support.hpp"

using namespace hullfn;
using hullfn::test::error_of;
using hullfn::test::random_vec;

namespace {

double shoelace(const std::vector<Vec2>& ccw) {
  double s = 0.0;
  for (std::size_t i = 0; i < ccw.size(); ++i) s += cross(ccw[i], ccw[(i + 1) % ccw.size()]);
  return 0.5 * s;
}

// Cone sum over the facets whose halfspace excludes t, each facet fanned into
// triangles: vol(P) + sum det(a - t, b - t, c - t) / 3!.
double g0_determinant_sum(const Polytope3& p, const Vec3& t) {
  double sum = p.volume();
  for (const Facet& f : p.facets()) {
    if (dot(f.normal, t) <= f.offset) continue;
    const Vec3& a = p.vertices()[f.loop[0]];
    for (std::size_t i = 1; i + 1 < f.loop.size(); ++i) {
      const Vec3& b = p.vertices()[f.loop[i]];
      const Vec3& c = p.vertices()[f.loop[i + 1]];
      sum -= dot(a - t, cross(b - t, c - t)) / 6.0;
    }
  }
  return sum;
}

double g0_determinant_sum(const Polygon& p, const Vec2& t) {
  double sum = p.area();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (dot(p.normal(i), t) <= p.offset(i)) continue;
    sum += cross(p.vertex(static_cast<std::ptrdiff_t>(i) + 1) - t, p.vertex(static_cast<std::ptrdiff_t>(i)) - t) / 2.0;
  }
  return sum;
}

template <class K, class V>
double point_hull_volume(const K& k, const V& t) {
  std::vector<V> pts = vertices_of(k);
  pts.push_back(t);
  return volume(convex_hull(pts));
}

}  // namespace

TEST_CASE("chf examples") {
  const Polygon sq = axis_square();
  CHECK(chf(sq, {3, 0}) == doctest::Approx(10.0));
  // Hull of the square and its (1,1) translate is a hexagon.
  CHECK(chf(sq, {1, 1}) == doctest::Approx(shoelace({{-1, -1}, {1, -1}, {2, 0}, {2, 2}, {0, 2}, {-1, 1}})));
  CHECK(chf(sq, {1, 1}) == doctest::Approx(8.0));
  CHECK(chf(sq, {0, 0}) == doctest::Approx(4.0));
  CHECK(chf(axis_cube(), {0, 0, 0}) == doctest::Approx(8.0));
  CHECK(chf(axis_cube(), {0, 0, 3}) == doctest::Approx(20.0));
}

TEST_CASE("homothetic chf examples") {
  const Polygon sq = axis_square();
  CHECK(homothetic_chf(sq, 0.5, {0.5, 0}) == doctest::Approx(4.0));
  // Square and the half-size square centred at (2, 0): hull is a hexagon.
  const double oracle = shoelace({{-1, -1}, {1, -1}, {2.5, -0.5}, {2.5, 0.5}, {1, 1}, {-1, 1}});
  CHECK(oracle == doctest::Approx(6.25));
  CHECK(homothetic_chf(sq, 0.5, {2, 0}) == doctest::Approx(oracle));
  Rng rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    const Polygon p = random_polygon(rng, rng.integer(3, 10));
    const Vec2 t = rng.uniform(0.0, 3.0) * rng.on_circle();
    CHECK(homothetic_chf(p, 0.0, t) == doctest::Approx(point_hull_volume(p, t)).epsilon(1e-12));
  }
}

TEST_CASE("homothetic chf domain errors") {
  CHECK(error_of([] { homothetic_chf(axis_square(), 1.0, Vec2{1, 0}); }) == ErrorCode::LambdaOutOfRange);
  CHECK(error_of([] { homothetic_chf(axis_square(), -0.1, Vec2{1, 0}); }) == ErrorCode::LambdaOutOfRange);
  CHECK(error_of([] { lambda_reduce(axis_cube(), 1.5, Vec3{1, 0, 0}); }) == ErrorCode::LambdaOutOfRange);
  CHECK(error_of([] { homothetic_chf(translate(axis_square(), {3, 0}), 0.5, Vec2{1, 0}); }) ==
        ErrorCode::OriginNotInterior);
  // lambda = 0 has no centre requirement.
  CHECK(homothetic_chf(translate(axis_square(), {3, 0}), 0.0, Vec2{3, 0}) == doctest::Approx(4.0));
}

TEST_CASE("closed form examples") {
  const Polygon sq = axis_square();
  const HullFunctionValue a = g0_closed_form(sq, {4, 0});
  CHECK(a.value == doctest::Approx(7.0));
  CHECK(a.active_facets.size() == 1);
  const HullFunctionValue b = g0_closed_form(sq, {2, 2});
  CHECK(b.value == doctest::Approx(shoelace({{-1, -1}, {1, -1}, {2, 2}, {-1, 1}})));
  CHECK(b.value == doctest::Approx(6.0));
  CHECK(b.active_facets.size() == 2);
  const HullFunctionValue c = g0_closed_form(sq, {0.3, -0.9});
  CHECK(c.value == doctest::Approx(4.0));
  CHECK(c.active_facets.empty());
  // On a facet line the contribution is zero either way.
  CHECK(g0_closed_form(sq, {1, 0.5}).value == doctest::Approx(4.0));
}

TEST_CASE("closed form agrees with the determinant sum and the point hull") {
  Rng rng(22);
  for (int rep = 0; rep < 40; ++rep) {
    const Polygon p = random_polygon(rng, rng.integer(3, 12));
    const Vec2 t = rng.uniform(0.0, 3.0) * rng.on_circle();
    const double g = g0_closed_form(p, t).value;
    CHECK(g == doctest::Approx(g0_determinant_sum(p, t)).epsilon(1e-12));
    CHECK(g == doctest::Approx(point_hull_volume(p, t)).epsilon(1e-9));

    const Polytope3 q = random_polytope(rng, rng.integer(4, 16));
    const Vec3 s = rng.uniform(0.0, 3.0) * rng.on_sphere();
    const double h = g0_closed_form(q, s).value;
    CHECK(h == doctest::Approx(g0_determinant_sum(q, s)).epsilon(1e-12));
    CHECK(h == doctest::Approx(point_hull_volume(q, s)).epsilon(1e-9));
  }
}

TEST_CASE("lambda reduction examples") {
  const Polygon sq = axis_square();
  CHECK(std::abs(lambda_reduce(sq, 0.5, {2, 0}) - 7.0) <= 1e-12);
  CHECK(std::abs(lambda_reduce(sq, 0.5, {2, 0}) - g0_closed_form(sq, {4, 0}).value) <= 1e-12);
  Rng rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    const Polygon p = random_polygon(rng, rng.integer(3, 10));
    const Vec2 t = rng.uniform(0.0, 3.0) * rng.on_circle();
    CHECK(lambda_reduce(p, 0.0, t) == doctest::Approx(g0_closed_form(p, t).value).epsilon(1e-12));
    const double lambda = rng.uniform(0.05, 0.9);
    const Vec2 inside = (1.0 - lambda) * rng.uniform(0.0, 0.99) * gauge(p, rng.on_circle()) * Vec2{1, 0};
    if (facet_excess(scale(p, 1.0 - lambda), inside) < 0.0) {
      CHECK(lambda_reduce(p, lambda, inside) == doctest::Approx(p.area()).epsilon(1e-12));
    }
  }
}

TEST_CASE("chf carries volume and brightness") {
  Rng rng(24);
  for (int rep = 0; rep < 10; ++rep) {
    const Polygon p = random_polygon(rng, rng.integer(3, 12));
    const Polytope3 q = random_polytope(rng, rng.integer(4, 14));
    for (int s = 0; s < 20; ++s) {
      const double alpha = rng.uniform(-4.0, 4.0);
      const Vec2 u = rng.on_circle();
      CHECK(chf(p, alpha * u) == doctest::Approx(p.area() + std::abs(alpha) * brightness(p, u)).epsilon(1e-9));
      const Vec3 w = rng.on_sphere();
      CHECK(chf(q, alpha * w) == doctest::Approx(q.volume() + std::abs(alpha) * brightness(q, w)).epsilon(1e-9));
    }
  }
}

TEST_CASE("chf does not see reflections") {
  Rng rng(25);
  for (int rep = 0; rep < 10; ++rep) {
    const Polygon p = random_polygon(rng, rng.integer(3, 10));
    const Polytope3 q = random_polytope(rng, rng.integer(4, 12));
    for (int s = 0; s < 10; ++s) {
      const Vec2 t = rng.uniform(0.0, 3.0) * rng.on_circle();
      const double g = chf(p, t);
      CHECK(chf(negate(p), t) == doctest::Approx(g).epsilon(1e-12));
      CHECK(chf(p, -t) == doctest::Approx(g).epsilon(1e-12));
      const Vec3 r = rng.uniform(0.0, 3.0) * rng.on_sphere();
      const double h = chf(q, r);
      CHECK(chf(negate(q), r) == doctest::Approx(h).epsilon(1e-12));
      CHECK(chf(q, -r) == doctest::Approx(h).epsilon(1e-12));
    }
  }
}

template <class K>
void check_convex_along_lines(const K& k, Rng& rng) {
  using V = typename K::Point;
  for (int s = 0; s < 20; ++s) {
    const V a = rng.uniform(0.0, 3.0) * random_vec(rng, V{});
    const V b = rng.uniform(0.0, 3.0) * random_vec(rng, V{});
    const V mid = 0.5 * (a + b);
    CHECK(chf(k, mid) <= 0.5 * (chf(k, a) + chf(k, b)) + 1e-9);
    const double lambda = rng.uniform(0.0, 0.9);
    CHECK(homothetic_chf(k, lambda, mid) <=
          0.5 * (homothetic_chf(k, lambda, a) + homothetic_chf(k, lambda, b)) + 1e-9);
    CHECK(g0_closed_form(k, mid).value <= 0.5 * (g0_closed_form(k, a).value + g0_closed_form(k, b).value) + 1e-9);
  }
}

TEST_CASE("hull functions are convex along lines") {
  Rng rng(26);
  for (int rep = 0; rep < 10; ++rep) {
    check_convex_along_lines(random_polygon(rng, rng.integer(3, 10)), rng);
    check_convex_along_lines(random_polytope(rng, rng.integer(4, 12)), rng);
  }
}

TEST_CASE("minimal set of the homothetic chf is (1 - lambda) K") {
  Rng rng(27);
  for (int rep = 0; rep < 6; ++rep) {
    const Polytope3 q = random_polytope(rng, rng.integer(4, 12));
    const double lambda = rng.uniform(0.1, 0.9);
    const Polytope3 shrunk = scale(q, 1.0 - lambda);
    for (int s = 0; s < 100; ++s) {
      const Vec3 t = rng.uniform(0.0, 1.5) * shrunk.diameter() * rng.on_sphere();
      const double excess = facet_excess(shrunk, t);
      if (std::abs(excess) <= 1e-6 * q.diameter()) continue;
      const bool minimal = std::abs(homothetic_chf(q, lambda, t) - q.volume()) <= kEps * q.volume();
      CHECK(minimal == (excess < 0.0));
    }
  }
}

namespace {

// Largest s with G_{K,lambda}(s u) = vol K, by bisection.
double minimal_radius(const Polygon& k, double lambda, const Vec2& u) {
  const double vol = k.area();
  double lo = 0.0;
  double hi = k.diameter();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (homothetic_chf(k, lambda, mid * u) - vol <= 1e-13 * vol ? lo : hi) = mid;
  }
  return lo;
}

// Recovers polygon vertices from boundary samples in angular order: runs of
// collinear sample segments give the sidelines, neighbouring sidelines meet
// at the vertices. Near a corner the minimal set is touched vertex to vertex,
// where the excess volume grows quadratically and the bisection is least
// precise, so each line is fitted through the inner half of its run.
std::vector<Vec2> vertices_from_samples(const std::vector<Vec2>& pts) {
  const std::size_t n = pts.size();
  std::vector<Vec2> dirs(n);
  for (std::size_t i = 0; i < n; ++i) dirs[i] = normalized(pts[(i + 1) % n] - pts[i]);
  struct Line {
    Vec2 point;
    Vec2 dir;
  };
  std::vector<Line> lines;
  // Start just after a corner so no run wraps around.
  std::size_t start = 0;
  while (std::abs(cross(dirs[start], dirs[(start + 1) % n])) < 1e-7) ++start;
  start = (start + 1) % n;
  std::size_t run = 0;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = (start + step) % n;
    const std::size_t j = (i + 1) % n;
    if (std::abs(cross(dirs[i], dirs[j])) < 1e-7) {
      ++run;
    } else {
      if (run >= 2) {
        const std::size_t first = (i + n - run) % n;
        const Vec2& a = pts[(first + (run + 2) / 4) % n];
        const Vec2& b = pts[(first + 3 * (run + 2) / 4) % n];
        lines.push_back({a, normalized(b - a)});
      }
      run = 0;
    }
  }
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& a = lines[i];
    const Line& b = lines[(i + 1) % lines.size()];
    const double s = cross(b.point - a.point, b.dir) / cross(a.dir, b.dir);
    out.push_back(a.point + s * a.dir);
  }
  return out;
}

}  // namespace

TEST_CASE("homothetic chf determines the body") {
  Rng rng(28);
  for (int rep = 0; rep < 5; ++rep) {
    const Polygon k = random_polygon(rng, rng.integer(3, 7));
    const double lambda = rng.uniform(0.1, 0.8);
    std::vector<Vec2> boundary;
    for (int i = 0; i < 1440; ++i) {
      const double a = 2.0 * std::numbers::pi * i / 1440.0;
      const Vec2 u{std::cos(a), std::sin(a)};
      boundary.push_back(minimal_radius(k, lambda, u) / (1.0 - lambda) * u);
    }
    const std::vector<Vec2> rec = vertices_from_samples(boundary);
    REQUIRE(rec.size() == k.size());
    const Polygon back(rec);
    // The hull keeps points within its kEps collinearity slack on the
    // boundary, so the minimal set is only resolved to a few kEps * diam,
    // further magnified by 1 / (1 - lambda).
    CHECK(hausdorff_distance(back, k) < 1e-7 * k.diameter());
  }
}

TEST_CASE("Body overloads dispatch by dimension") {
  const Body sq(axis_square());
  const std::vector<double> t{4.0, 0.0};
  CHECK(g0_closed_form(sq, t).value == doctest::Approx(7.0));
  CHECK(chf(sq, t) == doctest::Approx(12.0));
  const std::vector<double> t3{0.0, 0.0, 2.0};
  CHECK(error_of([&] { chf(sq, t3); }) == ErrorCode::DimensionMismatch);
}
