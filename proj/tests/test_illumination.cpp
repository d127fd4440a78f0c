#include <cmath>

#include "doctest.h"
#include "hullfn/directions.hpp"
#include "hullfn/hull_functions.hpp"
#include "hullfn/illumination.hpp"
#include "hullfn/shapes.hpp"
#include "test_support.hpp"

using namespace hullfn;
using hullfn::test::as_set;
using hullfn::test::error_of;

namespace {

template <class K>
double vertex_residual(const K& p, const LevelSet<K>& ls) {
  double worst = 0.0;
  for (const auto& v : vertices_of(ls.body)) {
    worst = std::max(worst, std::abs(g0_closed_form(p, v).value - ls.level) / ls.level);
  }
  return worst;
}

// Distance along each ray between the level set of the closed form and the
// boundary of the constructed body, relative to its diameter.
double ray_gap(const Polygon& p, const LevelSet<Polygon>& ls, int n) {
  double worst = 0.0;
  for (const Vec2& u : circle_directions(n)) {
    worst = std::max(worst, std::abs(gauge(ls.body, u) - ray_level_solve(p, u, ls.level)));
  }
  return worst / ls.body.diameter();
}

double ray_gap(const Polytope3& p, const LevelSet<Polytope3>& ls, int n) {
  double worst = 0.0;
  for (const Vec3& u : fibonacci_sphere(n)) {
    worst = std::max(worst, std::abs(gauge(ls.body, u) - ray_level_solve(p, u, ls.level)));
  }
  return worst / ls.body.diameter();
}

}  // namespace

TEST_CASE("line restriction is the closed form along the line") {
  const Polygon sq = axis_square();
  const LineRestriction line(sq, Vec2{1, 0}, Vec2{0, 1});
  for (double s : {-3.0, -1.0, 0.0, 0.5, 2.5}) {
    CHECK(line.value(s) == doctest::Approx(g0_closed_form(sq, Vec2{1, s}).value));
  }
  const auto r = line.roots(5.0);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(-2.0));
  CHECK(r[1] == doctest::Approx(2.0));
  CHECK(line.roots(3.0).empty());
}

TEST_CASE("ray solve examples") {
  const Polygon sq = axis_square();
  CHECK(ray_level_solve(sq, {1, 0}, 7.0) == doctest::Approx(4.0));
  CHECK(ray_level_solve(sq, {1, 0}, 4.0 + 1e-9) == doctest::Approx(1.0).epsilon(1e-8));
  const double tau = ray_level_solve(axis_cube(), {0, 0, 1}, 8.0 + 4.0 / 3.0);
  CHECK(tau == doctest::Approx(2.0));

  Rng rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    const Polytope3 q = random_polytope(rng, rng.integer(4, 14));
    const double level = q.volume() * rng.uniform(1.01, 4.0);
    const Vec3 u = rng.on_sphere();
    const double t = ray_level_solve(q, u, level);
    CHECK(std::abs(g0_closed_form(q, t * u).value - level) < 1e-12 * level);
  }
}

TEST_CASE("ray solve errors") {
  const Polygon sq = axis_square();
  CHECK(error_of([&] { ray_level_solve(sq, {1, 1}, 7.0); }) == ErrorCode::NonUnitDirection);
  CHECK(error_of([&] { ray_level_solve(sq, {1, 0}, 4.0); }) == ErrorCode::LevelBelowVolume);
  CHECK(error_of([&] { ray_level_solve(translate(sq, {3, 0}), {1, 0}, 7.0); }) == ErrorCode::OriginNotInterior);
  CHECK(error_of([&] { illumination_body(sq, 0.0); }) == ErrorCode::NonPositiveDelta);
  CHECK(error_of([&] { illumination_body(axis_cube(), -1.0); }) == ErrorCode::NonPositiveDelta);
}

TEST_CASE("square illumination body is the octagon") {
  const LevelSet<Polygon> ls = illumination_body(axis_square(), 1.0);
  CHECK(ls.level == doctest::Approx(5.0));
  CHECK(as_set(ls.body.vertices()) ==
        as_set(std::vector<Vec2>{{2, 1}, {1, 2}, {-1, 2}, {-2, 1}, {-2, -1}, {-1, -2}, {1, -2}, {2, -1}}));
  // The edge joining (2,1) and (1,2) lies on the level set too.
  CHECK(g0_closed_form(axis_square(), {1.5, 1.5}).value == doctest::Approx(5.0));
}

TEST_CASE("small delta illumination body shrinks onto the triangle") {
  const Polygon tri({{0, 0}, {1, 0}, {0, 1}});
  const LevelSet<Polygon> ls = illumination_body(tri, 1e-6);
  CHECK(hausdorff_distance(ls.body, tri) < 1e-4);
  CHECK(vertex_residual(tri, ls) < 1e-9);
}

TEST_CASE("random pentagon illumination body") {
  Rng rng(32);
  const Polygon p = random_polygon(rng, 5);
  const LevelSet<Polygon> ls = illumination_body(p, 0.5);
  CHECK(vertex_residual(p, ls) < 1e-9);
  for (const Vec2& v : p.vertices()) CHECK(facet_excess(ls.body, v) < 0.0);
  CHECK(ray_gap(p, ls, 720) < 1e-7);
}

TEST_CASE("cube illumination body") {
  const LevelSet<Polytope3> ls = illumination_body(axis_cube(), 4.0 / 3.0);
  std::vector<Vec3> want;
  for (int axis = 0; axis < 3; ++axis) {
    for (int s = 0; s < 8; ++s) {
      double c[3] = {(s & 1) ? 1.0 : -1.0, (s & 2) ? 1.0 : -1.0, (s & 4) ? 1.0 : -1.0};
      c[axis] *= 2.0;
      want.push_back({c[0], c[1], c[2]});
    }
  }
  CHECK(ls.body.vertices().size() == 24);
  CHECK(hausdorff_distance(ls.body, convex_hull(want)) < 1e-9);
  CHECK(g0_closed_form(axis_cube(), {1, 1.5, 1.5}).value == doctest::Approx(8.0 + 4.0 / 3.0));
}

TEST_CASE("tetrahedron illumination body") {
  const Polytope3 t = regular_tetrahedron();
  const LevelSet<Polytope3> ls = illumination_body(t, 0.1);
  CHECK(vertex_residual(t, ls) < 1e-9);
  CHECK(ray_gap(t, ls, 500) < 1e-7);
}

TEST_CASE("illumination bodies grow with delta") {
  Rng rng(33);
  for (int rep = 0; rep < 5; ++rep) {
    const Polytope3 q = random_polytope(rng, rng.integer(4, 12));
    const Polytope3 small = illumination_body(q, 0.1 * q.volume()).body;
    const Polytope3 large = illumination_body(q, 0.3 * q.volume()).body;
    for (const Vec3& v : small.vertices()) CHECK(facet_excess(large, v) < 0.0);
    const Polygon p = random_polygon(rng, rng.integer(3, 10));
    const Polygon a = illumination_body(p, 0.1 * p.area()).body;
    const Polygon b = illumination_body(p, 0.3 * p.area()).body;
    for (const Vec2& v : a.vertices()) CHECK(facet_excess(b, v) < 0.0);
  }
}

TEST_CASE("random level sets are exact") {
  Rng rng(34);
  std::size_t coincident = 0;
  for (int rep = 0; rep < 10; ++rep) {
    const Polygon p = random_polygon(rng, rng.integer(3, 12));
    const LevelSet<Polygon> lp = illumination_body(p, rng.uniform(0.01, 3.0) * p.area());
    CHECK(vertex_residual(p, lp) < 1e-9);
    CHECK(ray_gap(p, lp, 720) < 1e-7);

    const Polytope3 q = random_polytope(rng, rng.integer(4, 14));
    const LevelSet<Polytope3> lq = illumination_body(q, rng.uniform(0.01, 3.0) * q.volume());
    CHECK(vertex_residual(q, lq) < 1e-9);
    CHECK(ray_gap(q, lq, 500) < 1e-7);
    coincident += lq.coincident_candidates;
  }
  MESSAGE("merged coincident candidates over 10 random polytopes: " << coincident);
}

TEST_CASE("sublevel sets of the homothetic chf are scaled illumination bodies") {
  Rng rng(35);
  for (int rep = 0; rep < 4; ++rep) {
    const double lambda = rng.uniform(0.1, 0.8);
    const Polygon p = random_polygon(rng, rng.integer(3, 9));
    const double lp2 = p.area() * rng.uniform(1.2, 3.0);
    const double delta2 = (lp2 - lambda * lambda * p.area()) / (1.0 - lambda * lambda) - p.area();
    const Polygon ill2 = illumination_body(p, delta2).body;

    const Polytope3 q = random_polytope(rng, rng.integer(4, 10));
    const double lp3 = q.volume() * rng.uniform(1.2, 3.0);
    const double l3 = lambda * lambda * lambda;
    const double delta3 = (lp3 - l3 * q.volume()) / (1.0 - l3) - q.volume();
    const Polytope3 ill3 = illumination_body(q, delta3).body;

    // Bisection on the hull-based G_{K,lambda}, independent of the closed form.
    auto sublevel_radius = [&](const auto& k, double level, const auto& u) {
      double lo = 0.0;
      double hi = 10.0 * k.diameter();
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (homothetic_chf(k, lambda, mid * u) <= level ? lo : hi) = mid;
      }
      return lo;
    };
    double gap2 = 0.0;
    for (const Vec2& u : circle_directions(90)) {
      gap2 = std::max(gap2, std::abs(sublevel_radius(p, lp2, u) / (1.0 - lambda) - gauge(ill2, u)));
    }
    double gap3 = 0.0;
    for (const Vec3& u : fibonacci_sphere(60)) {
      gap3 = std::max(gap3, std::abs(sublevel_radius(q, lp3, u) / (1.0 - lambda) - gauge(ill3, u)));
    }
    CHECK(gap2 < 1e-7 * ill2.diameter());
    CHECK(gap3 < 1e-7 * ill3.diameter());
  }
}

TEST_CASE("homothety fit examples") {
  const Polygon sq = axis_square();
  const HomothetyReport a = homothety_fit(sq, translate(scale(sq, 2.0), {1, 0}));
  CHECK(a.is_homothet);
  CHECK(a.ratio == doctest::Approx(2.0));
  REQUIRE(a.center.has_value());
  CHECK((*a.center)[0] == doctest::Approx(-1.0));
  CHECK((*a.center)[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(a.defect < 1e-12);

  const HomothetyReport b = homothety_fit(sq, sq);
  CHECK(b.is_homothet);
  CHECK(b.ratio == doctest::Approx(1.0));
  CHECK(b.defect < 1e-14);

  const Polygon oct = illumination_body(sq, 1.0).body;
  const HomothetyReport c = homothety_fit(sq, oct);
  CHECK_FALSE(c.is_homothet);
  CHECK(c.defect > 0.05);

  CHECK(error_of([&] { homothety_fit(Body(sq), Body(axis_cube())); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("illumination bodies of the tetrahedron and cube are not homothets") {
  for (const Polytope3& p : {regular_tetrahedron(), axis_cube()}) {
    for (double f : {0.05, 0.5, 2.0}) {
      const HomothetyReport r = homothety_fit(p, illumination_body(p, f * p.volume()).body);
      CHECK(r.defect > 1e-3);
      CHECK_FALSE(r.is_homothet);
    }
  }
}
