#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hullfn/projection.hpp"
#include "hullfn/shapes.hpp"
#include "test_support.hpp"

using namespace hullfn;
using hullfn::test::error_of;

TEST_CASE("projection bodies of square and cube") {
  CHECK(hausdorff_distance(projection_body(axis_square()), axis_square(2.0)) < 1e-15);
  const Polytope3 pc = projection_body(axis_cube());
  CHECK(pc.facets().size() == 6);
  CHECK(hausdorff_distance(pc, axis_cube(4.0)) < 1e-12);
}

TEST_CASE("tetrahedron projection body is a rhombic dodecahedron") {
  const Polytope3 t = regular_tetrahedron();
  const Polytope3 pt = projection_body(t);
  CHECK(pt.facets().size() == 12);
  CHECK(pt.vertices().size() == 14);
  for (const Facet& f : pt.facets()) CHECK(f.loop.size() == 4);
  Rng rng(41);
  for (int s = 0; s < 200; ++s) {
    const Vec3 u = rng.on_sphere();
    CHECK(support(pt, u) == doctest::Approx(brightness_projected(t, u)).epsilon(1e-9));
  }
}

TEST_CASE("zonotope support is the brightness function") {
  Rng rng(42);
  for (int rep = 0; rep < 10; ++rep) {
    const Polytope3 q = random_polytope(rng, rng.integer(4, 16));
    const Polytope3 pq = projection_body(q);
    for (int s = 0; s < 50; ++s) {
      const Vec3 u = rng.on_sphere();
      CHECK(std::abs(support(pq, u) - brightness(q, u)) <= 1e-9 * brightness(q, u));
    }
    const Polygon p = random_polygon(rng, rng.integer(3, 12));
    const Polygon pp = projection_body(p);
    for (int s = 0; s < 50; ++s) {
      const Vec2 u = rng.on_circle();
      CHECK(std::abs(support(pp, u) - brightness(p, u)) <= 1e-9 * brightness(p, u));
    }
  }
}

TEST_CASE("polar projection bodies") {
  const std::vector<Vec3> octa{{0.25, 0, 0}, {-0.25, 0, 0}, {0, 0.25, 0}, {0, -0.25, 0}, {0, 0, 0.25}, {0, 0, -0.25}};
  CHECK(hausdorff_distance(polar_projection_body(axis_cube()), convex_hull(octa)) < 1e-12);
  const std::vector<Vec2> diamond{{0.5, 0}, {0, 0.5}, {-0.5, 0}, {0, -0.5}};
  CHECK(hausdorff_distance(polar_projection_body(axis_square()), convex_hull(diamond)) < 1e-15);

  const Polytope3 t = regular_tetrahedron();
  const Polytope3 ppt = polar_projection_body(t);
  CHECK(ppt.vertices().size() == 12);
  CHECK(ppt.facets().size() == 14);
  CHECK(homothety_fit(difference_body(t), ppt).defect < 1e-6);
}

TEST_CASE("tcvp examples") {
  const TcvpReport tri = tcvp_check(regular_polygon(3));
  CHECK(tri.relative_spread < 1e-9);
  CHECK(tri.passes);

  const TcvpReport right = tcvp_check(Polygon({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(right.delta_min == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(right.delta_max == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(right.passes);

  const TcvpReport hex = tcvp_check(regular_polygon(6));
  CHECK(hex.passes);
  CHECK(hex.polar_projection_homothety.is_homothet);

  const TcvpReport cube = tcvp_check(axis_cube());
  CHECK_FALSE(cube.passes);
  CHECK(cube.relative_spread > 0.2);
  CHECK(cube.delta_min >= 8.0 - 1e-9);
  CHECK(cube.delta_max <= 24.0 + 1e-9);

  const TcvpReport tet = tcvp_check(regular_tetrahedron());
  CHECK(tet.passes);
  CHECK(tet.polar_projection_homothety.defect < 1e-6);

  CHECK(error_of([] { tcvp_check(axis_square(), 15); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { ctr_constant(axis_cube(), 8); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("tcvp verdict agrees with the polar projection homothety") {
  std::vector<Body> bodies{Body(regular_polygon(3)), Body(regular_polygon(5)), Body(regular_polygon(6)),
                           Body(axis_square()),      Body(reuleaux_polygon(30)), Body(regular_tetrahedron()),
                           Body(axis_cube())};
  Rng rng(43);
  for (int rep = 0; rep < 5; ++rep) {
    bodies.emplace_back(random_polygon(rng, rng.integer(3, 10)));
    bodies.emplace_back(random_polytope(rng, rng.integer(4, 10)));
  }
  for (const Body& b : bodies) {
    const TcvpReport r = tcvp_check(b, b.dim() == 2 ? 3600 : 4096);
    CHECK(r.passes == r.polar_projection_homothety.is_homothet);
    if (r.passes) {
      // Centred at the origin with ratio 1 / Delta.
      CHECK(r.polar_projection_homothety.ratio > 0.0);
      REQUIRE(r.polar_projection_homothety.center.has_value());
      for (double c : *r.polar_projection_homothety.center) CHECK(std::abs(c) < 1e-9);
      CHECK(r.polar_projection_homothety.ratio == doctest::Approx(1.0 / r.delta_mean).epsilon(1e-9));
    }
  }
}

TEST_CASE("homothety ratio bound is sharp for the disk") {
  // 1 / Delta <= v_n / (2 v_{n-1} vol K), equality for ellipsoids.
  for (const Polygon& p : {regular_polygon(3), regular_polygon(6), regular_polygon(512)}) {
    const TcvpReport r = tcvp_check(p);
    const double bound = std::numbers::pi / (4.0 * p.area());
    CHECK(1.0 / r.delta_mean <= bound * (1.0 + 1e-3));
  }
  const TcvpReport disk = tcvp_check(regular_polygon(512));
  CHECK(1.0 / disk.delta_mean == doctest::Approx(std::numbers::pi / (4.0 * regular_polygon(512).area())).epsilon(1e-3));
  const Polytope3 t = regular_tetrahedron();
  const TcvpReport tet = tcvp_check(t);
  CHECK(1.0 / tet.delta_mean <= (4.0 * std::numbers::pi / 3.0) / (2.0 * std::numbers::pi * t.volume()));
}

TEST_CASE("tcvp reports are translation invariant") {
  Rng rng(44);
  for (int rep = 0; rep < 4; ++rep) {
    const Polygon p = random_polygon(rng, rng.integer(3, 10));
    const Vec2 t = rng.uniform(0.0, 5.0) * rng.on_circle();
    const TcvpReport a = tcvp_check(p);
    const TcvpReport b = tcvp_check(translate(p, t));
    CHECK(std::abs(a.delta_min - b.delta_min) <= 1e-12 * a.delta_min);
    CHECK(std::abs(a.delta_max - b.delta_max) <= 1e-12 * a.delta_max);
    CHECK(std::abs(a.delta_mean - b.delta_mean) <= 1e-12 * a.delta_mean);
    CHECK(std::abs(a.relative_spread - b.relative_spread) <= 1e-12);
    CHECK(std::abs(a.polar_projection_homothety.defect - b.polar_projection_homothety.defect) <= 1e-12);
    CHECK(a.passes == b.passes);

    const Polytope3 q = random_polytope(rng, rng.integer(4, 10));
    const Vec3 s = rng.uniform(0.0, 5.0) * rng.on_sphere();
    const TcvpReport c = tcvp_check(q);
    const TcvpReport d = tcvp_check(translate(q, s));
    CHECK(std::abs(c.delta_min - d.delta_min) <= 1e-12 * c.delta_min);
    CHECK(std::abs(c.delta_max - d.delta_max) <= 1e-12 * c.delta_max);
    CHECK(std::abs(c.relative_spread - d.relative_spread) <= 1e-12);
    CHECK(std::abs(c.polar_projection_homothety.defect - d.polar_projection_homothety.defect) <= 1e-12);
  }
}

TEST_CASE("c_tr values") {
  CHECK(std::abs(ctr_constant(axis_square()) - 3.0) <= 1e-9);
  CHECK(std::abs(ctr_constant(Polygon({{0, 0}, {1, 0}, {0, 1}})) - 3.0) <= 1e-9);
  CHECK(std::abs(ctr_constant(regular_polygon(512)) - (1.0 + 4.0 / std::numbers::pi)) <= 1e-3);
  CHECK(ctr_constant(axis_cube()) == doctest::Approx(4.0));
  Rng rng(45);
  for (int rep = 0; rep < 10; ++rep) {
    CHECK(ctr_constant(random_polygon(rng, rng.integer(3, 12))) >= 1.0 + 4.0 / std::numbers::pi - 1e-3);
    CHECK(ctr_constant(random_polytope(rng, rng.integer(4, 12))) >= 2.5 - 1e-3);
  }
}

TEST_CASE("constancy checks") {
  const ConstancyReport cube = constancy_check(axis_cube());
  CHECK_FALSE(cube.width_constant);
  CHECK_FALSE(cube.brightness_constant);
  const ConstancyReport disk = constancy_check(regular_polygon(256));
  CHECK(disk.width_constant);
  CHECK(disk.brightness_constant);
  const ConstancyReport reuleaux = constancy_check(reuleaux_polygon(300));
  CHECK(reuleaux.width_constant);
  CHECK_FALSE(constancy_check(axis_square()).width_constant);
}
