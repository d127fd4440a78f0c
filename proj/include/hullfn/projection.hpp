#pragma once

#include "hullfn/geometry.hpp"
#include "hullfn/illumination.hpp"

namespace hullfn {

/// Relative spread of Delta(u) below this counts as constant.
inline constexpr double kTcvpTolerance = 1e-6;
/// Ball-likeness threshold for polygonal approximations of round bodies.
inline constexpr double kConstancyTolerance = 1e-3;

struct TcvpReport {
  double delta_min = 0.0;
  double delta_max = 0.0;
  double delta_mean = 0.0;
  /// (max - min) / mean of Delta(u) = rho_{K-K}(u) vol_{n-1}(K | u^perp).
  double relative_spread = 0.0;
  /// Fit of the polar projection body against K - K.
  HomothetyReport polar_projection_homothety;
  bool passes = false;
};

struct ConstancyReport {
  bool width_constant = false;
  bool brightness_constant = false;
  double width_defect = 0.0;
  double brightness_defect = 0.0;
};

/// Planar case: K - K turned by a quarter turn.
Polygon projection_body(const Polygon& k);
/// Zonotope sum over facets of [-g_F, g_F], g_F = (1/2) area(F) n_F.
Polytope3 projection_body(const Polytope3& k);
Body projection_body(const Body& k);

Polygon polar_projection_body(const Polygon& k);
Polytope3 polar_projection_body(const Polytope3& k);
Body polar_projection_body(const Body& k);

/// Delta(u) statistics over a deterministic direction set of n_dirs
/// directions (n_dirs >= 16) plus the Pi°K vs K - K homothety fit.
TcvpReport tcvp_check(const Polygon& k, int n_dirs = 3600);
TcvpReport tcvp_check(const Polytope3& k, int n_dirs = 4096);
TcvpReport tcvp_check(const Body& k, int n_dirs);

/// 1 + max_u Delta(u) / vol(K). The direction set is augmented with the
/// vertex directions of K - K, where the maximum is attained.
double ctr_constant(const Polygon& k, int n_dirs = 3600);
double ctr_constant(const Polytope3& k, int n_dirs = 4096);
double ctr_constant(const Body& k, int n_dirs);

/// Constant width <=> K - K is a ball; constant brightness <=> Pi K is a ball.
ConstancyReport constancy_check(const Polygon& k);
ConstancyReport constancy_check(const Polytope3& k);
ConstancyReport constancy_check(const Body& k);

}  // namespace hullfn
