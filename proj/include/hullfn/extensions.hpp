#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hullfn/geometry.hpp"
#include "hullfn/illumination.hpp"

namespace hullfn {

/// Pairwise intersections p_{i,j} = L_i n L_j of the sidelines of a polygon,
/// where L_i is the line through side i = [vertex(i), vertex(i+1)]. Indices
/// are taken mod m; p_{i,i+1} is the shared vertex, parallel pairs are absent.
class SidelineTable {
 public:
  explicit SidelineTable(const Polygon& p);

  std::size_t size() const noexcept { return m_; }
  const std::optional<Vec2>& at(std::ptrdiff_t i, std::ptrdiff_t j) const;

 private:
  std::size_t index(std::ptrdiff_t i) const;
  std::size_t m_;
  std::vector<std::optional<Vec2>> table_;
};

SidelineTable sideline_intersections(const Polygon& p);

/// Closed curve with vertices q_j = p_{j-k-1, j+l}; segment j joins q_j to
/// q_{j+1} = p_{j-k, j+l+1}.
struct ExtensionCurve {
  int k = 0;
  int l = 0;
  std::vector<Vec2> vertices;
};

struct ExtensionCheck {
  HomothetyReport homothety;
  /// max_j |G_{0,P}(q_j) - G0| / G0 with G0 the mean of G_{0,P}(q_j).
  double level_residual = 0.0;
  double level = 0.0;
};

struct RegularityReport {
  bool is_affinely_regular = false;
  double tau = 0.0;
  double max_residual = 0.0;
};

/// Throws MissingIntersection if a required sideline pair is parallel.
ExtensionCurve kl_extension(const Polygon& p, int k, int l);

/// True when k, l >= 1, k + l is even and k + l + 1 < m / 2.
bool extension_admissible(int m, int k, int l);

/// Vertex-correspondence homothety fit of bd(P) onto the (k,l)-extension:
/// vertex i of P maps to p_{i-r-1, i+r}, r = (k+l)/2. Throws
/// ConditionViolated when the pair is not admissible.
ExtensionCheck extension_homothety_check(const Polygon& p, int k, int l);

/// Fits q_{i+2} - q_{i-1} = tau (q_{i+1} - q_i) by least squares in tau and
/// accepts on the sup residual (< 1e-6 diam).
RegularityReport is_affinely_regular(const Polygon& p);

/// A (v) + b applied to the regular m-gon on the unit circle.
Polygon affinely_regular_polygon(int m, const std::array<std::array<double, 2>, 2>& a, const Vec2& b);

}  // namespace hullfn
