#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hullfn {

/// Global relative tolerance for geometric predicates. Absolute thresholds
/// are always derived as kEps times a length (or area) scale of the input.
inline constexpr double kEps = 1e-9;

enum class ErrorCode {
  DegenerateInput,
  InvalidBody,
  OriginNotInterior,
  DimensionMismatch,
  NonUnitDirection,
  LambdaOutOfRange,
  LevelBelowVolume,
  NonPositiveDelta,
  MissingIntersection,
  ConditionViolated,
  SingularMatrix,
  SchemaError,
  NonConvexInput,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
  Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
  friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend Vec2 operator*(Vec2 a, double s) { return a *= s; }
  friend Vec2 operator*(double s, Vec2 a) { return a *= s; }
  friend Vec2 operator/(Vec2 a, double s) { return a *= 1.0 / s; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend Vec3 operator/(Vec3 a, double s) { return a *= 1.0 / s; }
  friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
/// z-component of the 3D cross product.
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
template <class V>
V normalized(const V& a) { return a / norm(a); }
/// Counterclockwise quarter turn.
inline Vec2 perp(const Vec2& a) { return {-a.y, a.x}; }

/// Convex polygon with counterclockwise, strictly convex vertex order.
/// Side i is the segment from vertex(i) to vertex(i + 1); its outward unit
/// normal n_i and offset b_i describe the supporting line <n_i, x> = b_i.
class Polygon {
 public:
  static constexpr int kDim = 2;
  using Point = Vec2;

  explicit Polygon(std::vector<Vec2> vertices);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Vec2>& vertices() const noexcept { return vertices_; }
  /// Cyclic access; any integer index is reduced mod size().
  const Vec2& vertex(std::ptrdiff_t i) const;
  const Vec2& normal(std::size_t side) const { return normals_[side]; }
  double offset(std::size_t side) const { return offsets_[side]; }
  double side_length(std::size_t side) const { return lengths_[side]; }
  double area() const noexcept { return area_; }
  double diameter() const noexcept { return diameter_; }

 private:
  std::vector<Vec2> vertices_;
  std::vector<Vec2> normals_;
  std::vector<double> offsets_;
  std::vector<double> lengths_;
  double area_ = 0.0;
  double diameter_ = 0.0;
};

struct Facet {
  /// Vertex indices, counterclockwise seen from outside.
  std::vector<std::size_t> loop;
  Vec3 normal;
  double offset = 0.0;
  double area = 0.0;
};

/// Convex 3-polytope in vertex + facet form. Facet planes are
/// {x : <normal, x> = offset} with outward unit normals.
class Polytope3 {
 public:
  static constexpr int kDim = 3;
  using Point = Vec3;

  /// Builds facet normals, offsets and areas from the loops and validates
  /// planarity, convexity, orientation and the Euler relation.
  Polytope3(std::vector<Vec3> vertices, std::vector<std::vector<std::size_t>> loops);

  const std::vector<Vec3>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  double volume() const noexcept { return volume_; }
  double diameter() const noexcept { return diameter_; }

 private:
  std::vector<Vec3> vertices_;
  std::vector<Facet> facets_;
  std::size_t edge_count_ = 0;
  double volume_ = 0.0;
  double diameter_ = 0.0;
};

// Uniform facet view used by the dimension-generic algorithms. For a
// polygon the "facets" are its sides and the facet measure is side length.
inline std::size_t facet_count(const Polygon& p) { return p.size(); }
inline std::size_t facet_count(const Polytope3& p) { return p.facets().size(); }
inline const Vec2& facet_normal(const Polygon& p, std::size_t i) { return p.normal(i); }
inline const Vec3& facet_normal(const Polytope3& p, std::size_t i) { return p.facets()[i].normal; }
inline double facet_offset(const Polygon& p, std::size_t i) { return p.offset(i); }
inline double facet_offset(const Polytope3& p, std::size_t i) { return p.facets()[i].offset; }
inline double facet_measure(const Polygon& p, std::size_t i) { return p.side_length(i); }
inline double facet_measure(const Polytope3& p, std::size_t i) { return p.facets()[i].area; }
inline const std::vector<Vec2>& vertices_of(const Polygon& p) { return p.vertices(); }
inline const std::vector<Vec3>& vertices_of(const Polytope3& p) { return p.vertices(); }

/// A convex body in the plane or in space.
class Body {
 public:
  Body(Polygon polygon) : shape_(std::move(polygon)) {}
  Body(Polytope3 polytope) : shape_(std::move(polytope)) {}

  int dim() const noexcept { return shape_.index() == 0 ? 2 : 3; }
  bool is_polygon() const noexcept { return shape_.index() == 0; }
  const Polygon& polygon() const;
  const Polytope3& polytope() const;
  double volume() const;
  double diameter() const;
  std::vector<std::vector<double>> vertex_coordinates() const;

  template <class F>
  decltype(auto) visit(F&& f) const {
    return std::visit(std::forward<F>(f), shape_);
  }

 private:
  std::variant<Polygon, Polytope3> shape_;
};

Vec2 to_vec2(std::span<const double> coords);
Vec3 to_vec3(std::span<const double> coords);

// Hulls. Output vertices are copied bit-exactly from the input points.
Polygon convex_hull(std::span<const Vec2> points);
Polytope3 convex_hull(std::span<const Vec3> points);
/// Dimension taken from the coordinate count of the points (2 or 3).
Body hull(std::span<const std::vector<double>> points);

inline double volume(const Polygon& p) { return p.area(); }
inline double volume(const Polytope3& p) { return p.volume(); }
inline double volume(const Body& b) { return b.volume(); }

double support(const Polygon& k, const Vec2& u);
double support(const Polytope3& k, const Vec3& u);

/// Largest tau with tau * u in K. Throws OriginNotInterior.
double gauge(const Polygon& k, const Vec2& u);
double gauge(const Polytope3& k, const Vec3& u);

bool origin_interior(const Polygon& k);
bool origin_interior(const Polytope3& k);

/// max over facets of <n_F, x> - b_F; negative strictly inside.
double facet_excess(const Polygon& k, const Vec2& x);
double facet_excess(const Polytope3& k, const Vec3& x);

Polygon polar(const Polygon& k);
Polytope3 polar(const Polytope3& k);
Body polar(const Body& k);

Polygon minkowski_sum(const Polygon& a, const Polygon& b);
Polytope3 minkowski_sum(const Polytope3& a, const Polytope3& b);
Body minkowski_sum(const Body& a, const Body& b);

Polygon negate(const Polygon& k);
Polytope3 negate(const Polytope3& k);
Polygon difference_body(const Polygon& k);
Polytope3 difference_body(const Polytope3& k);
Polygon central_symmetral(const Polygon& k);
Polytope3 central_symmetral(const Polytope3& k);

Polygon translate(const Polygon& k, const Vec2& t);
Polytope3 translate(const Polytope3& k, const Vec3& t);
/// Scaling about the origin; factor must be positive.
Polygon scale(const Polygon& k, double factor);
Polytope3 scale(const Polytope3& k, double factor);

/// Length of the projection of K onto the line orthogonal to u.
double brightness(const Polygon& k, const Vec2& u);
/// Area of K|u^perp by the Cauchy sum (1/2) sum_F |<u, n_F>| area(F).
double brightness(const Polytope3& k, const Vec3& u);
/// Area of K|u^perp from the planar hull of the projected vertices.
double brightness_projected(const Polytope3& k, const Vec3& u);

/// Euclidean distance from x to K (zero inside).
double distance(const Polygon& k, const Vec2& x);
double distance(const Polytope3& k, const Vec3& x);

/// Exact Hausdorff distance; attained at vertices since dist(., K) is convex.
double hausdorff_distance(const Polygon& a, const Polygon& b);
double hausdorff_distance(const Polytope3& a, const Polytope3& b);

}  // namespace hullfn
