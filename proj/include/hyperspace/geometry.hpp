#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hyperspace {

/// Raised when an operation's geometric precondition does not hold.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public GeometryError {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual, const std::string& where);
};

/// A location in R^n. Also used as a translation vector.
class Point {
 public:
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  static Point zero(std::size_t dim);

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

  friend Point operator+(const Point& a, const Point& b);
  friend Point operator-(const Point& a, const Point& b);
  friend Point operator-(const Point& a);
  friend Point operator*(double s, const Point& a);

  bool operator==(const Point&) const = default;

 private:
  std::vector<double> coords_;
};

double norm(const Point& v);
double distance(const Point& a, const Point& b);

void require_same_dim(std::size_t expected, std::size_t actual, const char* where);

/// Closed axis-aligned box prod [lo_i, hi_i] with lo_i <= hi_i. A point is a
/// box with lo == hi.
class AxisBox {
 public:
  /// Throws GeometryError unless lo <= hi coordinatewise.
  AxisBox(Point lo, Point hi);

  const Point& lo() const noexcept { return lo_; }
  const Point& hi() const noexcept { return hi_; }
  std::size_t dim() const noexcept { return lo_.dim(); }

  Point center() const;
  double extent(std::size_t i) const { return hi_[i] - lo_[i]; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Point& x) const;
  bool contains(const AxisBox& inner) const;

  /// Corners of the box; collapsed axes do not multiply the count.
  std::vector<Point> vertices() const;

  bool operator==(const AxisBox&) const = default;

 private:
  Point lo_;
  Point hi_;
};

/// The box spanned by two arbitrary corners, with lo = min and hi = max.
AxisBox canonical_box(const Point& u, const Point& v);

/// Closed segment between p and q. p == q is allowed and behaves as a point.
struct Segment {
  Point p;
  Point q;

  Segment(Point p_, Point q_);
  std::size_t dim() const noexcept { return p.dim(); }
  double length() const { return distance(p, q); }
  bool operator==(const Segment&) const = default;
};

class CompactSet;

struct FiniteSet {
  std::vector<Point> points;
  bool operator==(const FiniteSet&) const = default;
};

struct UnionSet {
  std::vector<CompactSet> parts;
  bool operator==(const UnionSet&) const;
};

/// A non-empty compact subset of R^n: a finite point set, an axis box, a
/// segment, or a finite union of those. Values are immutable.
class CompactSet {
 public:
  using Node = std::variant<FiniteSet, AxisBox, Segment, UnionSet>;

  enum class Kind { points, box, segment, union_of };

  static CompactSet points(std::vector<Point> pts);
  static CompactSet box(AxisBox b);
  static CompactSet segment(Segment s);
  static CompactSet union_of(std::vector<CompactSet> parts);
  /// The four edges of a 2D box as a union of segments.
  static CompactSet box_boundary(const AxisBox& b);

  std::size_t dim() const noexcept { return dim_; }
  Kind kind() const noexcept { return static_cast<Kind>(node_.index()); }
  const Node& node() const noexcept { return node_; }

  const FiniteSet& as_points() const { return std::get<FiniteSet>(node_); }
  const AxisBox& as_box() const { return std::get<AxisBox>(node_); }
  const Segment& as_segment() const { return std::get<Segment>(node_); }
  const UnionSet& as_union() const { return std::get<UnionSet>(node_); }

  bool operator==(const CompactSet& other) const { return node_ == other.node_; }

 private:
  CompactSet(Node node, std::size_t dim) : node_(std::move(node)), dim_(dim) {}

  Node node_;
  std::size_t dim_;
};

/// Convex building blocks of a CompactSet. A finite set contributes one
/// primitive per point.
using Primitive = std::variant<Point, AxisBox, Segment>;

std::vector<Primitive> primitives(const CompactSet& set);
std::size_t primitive_dim(const Primitive& p);

CompactSet translate(const CompactSet& set, const Point& v);
AxisBox translate(const AxisBox& box, const Point& v);

AxisBox bounding_box(const CompactSet& set);
AxisBox bounding_box(const AxisBox& a, const AxisBox& b);

/// True iff the distance from x to set is at most tol.
bool contains_point(const CompactSet& set, const Point& x, double tol);

/// Points of the set: the finite points, box corners and segment endpoints.
/// Used to probe membership and containment properties.
std::vector<Point> witness_points(const CompactSet& set);

}  // namespace hyperspace
