#include "hyperspace/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hyperspace {

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual,
                                     const std::string& where)
    : GeometryError(where + ": dimension mismatch (expected " + std::to_string(expected) +
                    ", got " + std::to_string(actual) + ")") {}

void require_same_dim(std::size_t expected, std::size_t actual, const char* where) {
  if (expected != actual) throw DimensionMismatch(expected, actual, where);
}

// ---------------------------------------------------------------------------
// Point

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw GeometryError("point must have at least one coordinate");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw GeometryError("point coordinates must be finite");
  }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Point Point::zero(std::size_t dim) {
  return Point(std::vector<double>(dim, 0.0));
}

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "point addition");
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return Point(std::move(out));
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "point subtraction");
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return Point(std::move(out));
}

Point operator-(const Point& a) {
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a[i];
  return Point(std::move(out));
}

Point operator*(double s, const Point& a) {
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a[i];
  return Point(std::move(out));
}

double norm(const Point& v) {
  double sum = 0.0;
  for (double c : v.coords()) sum += c * c;
  return std::sqrt(sum);
}

double distance(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "distance");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

// ---------------------------------------------------------------------------
// AxisBox

AxisBox::AxisBox(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  require_same_dim(lo_.dim(), hi_.dim(), "box");
  for (std::size_t i = 0; i < lo_.dim(); ++i) {
    if (lo_[i] > hi_[i]) {
      throw GeometryError("box corners are not canonical on axis " + std::to_string(i) +
                          " (use canonical_box)");
    }
  }
}

Point AxisBox::center() const {
  std::vector<double> c(dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (lo_[i] + hi_[i]);
  return Point(std::move(c));
}

bool AxisBox::contains(const Point& x) const {
  require_same_dim(dim(), x.dim(), "box containment");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] < lo_[i] || x[i] > hi_[i]) return false;
  }
  return true;
}

bool AxisBox::contains(const AxisBox& inner) const {
  return contains(inner.lo()) && contains(inner.hi());
}

std::vector<Point> AxisBox::vertices() const {
  std::vector<std::size_t> free_axes;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (lo_[i] != hi_[i]) free_axes.push_back(i);
  }
  const std::size_t count = std::size_t{1} << free_axes.size();
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<double> v(lo_.coords().begin(), lo_.coords().end());
    for (std::size_t k = 0; k < free_axes.size(); ++k) {
      if (mask & (std::size_t{1} << k)) v[free_axes[k]] = hi_[free_axes[k]];
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

AxisBox canonical_box(const Point& u, const Point& v) {
  require_same_dim(u.dim(), v.dim(), "canonical_box");
  std::vector<double> lo(u.dim()), hi(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    lo[i] = std::min(u[i], v[i]);
    hi[i] = std::max(u[i], v[i]);
  }
  return AxisBox(Point(std::move(lo)), Point(std::move(hi)));
}

AxisBox bounding_box(const AxisBox& a, const AxisBox& b) {
  require_same_dim(a.dim(), b.dim(), "bounding_box");
  std::vector<double> lo(a.dim()), hi(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    lo[i] = std::min(a.lo()[i], b.lo()[i]);
    hi[i] = std::max(a.hi()[i], b.hi()[i]);
  }
  return AxisBox(Point(std::move(lo)), Point(std::move(hi)));
}

Segment::Segment(Point p_, Point q_) : p(std::move(p_)), q(std::move(q_)) {
  require_same_dim(p.dim(), q.dim(), "segment");
}

// ---------------------------------------------------------------------------
// CompactSet

bool UnionSet::operator==(const UnionSet& other) const { return parts == other.parts; }

CompactSet CompactSet::points(std::vector<Point> pts) {
  if (pts.empty()) throw GeometryError("finite set must contain at least one point");
  const std::size_t dim = pts.front().dim();
  for (const auto& p : pts) require_same_dim(dim, p.dim(), "finite set");
  return CompactSet(FiniteSet{std::move(pts)}, dim);
}

CompactSet CompactSet::box(AxisBox b) {
  const std::size_t dim = b.dim();
  return CompactSet(std::move(b), dim);
}

CompactSet CompactSet::segment(Segment s) {
  const std::size_t dim = s.dim();
  return CompactSet(std::move(s), dim);
}

CompactSet CompactSet::union_of(std::vector<CompactSet> parts) {
  if (parts.empty()) throw GeometryError("union must contain at least one part");
  const std::size_t dim = parts.front().dim();
  for (const auto& p : parts) require_same_dim(dim, p.dim(), "union");
  return CompactSet(UnionSet{std::move(parts)}, dim);
}

CompactSet CompactSet::box_boundary(const AxisBox& b) {
  if (b.dim() != 2) throw GeometryError("box_boundary is only defined in two dimensions");
  const double x0 = b.lo()[0], y0 = b.lo()[1], x1 = b.hi()[0], y1 = b.hi()[1];
  std::vector<CompactSet> edges;
  edges.push_back(segment(Segment(Point{x0, y0}, Point{x1, y0})));
  edges.push_back(segment(Segment(Point{x1, y0}, Point{x1, y1})));
  edges.push_back(segment(Segment(Point{x1, y1}, Point{x0, y1})));
  edges.push_back(segment(Segment(Point{x0, y1}, Point{x0, y0})));
  return union_of(std::move(edges));
}

namespace {

void collect_primitives(const CompactSet& set, std::vector<Primitive>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          for (const auto& p : node.points) out.emplace_back(p);
        } else if constexpr (std::is_same_v<T, UnionSet>) {
          for (const auto& part : node.parts) collect_primitives(part, out);
        } else {
          out.emplace_back(node);
        }
      },
      set.node());
}

}  // namespace

std::vector<Primitive> primitives(const CompactSet& set) {
  std::vector<Primitive> out;
  collect_primitives(set, out);
  return out;
}

std::size_t primitive_dim(const Primitive& p) {
  return std::visit([](const auto& x) { return x.dim(); }, p);
}

AxisBox translate(const AxisBox& box, const Point& v) {
  require_same_dim(box.dim(), v.dim(), "translate");
  return AxisBox(box.lo() + v, box.hi() + v);
}

CompactSet translate(const CompactSet& set, const Point& v) {
  require_same_dim(set.dim(), v.dim(), "translate");
  return std::visit(
      [&](const auto& node) -> CompactSet {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          std::vector<Point> pts;
          pts.reserve(node.points.size());
          for (const auto& p : node.points) pts.push_back(p + v);
          return CompactSet::points(std::move(pts));
        } else if constexpr (std::is_same_v<T, AxisBox>) {
          return CompactSet::box(translate(node, v));
        } else if constexpr (std::is_same_v<T, Segment>) {
          return CompactSet::segment(Segment(node.p + v, node.q + v));
        } else {
          std::vector<CompactSet> parts;
          parts.reserve(node.parts.size());
          for (const auto& part : node.parts) parts.push_back(translate(part, v));
          return CompactSet::union_of(std::move(parts));
        }
      },
      set.node());
}

AxisBox bounding_box(const CompactSet& set) {
  const std::size_t n = set.dim();
  std::vector<double> lo(n, INFINITY), hi(n, -INFINITY);
  auto include = [&](const Point& p) {
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  };
  for (const auto& prim : primitives(set)) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Point>) {
            include(x);
          } else if constexpr (std::is_same_v<T, AxisBox>) {
            include(x.lo());
            include(x.hi());
          } else {
            include(x.p);
            include(x.q);
          }
        },
        prim);
  }
  return AxisBox(Point(std::move(lo)), Point(std::move(hi)));
}

std::vector<Point> witness_points(const CompactSet& set) {
  std::vector<Point> out;
  for (const auto& prim : primitives(set)) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Point>) {
            out.push_back(x);
          } else if constexpr (std::is_same_v<T, AxisBox>) {
            for (auto& v : x.vertices()) out.push_back(std::move(v));
            out.push_back(x.center());
          } else {
            out.push_back(x.p);
            out.push_back(x.q);
            out.push_back(0.5 * (x.p + x.q));
          }
        },
        prim);
  }
  return out;
}

}  // namespace hyperspace
