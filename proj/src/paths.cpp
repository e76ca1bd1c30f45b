#include "hyperspace/paths.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "hyperspace/metric.hpp"

namespace hyperspace {

std::string_view to_string(PathKind kind) {
  switch (kind) {
    case PathKind::translation: return "translation";
    case PathKind::point_to_box: return "point_to_box";
    case PathKind::set_to_box: return "set_to_box";
    case PathKind::reversed: return "reversed";
    case PathKind::concatenation: return "concatenation";
  }
  return "unknown";
}

HyperPath::HyperPath(CompactSet start, CompactSet end, double lipschitz, PathKind kind,
                     Evaluator evaluator, double max_err)
    : start_(std::move(start)),
      end_(std::move(end)),
      lipschitz_(lipschitz),
      kind_(kind),
      evaluator_(std::move(evaluator)),
      max_err_(max_err) {
  require_same_dim(start_.dim(), end_.dim(), "path endpoints");
}

PathSample HyperPath::sample(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw GeometryError("path parameter must lie in [0, 1], got " + std::to_string(t));
  }
  return evaluator_(t);
}

namespace {

// The box f_{a,m,M}(t), where [lo, hi] is the canonical target box.
AxisBox inflate_point(std::span<const double> a, const AxisBox& target, double t) {
  const std::size_t n = a.size();
  std::vector<double> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = std::lerp(a[i], target.lo()[i], t);
    hi[i] = std::lerp(a[i], target.hi()[i], t);
  }
  return AxisBox(Point(std::move(lo)), Point(std::move(hi)));
}

AxisBox target_box(const Point& m, const Point& big_m) {
  AxisBox box = canonical_box(m, big_m);
  if (box.is_point()) {
    throw GeometryError("the target box needs distinct corners (m != M)");
  }
  return box;
}

// S_a = max_i max(|m_i - a_i|, |M_i - a_i|).
double spread_from(std::span<const double> a, const AxisBox& target) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s = std::max({s, std::abs(target.lo()[i] - a[i]), std::abs(target.hi()[i] - a[i])});
  }
  return s;
}

// S = sup over a in A of S_a. S_a is convex in a, so corners suffice.
double spread_over(const CompactSet& set, const AxisBox& target) {
  double s = 0.0;
  for (const auto& prim : primitives(set)) {
    std::vector<Point> corners;
    if (const auto* p = std::get_if<Point>(&prim)) {
      corners.push_back(*p);
    } else if (const auto* box = std::get_if<AxisBox>(&prim)) {
      corners = box->vertices();
    } else {
      const auto& seg = std::get<Segment>(prim);
      corners = {seg.p, seg.q};
    }
    for (const auto& c : corners) s = std::max(s, spread_from(c.coords(), target));
  }
  return s;
}

// A segment moving along at most one axis is the degenerate box it spans.
bool axis_parallel(const Segment& seg) {
  std::size_t moving = 0;
  for (std::size_t i = 0; i < seg.p.dim(); ++i) moving += seg.p[i] != seg.q[i];
  return moving <= 1;
}

PathSample sweep_box(const AxisBox& box, const AxisBox& target, double t) {
  // Each per-point interval is affine in a_i with slope 1 - t and contains
  // a_i, so the union over the box is again a box.
  const std::size_t n = box.dim();
  std::vector<double> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = std::lerp(box.lo()[i], target.lo()[i], t);
    hi[i] = std::lerp(box.hi()[i], target.hi()[i], t);
  }
  return {CompactSet::box(AxisBox(Point(std::move(lo)), Point(std::move(hi)))), 0.0};
}

PathSample sweep(const CompactSet& set, const AxisBox& target, double t,
                 const PathOptions& options) {
  return std::visit(
      [&](const auto& node) -> PathSample {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          if (node.points.size() == 1) {
            return {CompactSet::box(inflate_point(node.points.front().coords(), target, t)), 0.0};
          }
          std::vector<CompactSet> boxes;
          boxes.reserve(node.points.size());
          for (const auto& p : node.points) {
            boxes.push_back(CompactSet::box(inflate_point(p.coords(), target, t)));
          }
          return {CompactSet::union_of(std::move(boxes)), 0.0};
        } else if constexpr (std::is_same_v<T, AxisBox>) {
          return sweep_box(node, target, t);
        } else if constexpr (std::is_same_v<T, Segment>) {
          if (axis_parallel(node)) return sweep_box(canonical_box(node.p, node.q), target, t);
          const double len = node.length();
          const std::size_t pieces = std::max<std::size_t>(1, options.segment_pieces);
          std::vector<CompactSet> boxes;
          boxes.reserve(pieces + 1);
          std::vector<double> a(node.dim());
          for (std::size_t k = 0; k <= pieces; ++k) {
            const double s = static_cast<double>(k) / static_cast<double>(pieces);
            for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::lerp(node.p[i], node.q[i], s);
            boxes.push_back(CompactSet::box(inflate_point(a, target, t)));
          }
          // Every point of the segment is within len / (2 pieces) of a sample,
          // and the sweep contracts distances between sources by 1 - t.
          const double err = (1.0 - t) * len / (2.0 * static_cast<double>(pieces));
          return {CompactSet::union_of(std::move(boxes)), err};
        } else {
          std::vector<CompactSet> parts;
          parts.reserve(node.parts.size());
          double err = 0.0;
          for (const auto& part : node.parts) {
            auto s = sweep(part, target, t, options);
            err = std::max(err, s.err);
            parts.push_back(std::move(s.set));
          }
          return {CompactSet::union_of(std::move(parts)), err};
        }
      },
      set.node());
}

double max_sweep_err(const CompactSet& set, const PathOptions& options) {
  double longest = 0.0;
  for (const auto& prim : primitives(set)) {
    const auto* seg = std::get_if<Segment>(&prim);
    if (seg && !axis_parallel(*seg)) longest = std::max(longest, seg->length());
  }
  const auto pieces = static_cast<double>(std::max<std::size_t>(1, options.segment_pieces));
  return longest / (2.0 * pieces);
}

}  // namespace

HyperPath translation_path(const CompactSet& a, const Point& v) {
  require_same_dim(a.dim(), v.dim(), "translation_path");
  auto evaluator = [a, v](double t) -> PathSample {
    return {translate(a, t * v), 0.0};
  };
  return HyperPath(a, translate(a, v), norm(v), PathKind::translation, std::move(evaluator));
}

HyperPath point_to_box_path(const Point& a, const Point& m, const Point& big_m) {
  require_same_dim(a.dim(), m.dim(), "point_to_box_path");
  require_same_dim(a.dim(), big_m.dim(), "point_to_box_path");
  AxisBox target = target_box(m, big_m);
  if (!target.contains(a)) throw GeometryError("point_to_box_path: the box does not contain a");

  const double lipschitz =
      std::sqrt(static_cast<double>(a.dim())) * spread_from(a.coords(), target);
  auto evaluator = [a, target](double t) -> PathSample {
    return {CompactSet::box(inflate_point(a.coords(), target, t)), 0.0};
  };
  return HyperPath(CompactSet::points({a}), CompactSet::box(target), lipschitz,
                   PathKind::point_to_box, std::move(evaluator));
}

HyperPath set_to_box_path(const CompactSet& a, const Point& m, const Point& big_m,
                          const PathOptions& options) {
  require_same_dim(a.dim(), m.dim(), "set_to_box_path");
  require_same_dim(a.dim(), big_m.dim(), "set_to_box_path");
  AxisBox target = target_box(m, big_m);
  if (!target.contains(bounding_box(a))) {
    throw GeometryError("set_to_box_path: the box does not contain the set");
  }
  const double lipschitz = std::sqrt(static_cast<double>(a.dim())) * spread_over(a, target);
  auto evaluator = [a, target, options](double t) -> PathSample {
    if (t == 0.0) return {a, 0.0};
    if (t == 1.0) return {CompactSet::box(target), 0.0};
    return sweep(a, target, t, options);
  };
  return HyperPath(a, CompactSet::box(target), lipschitz, PathKind::set_to_box,
                   std::move(evaluator), max_sweep_err(a, options));
}

HyperPath reverse(const HyperPath& path) {
  auto evaluator = [path](double t) { return path.sample(1.0 - t); };
  return HyperPath(path.end(), path.start(), path.lipschitz(), PathKind::reversed,
                   std::move(evaluator), path.max_err());
}

HyperPath concat(const std::vector<HyperPath>& legs, double junction_tol) {
  if (legs.empty()) throw PathError("concat needs at least one path");
  double lipschitz = 0.0;
  double max_err = 0.0;
  for (std::size_t j = 0; j < legs.size(); ++j) {
    require_same_dim(legs.front().dim(), legs[j].dim(), "concat");
    lipschitz = std::max(lipschitz, legs[j].lipschitz());
    max_err = std::max(max_err, legs[j].max_err());
    if (j + 1 < legs.size()) {
      const DistanceResult gap = hausdorff(legs[j].end(), legs[j + 1].start());
      if (gap.lower() > junction_tol) {
        throw PathError("concat: end of leg " + std::to_string(j) + " does not match start of leg " +
                        std::to_string(j + 1) + " (gap " + std::to_string(gap.value) + ")");
      }
    }
  }
  const auto k = static_cast<double>(legs.size());
  auto evaluator = [legs, k](double t) {
    const auto j = std::min(static_cast<std::size_t>(std::floor(k * t)), legs.size() - 1);
    const double s = std::clamp(k * t - static_cast<double>(j), 0.0, 1.0);
    return legs[j].sample(s);
  };
  return HyperPath(legs.front().start(), legs.back().end(), k * lipschitz,
                   PathKind::concatenation, std::move(evaluator), max_err);
}

EnclosingBoxes enclosing_boxes(const CompactSet& a, const CompactSet& b) {
  require_same_dim(a.dim(), b.dim(), "enclosing_boxes");
  const AxisBox box_a = bounding_box(a);
  const AxisBox box_b = bounding_box(b);
  const std::size_t n = a.dim();

  std::vector<double> half(n);
  double widest = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    half[i] = 0.5 * std::max(box_a.extent(i), box_b.extent(i));
    widest = std::max(widest, half[i]);
  }
  const double pad = 1e-6 * (1.0 + widest);
  for (auto& h : half) h += pad;

  const Point center_a = box_a.center();
  const Point center_b = box_b.center();
  const Point half_extent(std::move(half));
  AxisBox from(center_a - half_extent, center_a + half_extent);
  Point shift = center_b - center_a;
  AxisBox to = translate(from, shift);
  return {std::move(from), std::move(to), std::move(shift)};
}

HyperPath connect(const CompactSet& a, const CompactSet& b, const PathOptions& options) {
  const EnclosingBoxes boxes = enclosing_boxes(a, b);
  std::vector<HyperPath> legs;
  legs.push_back(set_to_box_path(a, boxes.from.lo(), boxes.from.hi(), options));
  legs.push_back(translation_path(CompactSet::box(boxes.from), boxes.shift));
  legs.push_back(reverse(set_to_box_path(b, boxes.to.lo(), boxes.to.hi(), options)));
  return concat(legs);
}

double contraction_gap(const Point& a, const Point& a2, const Point& m, const Point& big_m,
                       double t) {
  require_same_dim(a.dim(), a2.dim(), "contraction_gap");
  require_same_dim(a.dim(), m.dim(), "contraction_gap");
  require_same_dim(a.dim(), big_m.dim(), "contraction_gap");
  if (!(t >= 0.0 && t <= 1.0)) throw GeometryError("contraction_gap: t must lie in [0, 1]");
  const AxisBox target = canonical_box(m, big_m);
  if (!target.contains(a) || !target.contains(a2)) {
    throw GeometryError("contraction_gap: both points must lie in the box");
  }
  const CompactSet fa = CompactSet::box(inflate_point(a.coords(), target, t));
  const CompactSet fa2 = CompactSet::box(inflate_point(a2.coords(), target, t));
  return hausdorff(fa, fa2).value;
}

}  // namespace hyperspace
