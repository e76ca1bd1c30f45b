#include "hyperspace/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>

namespace hyperspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class PrimKind { point, box, segment };

// B flattened into contiguous storage for the distance kernels.
class DistanceField {
 public:
  explicit DistanceField(const CompactSet& set) : dim_(set.dim()) {
    for (const auto& prim : primitives(set)) add(prim);
  }

  DistanceField(const std::vector<Primitive>& parts, std::size_t dim) : dim_(dim) {
    for (const auto& prim : parts) add(prim);
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return kinds_.size(); }
  PrimKind kind(std::size_t j) const { return kinds_[j]; }
  double seg_len2(std::size_t j) const { return seg_len2_[j]; }
  const double* anchor(std::size_t j) const { return &coords_[2 * j * dim_]; }

  double sq_dist(std::size_t j, const double* x) const {
    const double* a = &coords_[2 * j * dim_];
    const double* b = a + dim_;
    double sum = 0.0;
    switch (kinds_[j]) {
      case PrimKind::point:
        for (std::size_t i = 0; i < dim_; ++i) {
          const double d = x[i] - a[i];
          sum += d * d;
        }
        return sum;
      case PrimKind::box:
        for (std::size_t i = 0; i < dim_; ++i) {
          const double d = std::max({a[i] - x[i], 0.0, x[i] - b[i]});
          sum += d * d;
        }
        return sum;
      case PrimKind::segment: {
        const double len2 = seg_len2_[j];
        double s = 0.0;
        if (len2 > 0.0) {
          for (std::size_t i = 0; i < dim_; ++i) s += (x[i] - a[i]) * (b[i] - a[i]);
          s = std::clamp(s / len2, 0.0, 1.0);
        }
        for (std::size_t i = 0; i < dim_; ++i) {
          const double d = x[i] - (a[i] + s * (b[i] - a[i]));
          sum += d * d;
        }
        return sum;
      }
    }
    return sum;
  }

  double dist(const double* x) const { return std::sqrt(nearest(x).second); }

  // Index and squared distance of the part closest to x.
  std::pair<std::size_t, double> nearest(const double* x) const {
    std::size_t best_j = 0;
    double best = kInf;
    for (std::size_t j = 0; j < size() && best > 0.0; ++j) {
      const double d2 = sq_dist(j, x);
      if (d2 < best) {
        best = d2;
        best_j = j;
      }
    }
    return {best_j, best};
  }

 private:
  void add(const Primitive& prim) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Point>) {
            push(PrimKind::point, x, x);
          } else if constexpr (std::is_same_v<T, AxisBox>) {
            push(PrimKind::box, x.lo(), x.hi());
          } else {
            push(PrimKind::segment, x.p, x.q);
          }
        },
        prim);
  }

  void push(PrimKind kind, const Point& a, const Point& b) {
    kinds_.push_back(kind);
    coords_.insert(coords_.end(), a.coords().begin(), a.coords().end());
    coords_.insert(coords_.end(), b.coords().begin(), b.coords().end());
    double len2 = 0.0;
    if (kind == PrimKind::segment) {
      for (std::size_t i = 0; i < dim_; ++i) len2 += (b[i] - a[i]) * (b[i] - a[i]);
    }
    seg_len2_.push_back(len2);
  }

  std::size_t dim_;
  std::vector<PrimKind> kinds_;
  std::vector<double> coords_;
  std::vector<double> seg_len2_;
};

// A convex piece of A under subdivision: either a sub-box [lo, hi] or a
// sub-segment from lo to hi.
struct Cell {
  std::vector<double> lo;
  std::vector<double> hi;
  bool segment = false;
  double upper = 0.0;
  std::size_t field = 0;
  // Consecutive splits that left the bound where it was.
  unsigned stalls = 0;

  bool operator<(const Cell& other) const { return upper < other.upper; }
};

double half_diagonal(const Cell& c) {
  double sum = 0.0;
  for (std::size_t i = 0; i < c.lo.size(); ++i) {
    const double d = c.hi[i] - c.lo[i];
    sum += d * d;
  }
  return 0.5 * std::sqrt(sum);
}

template <typename Fn>
void for_each_corner(const Cell& c, std::vector<double>& buf, Fn&& fn) {
  if (c.segment) {
    fn(c.lo.data());
    fn(c.hi.data());
    return;
  }
  std::size_t free_axes[64];
  std::size_t nfree = 0;
  for (std::size_t i = 0; i < c.lo.size(); ++i) {
    if (c.lo[i] != c.hi[i] && nfree < 64) free_axes[nfree++] = i;
  }
  const std::size_t count = std::size_t{1} << nfree;
  for (std::size_t mask = 0; mask < count; ++mask) {
    buf.assign(c.lo.begin(), c.lo.end());
    for (std::size_t k = 0; k < nfree; ++k) {
      if (mask & (std::size_t{1} << k)) buf[free_axes[k]] = c.hi[free_axes[k]];
    }
    fn(buf.data());
  }
}

// Calls fn(v, w) for both ends of every edge of the cell.
template <typename Fn>
void for_each_edge(const Cell& c, std::vector<double>& v, std::vector<double>& w, Fn&& fn) {
  if (c.segment) {
    fn(c.lo.data(), c.hi.data());
    return;
  }
  std::size_t free_axes[64];
  std::size_t nfree = 0;
  for (std::size_t i = 0; i < c.lo.size(); ++i) {
    if (c.lo[i] != c.hi[i] && nfree < 64) free_axes[nfree++] = i;
  }
  const std::size_t count = std::size_t{1} << nfree;
  for (std::size_t mask = 0; mask < count; ++mask) {
    v.assign(c.lo.begin(), c.lo.end());
    for (std::size_t k = 0; k < nfree; ++k) {
      if (mask & (std::size_t{1} << k)) v[free_axes[k]] = c.hi[free_axes[k]];
    }
    for (std::size_t k = 0; k < nfree; ++k) {
      if (mask & (std::size_t{1} << k)) continue;
      w = v;
      w[free_axes[k]] = c.hi[free_axes[k]];
      fn(v.data(), w.data());
    }
  }
}

class SupremumSearch {
 public:
  explicit SupremumSearch(const SupremumOptions& options) : options_(options) {}

  // Fields must outlive the search; cells refer to them by index.
  std::size_t add_field(const DistanceField& field) {
    fields_.push_back(&field);
    part_max_.resize(std::max(part_max_.size(), field.size()));
    return fields_.size() - 1;
  }

  // Folds an exactly known value into the lower bound.
  void add_exact(double value) { lower_ = std::max(lower_, value); }

  void add_cell(Cell cell) {
    evaluate(cell);
    if (cell.upper > lower_) queue_.push(std::move(cell));
  }

  DistanceResult run() {
    std::size_t processed = 0;
    while (!queue_.empty()) {
      const double top = queue_.top().upper;
      if (top <= lower_ || top - lower_ <= options_.tol || processed >= options_.max_cells) break;
      Cell cell = queue_.top();
      queue_.pop();
      ++processed;
      auto halves = split(cell);
      if (!halves) {
        // Below floating-point resolution; its bound is final.
        stuck_ = std::max(stuck_, cell.upper);
        continue;
      }
      if (halves->first.upper > lower_) queue_.push(std::move(halves->first));
      if (halves->second.upper > lower_) queue_.push(std::move(halves->second));
    }
    double upper = std::max(lower_, stuck_);
    if (!queue_.empty()) upper = std::max(upper, queue_.top().upper);
    return {0.5 * (lower_ + upper), 0.5 * (upper - lower_)};
  }

 private:
  void evaluate(Cell& cell) {
    const std::size_t n = cell.lo.size();
    center_.resize(n);
    for (std::size_t i = 0; i < n; ++i) center_[i] = 0.5 * (cell.lo[i] + cell.hi[i]);
    const DistanceField& field = *fields_[cell.field];
    const double at_center = field.dist(center_.data());
    add_exact(at_center);
    double upper = at_center + half_diagonal(cell);

    if (options_.convex_part_bound && upper > lower_) {
      // d(., B_j) is convex, so its max over the cell sits at a corner; the
      // same corner distances give exact values of d(., B) for the lower bound.
      const auto parts = part_max_.begin() + static_cast<std::ptrdiff_t>(field.size());
      std::fill(part_max_.begin(), parts, 0.0);
      for_each_corner(cell, corner_, [&](const double* v) {
        double nearest = kInf;
        for (std::size_t j = 0; j < field.size(); ++j) {
          const double d2 = field.sq_dist(j, v);
          part_max_[j] = std::max(part_max_[j], d2);
          nearest = std::min(nearest, d2);
        }
        add_exact(std::sqrt(nearest));
      });
      const auto first = std::min_element(part_max_.begin(), parts);
      upper = std::min(upper, std::sqrt(*first));

      // Two parts that act on the cell like points p and q (over the same
      // axes): min(d_p, d_q) is d_p on the side of the bisector hyperplane
      // nearer p, a convex polytope, so its max over the cell is at a corner
      // or where an edge crosses the hyperplane. This settles the ridge
      // between two sites, which no single part can bound.
      if (upper - lower_ > options_.tol && field.size() > 1) {
        std::iter_swap(part_max_.begin(), first);
        const auto j = static_cast<std::size_t>(first - part_max_.begin());
        const auto second = std::min_element(part_max_.begin() + 1, parts);
        const auto k = static_cast<std::size_t>(second - part_max_.begin());
        std::iter_swap(part_max_.begin(), first);
        const std::size_t kk = k == j ? 0 : k;
        std::uint64_t sj = 0, sk = 0;
        if (effective_point(cell, field, j, site_p_, sj) &&
            effective_point(cell, field, kk, site_q_, sk) && sj == sk) {
          upper = std::min(upper, pair_bound(cell, field, j, kk));
        }
      }
    }
    cell.upper = upper;
  }

  // On the cell, is d(., B_j) the distance to a point over the axes in mask
  // (the other axes contributing nothing)? If so the point goes to out.
  bool effective_point(const Cell& cell, const DistanceField& field, std::size_t j,
                       std::vector<double>& out, std::uint64_t& mask) {
    const std::size_t n = cell.lo.size();
    if (n > 64) return false;
    out.assign(n, 0.0);
    const double* a = field.anchor(j);
    const double* b = a + n;
    mask = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    switch (field.kind(j)) {
      case PrimKind::point:
        std::copy(a, a + n, out.begin());
        return true;
      case PrimKind::box:
        for (std::size_t i = 0; i < n; ++i) {
          const double lo = std::min(cell.lo[i], cell.hi[i]);
          const double hi = std::max(cell.lo[i], cell.hi[i]);
          if (hi <= a[i]) {
            out[i] = a[i];
          } else if (lo >= b[i]) {
            out[i] = b[i];
          } else if (a[i] <= lo && hi <= b[i]) {
            mask &= ~(std::uint64_t{1} << i);
          } else {
            return false;
          }
        }
        return true;
      case PrimKind::segment: {
        // The clamp parameter is affine before clamping, so its sign pattern
        // at the corners holds on the whole cell.
        const double len2 = field.seg_len2(j);
        bool all_low = true, all_high = true;
        for_each_corner(cell, corner_, [&](const double* v) {
          double t = 0.0;
          for (std::size_t i = 0; i < n; ++i) t += (v[i] - a[i]) * (b[i] - a[i]);
          all_low = all_low && t <= 0.0;
          all_high = all_high && t >= len2;
        });
        if (!all_low && !all_high) return false;
        std::copy(all_low ? a : b, (all_low ? a : b) + n, out.begin());
        return true;
      }
    }
    return false;
  }

  // Uses the effective points left in site_p_ and site_q_.
  double pair_bound(const Cell& cell, const DistanceField& field, std::size_t j, std::size_t k) {
    const std::size_t n = cell.lo.size();
    const double* p = site_p_.data();
    const double* q = site_q_.data();
    // g(x) < 0 exactly when x is nearer p. Axes outside the mask have
    // p_i = q_i = 0 and drop out.
    auto g = [&](const double* x) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += (q[i] - p[i]) * (2.0 * x[i] - p[i] - q[i]);
      return sum;
    };
    double best = 0.0;
    for_each_corner(cell, corner_, [&](const double* v) {
      best = std::max(best, std::min(field.sq_dist(j, v), field.sq_dist(k, v)));
    });
    crossing_.resize(n);
    for_each_edge(cell, edge_v_, edge_w_, [&](const double* v, const double* w) {
      const double gv = g(v), gw = g(w);
      if ((gv < 0.0) == (gw < 0.0)) return;
      const double s = gv / (gv - gw);
      for (std::size_t i = 0; i < n; ++i) crossing_[i] = v[i] + s * (w[i] - v[i]);
      add_exact(field.dist(crossing_.data()));
      best = std::max({best, field.sq_dist(j, crossing_.data()), field.sq_dist(k, crossing_.data())});
    });
    // The crossing is computed in floating point; pad for its rounding.
    const double bound = std::sqrt(best);
    return bound + 1e-13 * (1.0 + bound);
  }

  static bool splits(double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    return lo < mid && mid < hi;
  }

  static std::pair<Cell, Cell> halves(const Cell& cell, std::size_t axis) {
    Cell left = cell, right = cell;
    const double mid = 0.5 * (cell.lo[axis] + cell.hi[axis]);
    left.hi[axis] = mid;
    right.lo[axis] = mid;
    return {std::move(left), std::move(right)};
  }

  // Both halves come back evaluated. Boxes try every axis and keep the cut
  // with the lowest bound, then the least total excess over the lower bound:
  // a ridge of d(., B) along an axis is then cut into thin slabs, not cubes.
  std::optional<std::pair<Cell, Cell>> split(const Cell& cell) {
    if (cell.segment) {
      Cell left = cell, right = cell;
      bool any = false;
      for (std::size_t i = 0; i < cell.lo.size(); ++i) {
        const double mid = 0.5 * (cell.lo[i] + cell.hi[i]);
        any = any || splits(std::min(cell.lo[i], cell.hi[i]), std::max(cell.lo[i], cell.hi[i]));
        left.hi[i] = mid;
        right.lo[i] = mid;
      }
      if (!any) return std::nullopt;
      evaluate(left);
      evaluate(right);
      return std::pair{std::move(left), std::move(right)};
    }
    std::vector<std::size_t> axes;
    for (std::size_t i = 0; i < cell.lo.size(); ++i) {
      if (splits(cell.lo[i], cell.hi[i])) axes.push_back(i);
    }
    if (axes.empty()) return std::nullopt;
    std::stable_sort(axes.begin(), axes.end(), [&](std::size_t a, std::size_t b) {
      return cell.hi[a] - cell.lo[a] > cell.hi[b] - cell.lo[b];
    });
    // Slabs can also stall, e.g. along a plateau on the cell's edge; then the
    // widest axis gets its turn.
    if (!options_.convex_part_bound || cell.stalls >= 2) axes.resize(1);

    std::optional<std::pair<Cell, Cell>> best;
    double best_max = kInf, best_excess = kInf;
    for (std::size_t axis : axes) {
      auto children = halves(cell, axis);
      evaluate(children.first);
      evaluate(children.second);
      const double max_upper = std::max(children.first.upper, children.second.upper);
      const double excess = std::max(children.first.upper - lower_, 0.0) +
                            std::max(children.second.upper - lower_, 0.0);
      const double slack = 1e-12 * (1.0 + std::abs(max_upper));
      const bool better = max_upper < best_max - slack ||
                          (max_upper <= best_max + slack && excess < best_excess);
      if (better) {
        best_max = max_upper;
        best_excess = excess;
        best = std::move(children);
      }
    }
    const bool stalled = best_max >= cell.upper - 1e-12 * (1.0 + std::abs(cell.upper));
    best->first.stalls = best->second.stalls = stalled && cell.stalls < 2 ? cell.stalls + 1 : 0;
    return best;
  }

  std::vector<const DistanceField*> fields_;
  SupremumOptions options_;
  double lower_ = 0.0;
  double stuck_ = 0.0;
  std::priority_queue<Cell> queue_;
  std::vector<double> part_max_;
  std::vector<double> center_;
  std::vector<double> corner_;
  std::vector<double> crossing_;
  std::vector<double> site_p_;
  std::vector<double> site_q_;
  std::vector<double> edge_v_;
  std::vector<double> edge_w_;
};

Cell cell_from(const AxisBox& box, std::size_t field) {
  return Cell{{box.lo().coords().begin(), box.lo().coords().end()},
              {box.hi().coords().begin(), box.hi().coords().end()},
              false,
              0.0,
              field};
}

Cell cell_from(const Segment& seg, std::size_t field) {
  return Cell{{seg.p.coords().begin(), seg.p.coords().end()},
              {seg.q.coords().begin(), seg.q.coords().end()},
              true,
              0.0,
              field};
}

Cell cell_from(const Primitive& prim, std::size_t field) {
  if (const auto* box = std::get_if<AxisBox>(&prim)) return cell_from(*box, field);
  return cell_from(std::get<Segment>(prim), field);
}

AxisBox bounds(const Primitive& prim) {
  if (const auto* p = std::get_if<Point>(&prim)) return AxisBox(*p, *p);
  if (const auto* box = std::get_if<AxisBox>(&prim)) return *box;
  const auto& seg = std::get<Segment>(prim);
  return canonical_box(seg.p, seg.q);
}

double box_gap(const AxisBox& a, const AxisBox& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = std::max({a.lo()[i] - b.hi()[i], 0.0, b.lo()[i] - a.hi()[i]});
    sum += d * d;
  }
  return std::sqrt(sum);
}

// A part of A inside one box of B adds nothing to the supremum.
bool covered(const Primitive& prim, const std::vector<Primitive>& b_parts) {
  const AxisBox bb = bounds(prim);
  for (const auto& part : b_parts) {
    if (part == prim) return true;
    if (const auto* box = std::get_if<AxisBox>(&part); box && box->contains(bb)) return true;
  }
  return false;
}

bool is_singular(const Primitive& prim) {
  if (std::holds_alternative<Point>(prim)) return true;
  if (const auto* box = std::get_if<AxisBox>(&prim)) return box->is_point();
  const auto& seg = std::get<Segment>(prim);
  return seg.p == seg.q;
}

Point anchor(const Primitive& prim) {
  if (const auto* p = std::get_if<Point>(&prim)) return *p;
  if (const auto* box = std::get_if<AxisBox>(&prim)) return box->lo();
  return std::get<Segment>(prim).p;
}

std::vector<Point> corners(const Primitive& prim) {
  if (const auto* box = std::get_if<AxisBox>(&prim)) return box->vertices();
  const auto& seg = std::get<Segment>(prim);
  return {seg.p, seg.q};
}

void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw GeometryError("certified supremum needs a positive tolerance");
}

}  // namespace

double point_to_set(const Point& x, const CompactSet& set) {
  require_same_dim(set.dim(), x.dim(), "point_to_set");
  const DistanceField field(set);
  return field.dist(x.coords().data());
}

// Declared in geometry.hpp; membership is a point-to-set distance query.
bool contains_point(const CompactSet& set, const Point& x, double tol) {
  if (tol < 0.0) throw GeometryError("contains_point tolerance must be non-negative");
  return point_to_set(x, set) <= tol;
}

DistanceResult directed_distance(const CompactSet& a, const CompactSet& b, double tol) {
  require_same_dim(a.dim(), b.dim(), "directed_distance");
  if (a == b) return {0.0, 0.0};

  const DistanceField field(b);
  const auto b_parts = primitives(b);
  const bool convex_target = b_parts.size() == 1;

  SupremumOptions options;
  options.tol = tol;
  SupremumSearch search(options);
  std::vector<AxisBox> b_bounds;
  for (const auto& part : b_parts) b_bounds.push_back(bounds(part));
  std::deque<DistanceField> local_fields;

  for (const auto& prim : primitives(a)) {
    if (is_singular(prim)) {
      search.add_exact(field.dist(anchor(prim).coords().data()));
      continue;
    }
    if (covered(prim, b_parts)) continue;
    const auto vs = corners(prim);
    if (convex_target) {
      for (const auto& v : vs) search.add_exact(field.dist(v.coords().data()));
      continue;
    }
    require_tolerance(tol);

    // d(x, B) <= reach on the whole part, so a B part whose box is farther
    // than reach is never the nearest one there and can be left out.
    double reach = kInf;
    for (std::size_t j = 0; j < b_parts.size(); ++j) {
      double worst = 0.0;
      for (const auto& v : vs) worst = std::max(worst, field.sq_dist(j, v.coords().data()));
      reach = std::min(reach, worst);
    }
    reach = std::sqrt(reach);
    if (reach <= 0.0) continue;
    const AxisBox bb = bounds(prim);
    std::vector<Primitive> near;
    for (std::size_t j = 0; j < b_parts.size(); ++j) {
      if (box_gap(bb, b_bounds[j]) <= reach) near.push_back(b_parts[j]);
    }
    const auto& local = local_fields.emplace_back(near, b.dim());
    search.add_cell(cell_from(prim, search.add_field(local)));
  }
  return search.run();
}

DistanceResult certified_directed_distance(const CompactSet& a, const CompactSet& b,
                                           const SupremumOptions& options) {
  require_same_dim(a.dim(), b.dim(), "certified_directed_distance");
  require_tolerance(options.tol);
  const DistanceField field(b);
  SupremumSearch search(options);
  const std::size_t whole = search.add_field(field);
  for (const auto& prim : primitives(a)) {
    if (const auto* p = std::get_if<Point>(&prim)) {
      search.add_exact(field.dist(p->coords().data()));
    } else {
      search.add_cell(cell_from(prim, whole));
    }
  }
  return search.run();
}

DistanceResult hausdorff(const CompactSet& a, const CompactSet& b, double tol) {
  const DistanceResult ab = directed_distance(a, b, tol);
  const DistanceResult ba = directed_distance(b, a, tol);
  return {std::max(ab.value, ba.value), std::max(ab.err, ba.err)};
}

double nested_box_hausdorff(const AxisBox& inner, const AxisBox& outer) {
  require_same_dim(outer.dim(), inner.dim(), "nested_box_hausdorff");
  if (!outer.contains(inner)) {
    throw GeometryError("nested_box_hausdorff requires the inner box to lie inside the outer box");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < inner.dim(); ++i) {
    const double gap = std::max(inner.lo()[i] - outer.lo()[i], outer.hi()[i] - inner.hi()[i]);
    sum += gap * gap;
  }
  return std::sqrt(sum);
}

}  // namespace hyperspace
