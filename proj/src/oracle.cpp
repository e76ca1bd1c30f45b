// Grid brute-force reference for the Hausdorff distance. Nothing here calls
// into the closed-form kernels in metric.cpp: sets are sampled, and the
// max-min over sample pairs is computed directly (a k-d tree only skips pairs
// that cannot change the result).

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "hyperspace/metric.hpp"

namespace hyperspace {

namespace {

class SampleCloud {
 public:
  SampleCloud(std::size_t dim, std::size_t budget) : dim_(dim), budget_(budget) {}

  void reserve_more(std::size_t count) {
    if (count > budget_ || size() + count > budget_) {
      throw PointBudgetExceeded("discretization needs more than " + std::to_string(budget_) +
                                " sample points");
    }
    data_.reserve(data_.size() + count * dim_);
  }

  void push(const double* x) { data_.insert(data_.end(), x, x + dim_); }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return data_.size() / dim_; }
  const double* at(std::size_t i) const { return &data_[i * dim_]; }

 private:
  std::size_t dim_;
  std::size_t budget_;
  std::vector<double> data_;
};

void sample_box(const AxisBox& box, double resolution, SampleCloud& cloud) {
  const std::size_t n = box.dim();
  // Spacing h per axis keeps both the spacing and the covering radius
  // 0.5 * sqrt(n) * h within the resolution.
  const double h = std::min(resolution, 2.0 * resolution / std::sqrt(static_cast<double>(n)));
  std::vector<std::size_t> steps(n);
  double total = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ext = box.extent(i);
    steps[i] = ext > 0.0 ? static_cast<std::size_t>(std::ceil(ext / h)) : 0;
    total *= static_cast<double>(steps[i] + 1);
  }
  if (total > static_cast<double>(std::numeric_limits<std::size_t>::max() / 2)) {
    throw PointBudgetExceeded("box grid is too large");
  }
  cloud.reserve_more(static_cast<std::size_t>(total));

  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = steps[i] == 0 ? box.lo()[i]
                           : box.lo()[i] + box.extent(i) * static_cast<double>(idx[i]) /
                                               static_cast<double>(steps[i]);
    }
    cloud.push(x.data());
    std::size_t axis = 0;
    while (axis < n && idx[axis] == steps[axis]) idx[axis++] = 0;
    if (axis == n) break;
    ++idx[axis];
  }
}

void sample_segment(const Segment& seg, double resolution, SampleCloud& cloud) {
  const std::size_t n = seg.dim();
  const double len = seg.length();
  const std::size_t steps = len > 0.0 ? static_cast<std::size_t>(std::ceil(len / resolution)) : 0;
  cloud.reserve_more(steps + 1);
  std::vector<double> x(n);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double s = steps == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(steps);
    for (std::size_t i = 0; i < n; ++i) x[i] = seg.p[i] + s * (seg.q[i] - seg.p[i]);
    cloud.push(x.data());
  }
}

SampleCloud sample(const CompactSet& set, double resolution, std::size_t budget) {
  if (!(resolution > 0.0)) throw GeometryError("oracle resolution must be positive");
  SampleCloud cloud(set.dim(), budget);
  for (const auto& prim : primitives(set)) {
    if (const auto* p = std::get_if<Point>(&prim)) {
      cloud.reserve_more(1);
      cloud.push(p->coords().data());
    } else if (const auto* box = std::get_if<AxisBox>(&prim)) {
      sample_box(*box, resolution, cloud);
    } else {
      sample_segment(std::get<Segment>(prim), resolution, cloud);
    }
  }
  return cloud;
}

// Static k-d tree over a sample cloud, laid out implicitly over a permutation.
class KdTree {
 public:
  explicit KdTree(const SampleCloud& cloud)
      : cloud_(cloud), order_(cloud.size()), axis_(cloud.size(), 0) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    build(0, order_.size());
  }

  // Smallest squared distance from x to the cloud, except that the search
  // stops early once some sample is within sqrt(good_enough).
  double nearest_sq(const double* x, double good_enough) const {
    double best = std::numeric_limits<double>::infinity();
    search(x, 0, order_.size(), best, good_enough);
    return best;
  }

 private:
  static constexpr std::size_t kLeaf = 8;

  double sq(const double* x, std::size_t i) const {
    const double* y = cloud_.at(i);
    double sum = 0.0;
    for (std::size_t k = 0; k < cloud_.dim(); ++k) sum += (x[k] - y[k]) * (x[k] - y[k]);
    return sum;
  }

  void build(std::size_t lo, std::size_t hi) {
    if (hi - lo <= kLeaf) return;
    const std::size_t n = cloud_.dim();
    std::size_t axis = 0;
    double spread = -1.0;
    for (std::size_t k = 0; k < n; ++k) {
      double mn = std::numeric_limits<double>::infinity(), mx = -mn;
      for (std::size_t i = lo; i < hi; ++i) {
        mn = std::min(mn, cloud_.at(order_[i])[k]);
        mx = std::max(mx, cloud_.at(order_[i])[k]);
      }
      if (mx - mn > spread) {
        spread = mx - mn;
        axis = k;
      }
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    std::nth_element(order_.begin() + lo, order_.begin() + mid, order_.begin() + hi,
                     [&](std::size_t a, std::size_t b) {
                       return cloud_.at(a)[axis] < cloud_.at(b)[axis];
                     });
    axis_[mid] = axis;
    build(lo, mid);
    build(mid + 1, hi);
  }

  void search(const double* x, std::size_t lo, std::size_t hi, double& best,
              double good_enough) const {
    if (lo >= hi || best <= good_enough) return;
    if (hi - lo <= kLeaf) {
      for (std::size_t i = lo; i < hi; ++i) best = std::min(best, sq(x, order_[i]));
      return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    const std::size_t axis = axis_[mid];
    best = std::min(best, sq(x, order_[mid]));
    const double diff = x[axis] - cloud_.at(order_[mid])[axis];
    const bool left_first = diff <= 0.0;
    search(x, left_first ? lo : mid + 1, left_first ? mid : hi, best, good_enough);
    if (diff * diff < best) {
      search(x, left_first ? mid + 1 : lo, left_first ? hi : mid, best, good_enough);
    }
  }

  const SampleCloud& cloud_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> axis_;
};

double directed_max_min(const SampleCloud& from, const SampleCloud& to) {
  const KdTree tree(to);
  // Visiting queries in a shuffled order raises the running max early, which
  // lets most nearest-neighbour searches stop at their first close hit.
  std::vector<std::size_t> order(from.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), std::mt19937_64(0x5eed));
  double worst = 0.0;
  for (std::size_t i : order) {
    const double d2 = tree.nearest_sq(from.at(i), worst);
    worst = std::max(worst, d2);
  }
  return std::sqrt(worst);
}

}  // namespace

std::vector<Point> discretize(const CompactSet& set, double resolution, std::size_t point_budget) {
  const SampleCloud cloud = sample(set, resolution, point_budget);
  std::vector<Point> out;
  out.reserve(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    out.emplace_back(std::vector<double>(cloud.at(i), cloud.at(i) + cloud.dim()));
  }
  return out;
}

DistanceResult brute_force_directed(const CompactSet& a, const CompactSet& b, double resolution,
                                    std::size_t point_budget) {
  require_same_dim(a.dim(), b.dim(), "brute_force_directed");
  const SampleCloud sa = sample(a, resolution, point_budget);
  const SampleCloud sb = sample(b, resolution, point_budget);
  return {directed_max_min(sa, sb), resolution};
}

DistanceResult brute_force_hausdorff(const CompactSet& a, const CompactSet& b, double resolution,
                                     std::size_t point_budget) {
  require_same_dim(a.dim(), b.dim(), "brute_force_hausdorff");
  const SampleCloud sa = sample(a, resolution, point_budget);
  const SampleCloud sb = sample(b, resolution, point_budget);
  return {std::max(directed_max_min(sa, sb), directed_max_min(sb, sa)), resolution};
}

}  // namespace hyperspace
