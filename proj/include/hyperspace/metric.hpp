#pragma once

#include <cstddef>
#include <vector>

#include "hyperspace/geometry.hpp"

namespace hyperspace {

inline constexpr double kDefaultTolerance = 1e-9;

/// A distance with a certified radius: the true value lies in
/// [value - err, value + err]. err is zero for closed forms.
struct DistanceResult {
  double value = 0.0;
  double err = 0.0;

  double lower() const { return value - err; }
  double upper() const { return value + err; }
};

/// Exact d(x, B) = min over b in B of |x - b|.
double point_to_set(const Point& x, const CompactSet& set);

struct SupremumOptions {
  double tol = kDefaultTolerance;
  /// Tighten each cell's bound with min_j max_{v in corners} d(v, B_j), which
  /// is exact on cells where a single convex part of B is nearest.
  bool convex_part_bound = true;
  /// Cell budget. When exhausted the result carries the honest (wider) err.
  std::size_t max_cells = 4'000'000;
};

/// Directed distance sup_{a in A} d(a, B). Finite parts of A, and convex parts
/// of A against a convex B, are evaluated exactly at their corners; the rest
/// goes through the certified subdivision with error at most tol.
DistanceResult directed_distance(const CompactSet& a, const CompactSet& b,
                                 double tol = kDefaultTolerance);

/// The subdivision search on its own, without the corner shortcuts. Used to
/// cross-check the closed forms.
DistanceResult certified_directed_distance(const CompactSet& a, const CompactSet& b,
                                           const SupremumOptions& options = {});

/// h(A, B) = max(dbar(A, B), dbar(B, A)); err is the larger of the two errs.
DistanceResult hausdorff(const CompactSet& a, const CompactSet& b,
                         double tol = kDefaultTolerance);

/// Hausdorff distance between boxes inner subset outer, from the corner
/// formula sqrt(sum_i max(a_i - c_i, d_i - b_i)^2) where inner = [a, b] and
/// outer = [c, d]. Throws GeometryError if inner is not contained in outer.
double nested_box_hausdorff(const AxisBox& inner, const AxisBox& outer);

class PointBudgetExceeded : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

inline constexpr std::size_t kDefaultPointBudget = 4'000'000;

/// Samples covering every primitive with covering radius <= resolution and
/// grid spacing <= resolution.
std::vector<Point> discretize(const CompactSet& set, double resolution,
                              std::size_t point_budget = kDefaultPointBudget);

/// Reference Hausdorff distance between the discretized sets. Shares no code
/// with the closed forms; err = resolution.
DistanceResult brute_force_hausdorff(const CompactSet& a, const CompactSet& b,
                                     double resolution,
                                     std::size_t point_budget = kDefaultPointBudget);

DistanceResult brute_force_directed(const CompactSet& a, const CompactSet& b,
                                    double resolution,
                                    std::size_t point_budget = kDefaultPointBudget);

}  // namespace hyperspace
