#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "hyperspace/geometry.hpp"

namespace hyperspace {

enum class PathKind { translation, point_to_box, set_to_box, reversed, concatenation };

std::string_view to_string(PathKind kind);

/// One evaluation of a path. The true f(t) is within err (Hausdorff) of set.
struct PathSample {
  CompactSet set;
  double err = 0.0;
};

class PathError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// A map t in [0, 1] -> CompactSet with certified Lipschitz constant:
/// h(f(t1), f(t2)) <= lipschitz * |t1 - t2|.
class HyperPath {
 public:
  using Evaluator = std::function<PathSample(double)>;

  HyperPath(CompactSet start, CompactSet end, double lipschitz, PathKind kind,
            Evaluator evaluator, double max_err = 0.0);

  const CompactSet& start() const noexcept { return start_; }
  const CompactSet& end() const noexcept { return end_; }
  double lipschitz() const noexcept { return lipschitz_; }
  PathKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return start_.dim(); }
  /// Upper bound on PathSample::err over all t.
  double max_err() const noexcept { return max_err_; }

  /// Throws GeometryError for t outside [0, 1].
  PathSample sample(double t) const;
  CompactSet operator()(double t) const { return sample(t).set; }

 private:
  CompactSet start_;
  CompactSet end_;
  double lipschitz_;
  PathKind kind_;
  Evaluator evaluator_;
  double max_err_;
};

struct PathOptions {
  /// Segments swept toward a box are sampled with this many pieces; the
  /// sampled sweep is within (1 - t) * length / (2 * pieces) of the exact one.
  std::size_t segment_pieces = 64;
};

/// t -> A + t v, Lipschitz constant |v|.
HyperPath translation_path(const CompactSet& a, const Point& v);

/// Inflates {a} into the box spanned by m and M:
/// f(t) = prod_i [(m_i - a_i) t + a_i, (M_i - a_i) t + a_i].
HyperPath point_to_box_path(const Point& a, const Point& m, const Point& big_m);

/// Union over a in A of the point-to-box paths. A must lie in the box.
HyperPath set_to_box_path(const CompactSet& a, const Point& m, const Point& big_m,
                          const PathOptions& options = {});

HyperPath reverse(const HyperPath& path);

/// Equal-length legs: leg j runs on [j/k, (j+1)/k]. Consecutive endpoints must
/// agree within junction_tol in the Hausdorff metric.
HyperPath concat(const std::vector<HyperPath>& legs, double junction_tol = 1e-9);

/// The enclosing boxes used by connect: equal half-extents centred on each
/// set's bounding box, so that `to` is `from` shifted by `shift`.
struct EnclosingBoxes {
  AxisBox from;
  AxisBox to;
  Point shift;
};

EnclosingBoxes enclosing_boxes(const CompactSet& a, const CompactSet& b);

/// A -> A_R (inflate), A_R -> B_R (translate), B_R -> B (deflate).
HyperPath connect(const CompactSet& a, const CompactSet& b, const PathOptions& options = {});

/// h(f_a(t), f_a2(t)) for the point-to-box paths of two points in the same
/// box; never exceeds (1 - t) |a - a2|.
double contraction_gap(const Point& a, const Point& a2, const Point& m, const Point& big_m,
                       double t);

}  // namespace hyperspace
