#include "hyperspace/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "hyperspace/metric.hpp"

namespace hyperspace::verify {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::mt19937_64 seeded_engine(std::uint64_t seed, std::size_t case_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(case_index),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(case_index) >> 32)};
  return std::mt19937_64(seq);
}

// Records a failure unless observed <= bound.
class Checker {
 public:
  Checker(SuiteReport& report, std::uint64_t seed, std::size_t case_index)
      : report_(report), seed_(seed), case_index_(case_index) {}

  bool at_most(double observed, double bound, const std::string& what) {
    if (observed <= bound) return true;
    report_.failures.push_back({seed_, case_index_, what, observed, bound});
    return false;
  }

 private:
  SuiteReport& report_;
  std::uint64_t seed_;
  std::size_t case_index_;
};

std::vector<double> uniform_grid(std::size_t count) {
  std::vector<double> ts(count);
  for (std::size_t i = 0; i < count; ++i) {
    ts[i] = static_cast<double>(i) / static_cast<double>(count - 1);
  }
  ts.back() = 1.0;
  return ts;
}

}  // namespace

// ---------------------------------------------------------------------------
// Generators

CaseStream::CaseStream(const GeneratorConfig& config, std::size_t case_index)
    : config_(config),
      dim_(config.dims.empty() ? 2 : config.dims[case_index % config.dims.size()]),
      engine_(seeded_engine(config.seed, case_index)) {}

double CaseStream::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

Point CaseStream::point() {
  std::vector<double> c(dim_);
  for (auto& x : c) x = uniform(-config_.scale, config_.scale);
  return Point(std::move(c));
}

Point CaseStream::point_in(const AxisBox& box) {
  std::vector<double> c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    c[i] = box.extent(i) > 0.0 ? uniform(box.lo()[i], box.hi()[i]) : box.lo()[i];
  }
  return Point(std::move(c));
}

AxisBox CaseStream::box() { return canonical_box(point(), point()); }

CompactSet CaseStream::primitive(bool allow_union) {
  const auto& mix = config_.mix;
  std::discrete_distribution<int> pick(
      {mix.points, mix.box, mix.segment, allow_union ? mix.union_of : 0.0});
  switch (pick(engine_)) {
    case 0: {
      const auto count = std::uniform_int_distribution<std::size_t>(
          1, std::max<std::size_t>(1, config_.max_points))(engine_);
      std::vector<Point> pts;
      for (std::size_t i = 0; i < count; ++i) pts.push_back(point());
      return CompactSet::points(std::move(pts));
    }
    case 1:
      return CompactSet::box(box());
    case 2: {
      Point p = point();
      return CompactSet::segment(Segment(std::move(p), point()));
    }
    default: {
      const auto arity = std::uniform_int_distribution<std::size_t>(
          2, std::max<std::size_t>(2, config_.max_union_arity))(engine_);
      std::vector<CompactSet> parts;
      for (std::size_t i = 0; i < arity; ++i) parts.push_back(primitive(false));
      return CompactSet::union_of(std::move(parts));
    }
  }
}

CompactSet CaseStream::set() { return primitive(true); }

// ---------------------------------------------------------------------------
// Suites

SuiteReport run_metric_axioms(const SetGenerator& gen, std::size_t cases, double tol) {
  Stopwatch clock;
  SuiteReport report;
  report.suite = "metric-axioms";
  for (std::size_t i = 0; i < cases; ++i) {
    auto stream = gen.stream(i);
    const CompactSet a = stream.set();
    const CompactSet b = stream.set();
    const CompactSet c = stream.set();
    Checker check(report, gen.seed(), i);

    const DistanceResult ab = hausdorff(a, b, tol);
    const DistanceResult ba = hausdorff(b, a, tol);
    const DistanceResult ac = hausdorff(a, c, tol);
    const DistanceResult cb = hausdorff(c, b, tol);
    const DistanceResult aa = hausdorff(a, a, tol);
    const double err = std::max({ab.err, ba.err, ac.err, cb.err});

    for (const auto* r : {&ab, &ba, &ac, &cb}) {
      if (!std::isfinite(r->value)) {
        report.failures.push_back({gen.seed(), i, "distance is not finite", r->value, 0.0});
      }
      check.at_most(-r->value, tol, "non-negativity");
    }
    check.at_most(std::abs(ab.value - ba.value), 2.0 * err + tol, "symmetry h(A,B) = h(B,A)");
    check.at_most(ab.value, ac.value + cb.value + 3.0 * err + tol,
                  "triangle inequality h(A,B) <= h(A,C) + h(C,B)");
    check.at_most(aa.value, tol, "identity h(A,A) = 0");
    for (const auto& w : witness_points(a)) {
      if (!check.at_most(point_to_set(w, b), ab.upper() + tol, "witness point of A within h of B")) {
        break;
      }
    }
    ++report.cases_run;
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

SuiteReport run_path_modulus(const HyperPath& path, std::size_t grid, double tol,
                             std::uint64_t seed, std::size_t case_index) {
  Stopwatch clock;
  SuiteReport report;
  report.suite = "path-modulus";
  if (grid < 2) throw GeometryError("path modulus grid needs at least two parameters");
  Checker check(report, seed, case_index);

  const auto ts = uniform_grid(grid);
  std::vector<PathSample> samples;
  samples.reserve(ts.size());
  for (double t : ts) samples.push_back(path.sample(t));

  const DistanceResult at_start = hausdorff(samples.front().set, path.start(), tol);
  check.at_most(at_start.lower() - samples.front().err, tol, "f(0) equals the start set");
  const DistanceResult at_end = hausdorff(samples.back().set, path.end(), tol);
  check.at_most(at_end.lower() - samples.back().err, tol, "f(1) equals the end set");

  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      const DistanceResult h = hausdorff(samples[i].set, samples[j].set, tol);
      const double bound = path.lipschitz() * (ts[j] - ts[i]) + samples[i].err + samples[j].err +
                           h.err + tol;
      std::ostringstream what;
      what << "modulus at t=" << ts[i] << ", " << ts[j];
      check.at_most(h.value, bound, what.str());
    }
  }
  report.cases_run = 1;
  report.elapsed_seconds = clock.seconds();
  return report;
}

namespace {

HyperPath random_path(CaseStream& stream, std::size_t kind, double scale) {
  switch (kind % 4) {
    case 0: {
      CompactSet a = stream.set();
      return translation_path(a, stream.point());
    }
    case 1: {
      const AxisBox target = stream.box();
      return point_to_box_path(stream.point_in(target), target.lo(), target.hi());
    }
    case 2: {
      const CompactSet a = stream.set();
      const AxisBox bb = bounding_box(a);
      std::vector<double> lo(a.dim()), hi(a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i) {
        lo[i] = bb.lo()[i] - stream.uniform(1e-3, 0.5) * scale;
        hi[i] = bb.hi()[i] + stream.uniform(1e-3, 0.5) * scale;
      }
      return set_to_box_path(a, Point(std::move(lo)), Point(std::move(hi)));
    }
    default: {
      const CompactSet a = stream.set();
      return connect(a, stream.set());
    }
  }
}

}  // namespace

SuiteReport run_random_path_modulus(const SetGenerator& gen, std::size_t cases, std::size_t grid,
                                    double tol) {
  Stopwatch clock;
  SuiteReport report;
  report.suite = "path-modulus";
  for (std::size_t i = 0; i < cases; ++i) {
    auto stream = gen.stream(i);
    const HyperPath path = random_path(stream, i, gen.config().scale);
    SuiteReport one = run_path_modulus(path, grid, tol, gen.seed(), i);
    for (auto& f : one.failures) {
      f.description = std::string(to_string(path.kind())) + ": " + f.description;
      report.failures.push_back(std::move(f));
    }
    ++report.cases_run;
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

SuiteReport run_oracle_equivalence(const SetGenerator& gen, std::size_t cases, double resolution) {
  Stopwatch clock;
  SuiteReport report;
  report.suite = "oracle";
  if (!(resolution > 0.0)) throw GeometryError("oracle resolution must be positive");
  for (std::size_t i = 0; i < cases; ++i) {
    auto stream = gen.stream(i);
    Checker check(report, gen.seed(), i);
    const CompactSet a = stream.set();
    const CompactSet b = stream.set();
    const AxisBox outer = stream.box();
    const AxisBox inner = canonical_box(stream.point_in(outer), stream.point_in(outer));

    const DistanceResult h = hausdorff(a, b);
    const double formula = nested_box_hausdorff(inner, outer);
    const DistanceResult general = hausdorff(CompactSet::box(inner), CompactSet::box(outer));
    check.at_most(std::abs(formula - general.value), general.err + 1e-9,
                  "nested-box formula vs general Hausdorff");
    try {
      const DistanceResult brute = brute_force_hausdorff(a, b, resolution);
      check.at_most(std::abs(h.value - brute.value), h.err + resolution,
                    "Hausdorff vs grid oracle");
      const DistanceResult nested =
          brute_force_hausdorff(CompactSet::box(inner), CompactSet::box(outer), resolution);
      check.at_most(std::abs(formula - nested.value), resolution,
                    "nested-box formula vs grid oracle");
      ++report.cases_run;
    } catch (const PointBudgetExceeded&) {
      ++report.skipped;
    }
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

SuiteReport run_contraction(const SetGenerator& gen, std::size_t cases, double tol,
                            std::size_t oracle_cases, double oracle_resolution) {
  Stopwatch clock;
  SuiteReport report;
  report.suite = "contraction";
  for (std::size_t i = 0; i < cases; ++i) {
    auto stream = gen.stream(i);
    Checker check(report, gen.seed(), i);
    const std::size_t n = stream.dim();
    const Point m = Point::zero(n);
    const Point big_m(std::vector<double>(n, 1.0));
    const AxisBox unit(m, big_m);
    const Point a = stream.point_in(unit);
    const Point a2 = stream.point_in(unit);
    const double t = stream.uniform(0.0, 1.0);

    const double gap = contraction_gap(a, a2, m, big_m, t);
    check.at_most(gap, (1.0 - t) * distance(a, a2) + tol, "contraction h(f_a(t), f_a'(t))");
    if (i < oracle_cases) {
      try {
        const DistanceResult brute = brute_force_hausdorff(point_to_box_path(a, m, big_m)(t),
                                                           point_to_box_path(a2, m, big_m)(t),
                                                           oracle_resolution);
        check.at_most(std::abs(gap - brute.value), brute.err, "contraction gap vs grid oracle");
      } catch (const PointBudgetExceeded&) {
        ++report.skipped;
      }
    }
    ++report.cases_run;
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

}  // namespace hyperspace::verify
