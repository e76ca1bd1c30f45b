#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperspace/geometry.hpp"
#include "hyperspace/paths.hpp"

namespace hyperspace::verify {

struct Failure {
  std::uint64_t seed = 0;
  std::size_t case_index = 0;
  std::string description;
  double observed = 0.0;
  double bound = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases_run = 0;
  /// Cases the oracle declined (point budget exceeded).
  std::size_t skipped = 0;
  std::vector<Failure> failures;
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

/// Relative frequency of each kind of generated set.
struct PrimitiveMix {
  double points = 1.0;
  double box = 1.0;
  double segment = 1.0;
  double union_of = 1.0;
};

struct GeneratorConfig {
  /// Case i is drawn in dims[i % dims.size()].
  std::vector<std::size_t> dims{2};
  double scale = 10.0;
  PrimitiveMix mix;
  std::size_t max_union_arity = 4;
  std::size_t max_points = 4;
  std::uint64_t seed = 0;
};

/// Random draws for one case. Identical (seed, case index) pairs give
/// identical streams.
class CaseStream {
 public:
  CaseStream(const GeneratorConfig& config, std::size_t case_index);

  std::size_t dim() const { return dim_; }
  std::mt19937_64& engine() { return engine_; }

  double uniform(double lo, double hi);
  Point point();
  Point point_in(const AxisBox& box);
  AxisBox box();
  CompactSet set();

 private:
  CompactSet primitive(bool allow_union);

  GeneratorConfig config_;
  std::size_t dim_;
  std::mt19937_64 engine_;
};

class SetGenerator {
 public:
  explicit SetGenerator(GeneratorConfig config) : config_(std::move(config)) {}

  const GeneratorConfig& config() const { return config_; }
  std::uint64_t seed() const { return config_.seed; }
  CaseStream stream(std::size_t case_index) const { return CaseStream(config_, case_index); }

 private:
  GeneratorConfig config_;
};

/// Non-negativity, symmetry (slack 2 err), triangle inequality (slack 3 err)
/// and h(A, A) = 0 on random triples. Also checks that every witness point of
/// A is within h(A, B) + err of B.
SuiteReport run_metric_axioms(const SetGenerator& gen, std::size_t cases, double tol = 1e-9);

/// All pairs on a uniform grid of `grid` parameters:
/// h(f(ti), f(tj)) <= L |ti - tj| + (sample errs) + (distance err) + tol,
/// plus h(f(0), start) and h(f(1), end).
SuiteReport run_path_modulus(const HyperPath& path, std::size_t grid, double tol = 1e-9,
                             std::uint64_t seed = 0, std::size_t case_index = 0);

/// run_path_modulus over random paths of every constructor.
SuiteReport run_random_path_modulus(const SetGenerator& gen, std::size_t cases,
                                    std::size_t grid, double tol = 1e-9);

/// Closed-form/certified Hausdorff distance against the grid oracle on random
/// pairs, plus the nested-box corner formula on a random nested pair per case.
SuiteReport run_oracle_equivalence(const SetGenerator& gen, std::size_t cases,
                                   double resolution);

/// contraction_gap <= (1 - t) d(a, a2) + tol for random a, a2 in [0, 1]^n;
/// the first oracle_cases are also compared with the grid oracle.
SuiteReport run_contraction(const SetGenerator& gen, std::size_t cases, double tol = 1e-9,
                            std::size_t oracle_cases = 20, double oracle_resolution = 1e-3);

}  // namespace hyperspace::verify
