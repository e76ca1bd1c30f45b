// hyperspace: distances, paths and verification suites for compact sets under
// the Hausdorff metric.
//
//   hyperspace dist <A.json> <B.json> [--tol T] [--oracle R]
//   hyperspace path <spec.json> --frames N --out <file> [--svg <dir>]
//   hyperspace verify <suite> [--seed S] [--cases C] [--tol T]
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperspace/io.hpp"
#include "hyperspace/metric.hpp"
#include "hyperspace/svg.hpp"
#include "hyperspace/verify.hpp"

namespace {

using hyperspace::io::json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

struct DistArgs {
  std::string file_a;
  std::string file_b;
  double tol = hyperspace::kDefaultTolerance;
  std::optional<double> oracle;
};

struct PathArgs {
  std::string spec;
  std::size_t frames = 0;
  std::string out;
  std::optional<std::string> svg_dir;
};

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  double tol = 1e-9;
  std::size_t dim = 2;
  std::size_t grid = 11;
  double resolution = 1e-2;
  std::vector<double> mix{1.0, 1.0, 1.0, 1.0};
  std::size_t max_points = 4;
};

int run_dist(const DistArgs& args) {
  const auto a = hyperspace::io::read_set_file(args.file_a);
  const auto b = hyperspace::io::read_set_file(args.file_b);
  hyperspace::require_same_dim(a.dim(), b.dim(), "dist");
  const auto ab = hyperspace::directed_distance(a, b, args.tol);
  const auto ba = hyperspace::directed_distance(b, a, args.tol);
  json out = {{"dbar_ab", ab.value},
              {"dbar_ba", ba.value},
              {"h", std::max(ab.value, ba.value)},
              {"err", std::max(ab.err, ba.err)}};
  if (args.oracle) {
    out["oracle"] = hyperspace::io::to_json(hyperspace::brute_force_hausdorff(a, b, *args.oracle));
  }
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int run_path(const PathArgs& args) {
  const auto path = hyperspace::io::read_path_file(args.spec);
  if (args.svg_dir && path.dim() != 2) {
    std::cerr << "error: --svg needs a two-dimensional path (got dim " << path.dim() << ")\n";
    return kUsageError;
  }
  const auto frames = hyperspace::io::sample_frames(path, args.frames);
  hyperspace::io::write_json_file(args.out, hyperspace::io::frame_stream(path, frames));
  if (args.svg_dir) hyperspace::svg::write_frames(frames, *args.svg_dir);
  return kOk;
}

int run_verify(const VerifyArgs& args) {
  namespace v = hyperspace::verify;
  static const std::vector<std::string> kSuites{"metric-axioms", "path-modulus", "oracle",
                                                "contraction"};
  std::vector<std::string> suites;
  if (args.suite == "all") {
    suites = kSuites;
  } else if (std::find(kSuites.begin(), kSuites.end(), args.suite) != kSuites.end()) {
    suites = {args.suite};
  } else {
    std::cerr << "error: unknown suite \"" << args.suite
              << "\" (expected metric-axioms, path-modulus, oracle, contraction or all)\n";
    return kUsageError;
  }
  if (args.mix.size() != 4) {
    std::cerr << "error: --mix takes four weights: points, box, segment, union\n";
    return kUsageError;
  }

  v::GeneratorConfig config;
  config.dims = {args.dim};
  config.seed = args.seed;
  config.mix = {args.mix[0], args.mix[1], args.mix[2], args.mix[3]};
  config.max_points = args.max_points;

  json reports = json::array();
  bool passed = true;
  for (const auto& suite : suites) {
    v::SuiteReport report;
    if (suite == "metric-axioms") {
      report = v::run_metric_axioms(v::SetGenerator(config), args.cases, args.tol);
    } else if (suite == "path-modulus") {
      report = v::run_random_path_modulus(v::SetGenerator(config), args.cases, args.grid, args.tol);
    } else if (suite == "oracle") {
      // Unit-scale sets keep the oracle grids within the point budget.
      auto small = config;
      small.scale = 1.0;
      report = v::run_oracle_equivalence(v::SetGenerator(small), args.cases, args.resolution);
    } else {
      report = v::run_contraction(v::SetGenerator(config), args.cases, args.tol);
    }
    passed = passed && report.passed();
    reports.push_back(hyperspace::io::to_json(report));
  }
  std::cout << json{{"passed", passed}, {"reports", reports}}.dump(2) << '\n';
  return passed ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hausdorff distances and paths between compact sets"};
  app.require_subcommand(1);

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "Directed and Hausdorff distances between two sets");
  dist_cmd->add_option("A", dist.file_a, "First set document")->required();
  dist_cmd->add_option("B", dist.file_b, "Second set document")->required();
  dist_cmd->add_option("--tol", dist.tol, "Certified tolerance")->check(CLI::PositiveNumber);
  dist_cmd->add_option("--oracle", dist.oracle, "Also run the grid oracle at this resolution")
      ->check(CLI::PositiveNumber);

  PathArgs path;
  auto* path_cmd = app.add_subcommand("path", "Sample a path into a frame stream");
  path_cmd->add_option("spec", path.spec, "Path document")->required();
  path_cmd->add_option("--frames", path.frames, "Number of frames (>= 2)")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  path_cmd->add_option("--out", path.out, "Frame stream output file")->required();
  path_cmd->add_option("--svg", path.svg_dir, "Directory for per-frame SVG files (2D only)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("suite", verify.suite,
                         "metric-axioms | path-modulus | oracle | contraction | all")
      ->required();
  verify_cmd->add_option("--seed", verify.seed, "Generator seed");
  verify_cmd->add_option("--cases", verify.cases, "Cases per suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tol", verify.tol, "Slack added to every bound");
  verify_cmd->add_option("--dim", verify.dim, "Dimension of generated sets")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--grid", verify.grid, "Parameter grid for path-modulus")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1001}));
  verify_cmd->add_option("--resolution", verify.resolution, "Oracle resolution")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--mix", verify.mix, "Weights for points,box,segment,union")
      ->delimiter(',')
      ->expected(4);
  verify_cmd->add_option("--max-points", verify.max_points, "Largest generated point set")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*dist_cmd) return run_dist(dist);
    if (*path_cmd) return run_path(path);
    return run_verify(verify);
  } catch (const hyperspace::io::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const hyperspace::GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsageError;
}
