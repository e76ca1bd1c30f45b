#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "hyperspace/io.hpp"

#ifdef HYPERSPACE_CLI

using hyperspace::io::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string("\"") + HYPERSPACE_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string("\"") + HYPERSPACE_DATA_DIR + "/" + name + "\"";
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "hyperspace_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(CliTest, DistSegments) {
  const auto r = run("dist " + data("segments_a.json") + " " + data("segments_b.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j.at("dbar_ab").get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(j.at("dbar_ba").get<double>(), std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(j.at("h").get<double>(), std::sqrt(2.0), 1e-9);
}

TEST(CliTest, DistWithOracle) {
  const auto r = run("dist " + data("segments_a.json") + " " + data("segments_b.json") +
                     " --oracle 0.01");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j.at("oracle").at("value").get<double>(), std::sqrt(2.0), 0.02);
}

TEST(CliTest, DistIdenticalIsZero) {
  const auto r = run("dist " + data("boundary_a.json") + " " + data("boundary_a.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("h").get<double>(), 0.0);
}

TEST(CliTest, InputErrorsExitTwo) {
  const auto bad = scratch("bad.json");
  hyperspace::io::write_json_file(bad, json{{"dim", 2}, {"set", {{"type", "blob"}}}});
  EXPECT_EQ(run("dist \"" + bad.string() + "\" " + data("segments_b.json")).code, 2);
  EXPECT_EQ(run("dist " + data("segments_a.json")).code, 2);
  EXPECT_EQ(run("dist " + data("segments_a.json") + " " + data("segments_b.json") + " --tol -1").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(CliTest, PathFramesOnSingletons) {
  const auto out = scratch("singletons.json");
  ASSERT_EQ(run("path " + data("connect_singletons.json") + " --frames 5 --out \"" +
                out.string() + "\"").code, 0);
  const auto stream = hyperspace::io::read_json_file(out);
  ASSERT_EQ(stream.at("frames").size(), 5u);
  EXPECT_EQ(stream.at("frames").front().at("t"), 0.0);
  EXPECT_EQ(stream.at("frames").back().at("t"), 1.0);
  const auto last = hyperspace::io::parse_set_document(stream.at("frames").back());
  EXPECT_EQ(last, hyperspace::CompactSet::points({hyperspace::Point{10, 0}}));
}

TEST(CliTest, TranslationMiddleFrame) {
  const auto out = scratch("translation.json");
  ASSERT_EQ(run("path " + data("translation_box.json") + " --frames 3 --out \"" +
                out.string() + "\"").code, 0);
  const auto stream = hyperspace::io::read_json_file(out);
  const auto mid = hyperspace::io::parse_set_document(stream.at("frames").at(1));
  EXPECT_EQ(mid, hyperspace::CompactSet::box(
                     hyperspace::AxisBox(hyperspace::Point{0.5, 0}, hyperspace::Point{2.5, 1})));
  EXPECT_EQ(stream.at("header").at("lipschitz"), 1.0);
}

TEST(CliTest, PathUsageErrors) {
  const auto out = scratch("unused.json");
  EXPECT_EQ(run("path " + data("translation_box.json") + " --frames 1 --out \"" +
                out.string() + "\"").code, 2);
  EXPECT_EQ(run("path " + data("translation_box.json") + " --out \"" + out.string() + "\"").code, 2);

  const auto doc = scratch("dim3.json");
  hyperspace::io::write_json_file(
      doc, json::parse(R"({"dim": 3, "kind": "point_to_box", "a": [0, 0, 0],
                            "m": [-1, -1, -1], "M": [1, 1, 1]})"));
  EXPECT_EQ(run("path \"" + doc.string() + "\" --frames 3 --out \"" + out.string() +
                "\" --svg \"" + scratch("svg3").string() + "\"").code, 2);
}

TEST(CliTest, VerifySuites) {
  EXPECT_EQ(run("verify nonsense").code, 2);
  const auto r = run("verify all --seed 4 --cases 20");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j.at("passed").get<bool>());
  ASSERT_EQ(j.at("reports").size(), 4u);
  for (const auto& report : j.at("reports")) {
    EXPECT_EQ(report.at("cases_run").get<std::size_t>() + report.at("skipped").get<std::size_t>(), 20u);
    EXPECT_TRUE(report.at("failures").empty());
  }
}

TEST(CliTest, VerifyIsDeterministic) {
  const auto strip = [](std::string text) {
    auto j = json::parse(text);
    for (auto& report : j.at("reports")) report.erase("elapsed_seconds");
    return j;
  };
  const auto a = run("verify metric-axioms --seed 9 --cases 30");
  const auto b = run("verify metric-axioms --seed 9 --cases 30");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(strip(a.out), strip(b.out));
}

#endif
