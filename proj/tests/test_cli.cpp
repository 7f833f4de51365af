#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "ballops/scenario.hpp"
#include "helpers.hpp"

using namespace ballops;
using namespace test_helpers;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BALLOPS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string scenario(const std::string& name) {
  return std::string(BALLOPS_SOURCE_DIR) + "/scenarios/" + name;
}

Json parsed(const std::string& body) { return Json::parse(body); }

Json stripped(const std::string& body) {
  Json j = Json::parse(body);
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST_CASE("cli bh reproduces the module example") {
  const CliResult r = run_cli("bh --scenario " + scenario("linf_pair.json") + " --lambda 1");
  REQUIRE(r.exit_code == 0);
  const Json j = parsed(r.out);
  CHECK(j.at("command") == "bh");
  const ConvexRegion region = region_from_json(j.at("regions"));
  CHECK(region == ConvexRegion::segment(P(0, 0), P(1, 0)));
}

TEST_CASE("cli exit code 2 on a precondition violation") {
  const CliResult r = run_cli("bh --scenario " + scenario("linf_pair.json") + " --lambda 0.25");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli exit code 1 on invalid input") {
  const CliResult r = run_cli("bh --scenario /nonexistent.json");
  CHECK(r.exit_code == 1);

  const std::string bad = std::string(BALLOPS_SOURCE_DIR) + "/build/bad_scenario.json";
  std::ofstream(bad) << "{\"unit_ball\": [[0,1],[1,-1],[-1,-1]], \"points\": [[0,0]]}";
  const CliResult r2 = run_cli("chebyshev --scenario " + bad);
  CHECK(r2.exit_code == 1);  // NotSymmetric
}

TEST_CASE("cli verify passes on the curated scenario") {
  const CliResult r =
      run_cli("verify --scenario " + scenario("l1_pair.json") + " --seed 7 --samples 12");
  REQUIRE(r.exit_code == 0);
  const Json j = parsed(r.out);
  CHECK(j.at("all_pass") == true);
  CHECK(j.at("verdicts").is_array());
  CHECK(!j.at("verdicts").empty());
}

TEST_CASE("cli reports are deterministic for a fixed seed") {
  const std::string args =
      "chebyshev --scenario " + scenario("linf_triangle.json") + " --seed 5 --json";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(report_to_string(stripped(a.out)) == report_to_string(stripped(b.out)));
}

TEST_CASE("cli report regions round-trip exactly") {
  const CliResult r = run_cli("chebyshev --scenario " + scenario("linf_triangle.json"));
  REQUIRE(r.exit_code == 0);
  const Json j = parsed(r.out);
  const ConvexRegion region = region_from_json(j.at("regions"));
  const PointSet K(linf_plane(), {P(0, 0), P(1, 0), P(0, 1)});
  CHECK(region == chebyshev_set(K).second);
  CHECK(region == ConvexRegion::single(PQ(Q(1, 2), Q(1, 2))));
}

TEST_CASE("cli walk and complete emit their payloads") {
  const CliResult w = run_cli("walk --scenario " + scenario("l1_pair.json"));
  REQUIRE(w.exit_code == 0);
  const Json jw = parsed(w.out);
  REQUIRE(jw.at("balls").size() == 2);
  CHECK(point_from_report(jw.at("balls")[0].at("center")) == PQ(Q(1, 2), Q(1, 2)));

  const CliResult c = run_cli("complete --scenario " + scenario("l1_pair.json") + " --seed 3");
  REQUIRE(c.exit_code == 0);
  const Json jc = parsed(c.out);
  CHECK(jc.at("complete_exact") == true);
  CHECK(jc.at("rounds") == 1);
}

TEST_CASE("cli svg emission is deterministic and layered") {
  const std::string svg_path = std::string(BALLOPS_SOURCE_DIR) + "/build/test_fig.svg";
  const std::string args = "plot --scenario " + scenario("l1_pair.json") +
                           " --svg " + svg_path + " --show bi,bh,arcs,ball --seed 2";
  REQUIRE(run_cli(args).exit_code == 0);
  std::ifstream in(svg_path);
  REQUIRE(in.good());
  std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("layer-bi") != std::string::npos);
  CHECK(svg.find("layer-bh") != std::string::npos);
  CHECK(svg.find("layer-arcs") != std::string::npos);
  CHECK(svg.find("layer-k") != std::string::npos);

  REQUIRE(run_cli("plot --scenario " + scenario("l1_pair.json") + " --svg " + svg_path +
                  ".b --show bi,bh,arcs,ball --seed 2")
              .exit_code == 0);
  std::ifstream in2(svg_path + ".b");
  std::string svg2((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
  CHECK(svg == svg2);
}

TEST_CASE("cli plot with no layers draws K only") {
  const std::string svg_path = std::string(BALLOPS_SOURCE_DIR) + "/build/test_fig_k.svg";
  REQUIRE(run_cli("plot --scenario " + scenario("l1_pair.json") + " --svg " + svg_path)
              .exit_code == 0);
  std::ifstream in(svg_path);
  std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(svg.find("layer-k") != std::string::npos);
  CHECK(svg.find("layer-bi") == std::string::npos);
}
