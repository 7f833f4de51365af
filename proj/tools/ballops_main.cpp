// ballops: exact ball-operator geometry on polygonal Minkowski planes.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ballops/scenario.hpp"
#include "ballops/svg.hpp"
#include "ballops/verify.hpp"

namespace {

using namespace ballops;

struct Options {
  std::string scenario_path;
  std::string lambda_text;
  std::string epsilon_text;
  std::string svg_path;
  std::string show = "";
  uint64_t seed = 0;
  bool seed_given = false;
  int samples = 50;
  int grid = 8;
  int precision = 12;
  bool json = false;
};

struct Loaded {
  Scenario scenario;
  NormedPlane plane;
  std::vector<Point> points;
};

Loaded load(const Options& opt) {
  require(!opt.scenario_path.empty(), ErrorCode::ScenarioError, "--scenario is required");
  Scenario s = load_scenario(opt.scenario_path);
  NormedPlane plane = validate_plane(ConvexRegion::hull_of(s.unit_ball));
  return {s, std::move(plane), s.points};
}

Rational lambda_or(const Options& opt, const Scenario& s, const Rational& fallback) {
  if (!opt.lambda_text.empty()) return Rational::parse(opt.lambda_text);
  if (s.lambda) return *s.lambda;
  return fallback;
}

uint64_t resolve_seed(const Options& opt) {
  if (opt.seed_given) return opt.seed;
  if (const char* env = std::getenv("BALLOPS_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      fail(ErrorCode::ScenarioError, "BALLOPS_SEED is not a number");
    }
  }
  return 0;
}

Json scenario_echo(const Scenario& s) {
  Json j;
  j["name"] = s.name;
  Json ub = Json::array(), pts = Json::array();
  for (const Point& p : s.unit_ball) ub.push_back(point_to_json(p));
  for (const Point& p : s.points) pts.push_back(point_to_json(p));
  j["unit_ball"] = std::move(ub);
  j["points"] = std::move(pts);
  j["lambda"] = s.lambda ? Json(s.lambda->str()) : Json(nullptr);
  return j;
}

bool show_has(const Options& opt, const std::string& layer) {
  size_t pos = 0;
  while (pos <= opt.show.size()) {
    size_t next = opt.show.find(',', pos);
    if (next == std::string::npos) next = opt.show.size();
    if (opt.show.substr(pos, next - pos) == layer) return true;
    pos = next + 1;
  }
  return false;
}

void write_svg(const Options& opt, const Loaded& in, const ConvexRegion* primary,
               const std::vector<Arc>* primary_arcs, uint64_t seed) {
  if (opt.svg_path.empty()) return;
  const NormedPlane& plane = in.plane;
  PointSet K(plane, in.points);
  SvgFigure fig(opt.precision);
  if (show_has(opt, "ball"))
    fig.add_region("ball", plane.unit_ball, "#888888", "none");
  if (show_has(opt, "bi")) {
    const Rational lam = lambda_or(opt, in.scenario, diameter(K).first);
    fig.add_region("bi", ball_intersection(K, lam).region, "#1f77b4", "none");
  }
  if (show_has(opt, "bh")) {
    const Rational lam = lambda_or(opt, in.scenario, diameter(K).first);
    fig.add_region("bh", ball_hull(K, lam).region, "#2ca02c", "none");
  }
  if (show_has(opt, "ch"))
    fig.add_region("ch", chebyshev_set(K).second, "#d62728", "none");
  if (show_has(opt, "arcs") && K.size() >= 2)
    for (const Arc& a : arc_hull(K).arcs) fig.add_polyline("arcs", a.polyline, "#9467bd");
  if (show_has(opt, "completions") && K.size() >= 2)
    for (const CompletionResult& c :
         sample_completions(K, 3, default_completion_eps(K), seed))
      fig.add_region("completions", c.region, "#8c564b", "none");
  if (primary) fig.add_region("result", *primary, "#ff7f0e", "none");
  if (primary_arcs)
    for (const Arc& a : *primary_arcs) fig.add_polyline("result-arcs", a.polyline, "#ff7f0e");
  fig.add_points("k", in.points, "#000000");

  std::ofstream out(opt.svg_path);
  require(out.good(), ErrorCode::IoError, "cannot write " + opt.svg_path);
  out << fig.render();
}

Json critical_report_json(const CriticalReport& r) {
  Json j;
  j["center"] = point_to_json(r.center);
  j["radius"] = r.radius.str();
  Json crit = Json::array();
  for (const Point& p : r.critical_points) crit.push_back(point_to_json(p));
  j["critical_points"] = std::move(crit);
  j["degree"] = r.degree ? Json(*r.degree) : Json(nullptr);
  if (r.base_system) {
    Json base = Json::array();
    for (const Point& p : *r.base_system) base.push_back(point_to_json(p));
    j["base_system"] = std::move(base);
  } else {
    j["base_system"] = nullptr;
  }
  return j;
}

int run_command(const std::string& command, const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const uint64_t seed = resolve_seed(opt);
  Loaded in = load(opt);
  PointSet K(in.plane, in.points);

  Json report;
  report["command"] = command;
  report["scenario"] = scenario_echo(in.scenario);
  report["seed"] = seed;
  report["regions"] = nullptr;
  report["verdicts"] = Json::array();

  ConvexRegion primary;
  std::vector<Arc> primary_arcs;
  bool has_primary = false, has_arcs = false;

  if (command == "gauge") {
    Json values = Json::array();
    for (const Point& p : in.points) values.push_back(gauge(in.plane, p).str());
    report["values"] = std::move(values);
  } else if (command == "diam") {
    const auto [d, pair] = diameter(K);
    report["diameter"] = d.str();
    report["pair"] = Json::array({point_to_json(pair.first), point_to_json(pair.second)});
  } else if (command == "radius") {
    const auto [lam, witness] = chebyshev_radius(in.plane, K.points());
    report["lambda"] = lam.str();
    report["witness"] = point_to_json(witness);
  } else if (command == "chebyshev") {
    const auto [lam, region] = chebyshev_set(K);
    report["lambda"] = lam.str();
    report["regions"] = region_to_json(region);
    primary = region;
    has_primary = true;
  } else if (command == "bi" || command == "bh") {
    const Rational lam = lambda_or(opt, in.scenario, diameter(K).first);
    const BallOpResult r =
        command == "bi" ? ball_intersection(K, lam) : ball_hull(K, lam);
    report["lambda_used"] = r.lambda_used.str();
    report["regions"] = region_to_json(r.region);
    Json sup = Json::array();
    for (const Point& c : r.supporting_centers) sup.push_back(point_to_json(c));
    report["supporting_centers"] = std::move(sup);
    primary = r.region;
    has_primary = true;
  } else if (command == "arcs") {
    // singleton convention: the hull is the point itself, no arcs
    const ArcHullResult r = K.size() == 1
                                ? ArcHullResult{ConvexRegion::single(K.points()[0]), {}}
                                : arc_hull(K);
    report["regions"] = region_to_json(r.region);
    Json arcs = Json::array();
    for (const Arc& a : r.arcs) arcs.push_back(arc_to_json(a));
    report["arcs"] = std::move(arcs);
    primary = r.region;
    primary_arcs = r.arcs;
    has_primary = has_arcs = true;
  } else if (command == "walk") {
    const PivotWalkResult r =
        K.size() == 1 ? PivotWalkResult{{}, ConvexRegion::single(K.points()[0]), {}}
                      : pivot_walk(K);
    report["regions"] = region_to_json(r.region);
    Json balls = Json::array();
    for (const Ball& b : r.balls) {
      Json jb;
      jb["center"] = point_to_json(b.center);
      jb["radius"] = b.radius.str();
      balls.push_back(std::move(jb));
    }
    report["balls"] = std::move(balls);
    Json trace = Json::array();
    for (const auto& [p, c] : r.trace)
      trace.push_back(Json::array({point_to_json(p), point_to_json(c)}));
    report["trace"] = std::move(trace);
    primary = r.region;
    has_primary = true;
  } else if (command == "complete") {
    const Rational eps = opt.epsilon_text.empty() ? default_completion_eps(K)
                                                  : Rational::parse(opt.epsilon_text);
    const CompletionResult r = complete_greedy(K, eps, seed);
    report["regions"] = region_to_json(r.region);
    report["epsilon_achieved"] = r.epsilon.str();
    report["rounds"] = r.rounds;
    report["complete_exact"] = r.epsilon.is_zero();
    primary = r.region;
    has_primary = true;
  } else if (command == "critical") {
    const auto [lam, region] = chebyshev_set(K);
    report["lambda"] = lam.str();
    report["regions"] = region_to_json(region);
    Json reports = Json::array();
    for (const Point& x : region.vertices())
      reports.push_back(critical_report_json(critical_set(K, x)));
    report["critical"] = std::move(reports);
    primary = region;
    has_primary = true;
  } else if (command == "analyze") {
    const auto [lam, region] = chebyshev_set(K);
    const auto [d, pair] = diameter(K);
    report["lambda"] = lam.str();
    report["diameter"] = d.str();
    report["centrable"] = is_centrable(K);
    report["regions"] = region_to_json(region);
    Json reports = Json::array();
    for (const Point& x : region.vertices()) {
      const CriticalReport rep = base_system(K, x);
      Json jr = critical_report_json(rep);
      jr["base_illuminates"] = rep.base_system ? Json(verify_base_illuminates(K, rep)) : Json(nullptr);
      reports.push_back(std::move(jr));
    }
    report["centers"] = std::move(reports);
    if (is_centrable(K)) {
      const auto [single, rep] = ch_singleton_centrable(K);
      report["singleton"] = single;
      report["singleton_witness"] = rep ? critical_report_json(*rep) : Json(nullptr);
    }
    primary = region;
    has_primary = true;
  } else if (command == "illuminate") {
    const Rational lam = lambda_or(opt, in.scenario, Rational(1));
    const Ball C = ball(in.plane, Point{0, 0}, lam);
    report["inner_illuminating"] = inner_illuminating(in.points, C.region);
    report["global"] = is_global(in.points, C);
    primary = C.region;
    has_primary = true;
  } else if (command == "verify") {
    VerdictCollector collector;
    Instance curated;
    curated.plane = std::make_shared<NormedPlane>(in.plane);
    curated.points = in.points;
    run_property_suite(seed, opt.samples, {curated}, collector, opt.grid);
    Json verdicts = Json::array();
    bool all_pass = true;
    for (const Verdict& v : collector.verdicts()) {
      Json jv;
      jv["property"] = v.property;
      jv["pass"] = v.pass;
      jv["checks"] = v.checks;
      jv["witness"] = v.witness;
      verdicts.push_back(std::move(jv));
      all_pass = all_pass && v.pass;
    }
    report["verdicts"] = std::move(verdicts);
    Json diags = Json::array();
    for (const auto& [name, count] : collector.diagnostics()) {
      Json jd;
      jd["diagnostic"] = name;
      jd["count"] = count;
      diags.push_back(std::move(jd));
    }
    report["diagnostics"] = std::move(diags);
    report["all_pass"] = all_pass;
    if (!all_pass) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
      report["timing_ms"] = ms;
      std::cout << report_to_string(report);
      return 3;  // a failed property is always a bug
    }
  } else if (command == "plot") {
    require(!opt.svg_path.empty(), ErrorCode::ScenarioError, "plot needs --svg PATH");
  } else {
    fail(ErrorCode::ScenarioError, "unknown command " + command);
  }

  write_svg(opt, in, has_primary ? &primary : nullptr, has_arcs ? &primary_arcs : nullptr, seed);

  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  report["timing_ms"] = ms;
  std::cout << report_to_string(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact ball operators on polygonal Minkowski planes"};
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::string> commands = {"gauge",    "diam",     "radius", "chebyshev",
                                             "bi",       "bh",       "arcs",   "walk",
                                             "complete", "critical", "analyze", "illuminate",
                                             "verify",   "plot"};
  for (const std::string& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--scenario", opt.scenario_path, "scenario JSON file");
    sub->add_option("--lambda", opt.lambda_text, "radius as p/q or decimal");
    sub->add_option("--epsilon", opt.epsilon_text, "completion gap as p/q or decimal");
    auto* seed_opt = sub->add_option("--seed", opt.seed, "random seed");
    sub->callback([&opt, seed_opt] { opt.seed_given = seed_opt->count() > 0; });
    sub->add_option("--samples", opt.samples, "verify: number of random instances");
    sub->add_option("--grid", opt.grid, "oracle grid divisor");
    sub->add_option("--svg", opt.svg_path, "write an SVG figure here");
    sub->add_option("--show", opt.show, "svg layers: ball,bi,bh,ch,arcs,completions");
    sub->add_option("--precision", opt.precision, "svg decimal digits");
    sub->add_flag("--json", opt.json, "emit the JSON report (default)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    return run_command(app.get_subcommands().front()->get_name(), opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
