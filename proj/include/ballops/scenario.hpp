#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ballops.hpp"

namespace ballops {

using Json = nlohmann::json;

// CLI input: a unit ball, a point set, and an optional radius. Numbers are
// "p/q" strings, decimal strings, or JSON integers; floating JSON literals
// are rejected so nothing silently loses precision.
struct Scenario {
  std::string name;
  std::vector<Point> unit_ball;
  std::vector<Point> points;
  std::optional<Rational> lambda;
};

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<int64_t>()));
  fail(ErrorCode::ScenarioError,
       "numbers must be strings like \"p/q\" or \"0.5\", or integers");
}

inline Point point_from_json(const Json& j) {
  require(j.is_array() && j.size() == 2, ErrorCode::ScenarioError, "point must be [x, y]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

inline std::vector<Point> points_from_json(const Json& j, const std::string& what) {
  require(j.is_array() && !j.empty(), ErrorCode::ScenarioError, what + " must be a non-empty array");
  std::vector<Point> pts;
  pts.reserve(j.size());
  for (const auto& e : j) pts.push_back(point_from_json(e));
  return pts;
}

inline Scenario parse_scenario(const Json& j) {
  require(j.is_object(), ErrorCode::ScenarioError, "scenario must be a JSON object");
  require(j.contains("unit_ball") && j.contains("points"), ErrorCode::ScenarioError,
          "scenario needs \"unit_ball\" and \"points\"");
  Scenario s;
  s.name = j.value("name", std::string("unnamed"));
  s.unit_ball = points_from_json(j.at("unit_ball"), "unit_ball");
  s.points = points_from_json(j.at("points"), "points");
  if (j.contains("lambda") && !j.at("lambda").is_null())
    s.lambda = rational_from_json(j.at("lambda"));
  return s;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::IoError, "cannot open scenario file " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::ScenarioError, std::string("bad scenario JSON: ") + e.what());
  }
  return parse_scenario(j);
}

// ---------------------------------------------------------------------------
// report serialization (exact; rationals as canonical strings)

inline Json point_to_json(const Point& p) { return Json::array({p.x.str(), p.y.str()}); }

inline Json region_to_json(const ConvexRegion& r) {
  Json j;
  j["kind"] = region_kind_name(r.kind());
  Json verts = Json::array();
  for (const Point& v : r.vertices()) verts.push_back(point_to_json(v));
  j["vertices"] = std::move(verts);
  return j;
}

inline Point point_from_report(const Json& j) {
  return {Rational::parse(j.at(0).get<std::string>()), Rational::parse(j.at(1).get<std::string>())};
}

inline ConvexRegion region_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  std::vector<Point> verts;
  for (const auto& v : j.at("vertices")) verts.push_back(point_from_report(v));
  if (kind == "empty") return ConvexRegion::empty();
  if (kind == "point") return ConvexRegion::single(verts.at(0));
  if (kind == "segment") return ConvexRegion::segment(verts.at(0), verts.at(1));
  ConvexRegion r = ConvexRegion::hull_of(verts);
  check_internal(r.vertices() == verts, "non-canonical polygon in report");
  return r;
}

inline Json arc_to_json(const Arc& a) {
  Json j;
  j["endpoints"] = Json::array({point_to_json(a.a), point_to_json(a.b)});
  j["center"] = point_to_json(a.center);
  j["radius"] = a.radius.str();
  Json poly = Json::array();
  for (const Point& v : a.polyline) poly.push_back(point_to_json(v));
  j["polyline"] = std::move(poly);
  return j;
}

// nlohmann::json orders object keys, so a fixed dump width gives
// byte-identical bodies for identical content.
inline std::string report_to_string(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ballops
