#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace ballops {

// Deterministic layered SVG in the style of the figures: unit ball, K, bi,
// bh, Ch, arcs, completions. Coordinates are decimal renderings of the exact
// values (display only, never read back).
class SvgFigure {
public:
  explicit SvgFigure(int precision) : precision_(precision) {}

  void add_region(const std::string& layer, const ConvexRegion& region,
                  const std::string& stroke, const std::string& fill) {
    if (region.is_empty()) return;
    std::ostringstream body;
    switch (region.kind()) {
      case RegionKind::Point:
        body << "<circle cx=\"" << num(region.vertices()[0].x) << "\" cy=\""
             << num(region.vertices()[0].y) << "\" r=\"" << marker_radius()
             << "\" fill=\"" << stroke << "\"/>";
        break;
      case RegionKind::Segment:
        body << "<line x1=\"" << num(region.vertices()[0].x) << "\" y1=\""
             << num(region.vertices()[0].y) << "\" x2=\"" << num(region.vertices()[1].x)
             << "\" y2=\"" << num(region.vertices()[1].y) << "\" stroke=\"" << stroke
             << "\" stroke-width=\"" << stroke_width() << "\"/>";
        break;
      default: {
        body << "<polygon points=\"";
        for (size_t i = 0; i < region.vertices().size(); ++i) {
          if (i) body << " ";
          body << num(region.vertices()[i].x) << "," << num(region.vertices()[i].y);
        }
        body << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
             << stroke_width() << "\"/>";
      }
    }
    elements_.emplace_back(layer, body.str());
    for (const Point& v : region.vertices()) bump(v);
  }

  void add_points(const std::string& layer, const std::vector<Point>& pts,
                  const std::string& color) {
    for (const Point& p : pts) {
      std::ostringstream body;
      body << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\""
           << marker_radius() << "\" fill=\"" << color << "\"/>";
      elements_.emplace_back(layer, body.str());
      bump(p);
    }
  }

  void add_polyline(const std::string& layer, const std::vector<Point>& pts,
                    const std::string& color) {
    if (pts.empty()) return;
    std::ostringstream body;
    body << "<polyline points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) body << " ";
      body << num(pts[i].x) << "," << num(pts[i].y);
    }
    body << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << stroke_width()
         << "\"/>";
    elements_.emplace_back(layer, body.str());
    for (const Point& p : pts) bump(p);
  }

  std::string render() const {
    const double pad = span() * 0.08 + 0.1;
    const double x0 = lo_x_ - pad, y0 = lo_y_ - pad;
    const double w = (hi_x_ - lo_x_) + 2 * pad, h = (hi_y_ - lo_y_) + 2 * pad;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(x0) << " " << fmt(y0)
        << " " << fmt(w) << " " << fmt(h) << "\">\n";
    // y grows upward in the plane; flip once for screen coordinates
    out << "<g transform=\"scale(1,-1) translate(0," << fmt(-(2 * y0 + h)) << ")\">\n";
    std::set<std::string> layers;
    for (const auto& [layer, body] : elements_) layers.insert(layer);
    for (const std::string& layer : layers) {
      out << "<g id=\"layer-" << layer << "\">\n";
      for (const auto& [l, body] : elements_)
        if (l == layer) out << body << "\n";
      out << "</g>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
  }

private:
  std::string num(const Rational& r) const { return r.decimal(precision_); }
  static std::string fmt(double v) {
    std::ostringstream s;
    s.precision(6);
    s << std::fixed << v;
    return s.str();
  }
  double span() const { return std::max(hi_x_ - lo_x_, hi_y_ - lo_y_); }
  std::string marker_radius() const { return fmt(std::max(span() * 0.012, 0.02)); }
  std::string stroke_width() const { return fmt(std::max(span() * 0.006, 0.01)); }
  void bump(const Point& p) {
    const double x = p.x.to_double(), y = p.y.to_double();
    lo_x_ = std::min(lo_x_, x);
    hi_x_ = std::max(hi_x_, x);
    lo_y_ = std::min(lo_y_, y);
    hi_y_ = std::max(hi_y_, y);
  }

  int precision_;
  std::vector<std::pair<std::string, std::string>> elements_;
  double lo_x_ = 0, hi_x_ = 0, lo_y_ = 0, hi_y_ = 0;
};

}  // namespace ballops
