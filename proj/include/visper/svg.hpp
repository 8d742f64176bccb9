// SVG rendering of a stacked arrangement, back to front, with an optional
// overlay of the computed visible arcs.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "visper/geometry.hpp"
#include "visper/io.hpp"
#include "visper/visibility.hpp"

namespace visper {

struct SvgOptions {
  bool overlay_arcs = false;
  std::string fill = "white";
  std::string stroke = "black";
  std::string highlight = "#d62728";
};

struct DrawnArc {
  std::size_t disk;
  double from;
  double to;
};

struct SvgDocument {
  std::string text;
  /// Arcs emitted by the overlay, one per visible interval.
  std::vector<DrawnArc> arcs;
};

inline SvgDocument render_svg_document(const PointSet& ps, const StackingOrder& f, const SvgOptions& opt = {}) {
  if (f.size() != ps.size()) throw std::invalid_argument("render_svg: order size mismatch");
  // Disks span center +-1; one more unit of margin on each side.
  double lo_x = 0.0, lo_y = 0.0, hi_x = 0.0, hi_y = 0.0;
  if (!ps.empty()) {
    lo_x = hi_x = ps[0].x;
    lo_y = hi_y = ps[0].y;
    for (const Point& p : ps) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
  }
  lo_x -= 2.0;
  lo_y -= 2.0;
  hi_x += 2.0;
  hi_y += 2.0;
  const double stroke_width = 0.01;
  auto sx = [](double x) { return format_double(x); };
  auto sy = [](double y) { return format_double(0.0 - y); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(lo_x) << ' '
     << format_double(-hi_y) << ' ' << format_double(hi_x - lo_x) << ' ' << format_double(hi_y - lo_y)
     << "\" width=\"800\" height=\"" << format_double(800.0 * (hi_y - lo_y) / (hi_x - lo_x)) << "\">\n";
  for (std::size_t r = f.size(); r >= 1; --r) {
    const Point c = ps[f.at_rank(r)];
    os << "  <circle cx=\"" << sx(c.x) << "\" cy=\"" << sy(c.y) << "\" r=\"1\" fill=\"" << opt.fill
       << "\" stroke=\"" << opt.stroke << "\" stroke-width=\"" << stroke_width << "\"/>\n";
  }

  SvgDocument doc;
  if (opt.overlay_arcs) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const ArcIntervalSet visible = visible_arcs(ps, f, i);
      for (const auto& [a, b] : visible.intervals()) {
        doc.arcs.push_back({i, a, b});
        // Halves keep every arc command below a full turn.
        const double mid = (a + b) / 2.0;
        const Point c = ps[i];
        auto at = [&](double t) { return Point{c.x + std::cos(t), c.y + std::sin(t)}; };
        const Point p0 = at(a), p1 = at(mid), p2 = at(b);
        // World angles increase counterclockwise; with y flipped that is sweep 0.
        os << "  <path d=\"M " << sx(p0.x) << ' ' << sy(p0.y) << " A 1 1 0 0 0 " << sx(p1.x) << ' '
           << sy(p1.y) << " A 1 1 0 0 0 " << sx(p2.x) << ' ' << sy(p2.y) << "\" fill=\"none\" stroke=\""
           << opt.highlight << "\" stroke-width=\"" << 3 * stroke_width << "\"/>\n";
      }
    }
  }
  os << "</svg>\n";
  doc.text = os.str();
  return doc;
}

inline SvgDocument render_svg(const PointSet& ps, const StackingOrder& f, const std::string& path,
                              const SvgOptions& opt = {}) {
  SvgDocument doc = render_svg_document(ps, f, opt);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("render_svg: cannot open " + path);
  out << doc.text;
  if (!out) throw std::runtime_error("render_svg: write failed for " + path);
  return doc;
}

}  // namespace visper
