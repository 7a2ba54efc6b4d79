#pragma once

#include <algorithm>
#include <cstdio>
#include <string>

#include "civitas/geometry.hpp"
#include "civitas/layout.hpp"

namespace civitas {

struct SvgOptions {
  /// Pixels per foot; non-positive picks a scale fitting 800 px.
  double scale = 0.0;
  double margin_px = 12.0;
  /// House numbers are drawn only for small layouts.
  std::size_t label_limit = 50;
};

namespace detail {
inline std::string fmt3(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}
}  // namespace detail

/// Standalone SVG 1.1 drawing: the wall as one closed path (or circle), one
/// rect per house, y pointing up so the base of the city is at the bottom.
inline std::string render_svg(const Layout& layout, const SvgOptions& opt = {}) {
  using detail::fmt3;
  const auto& c = layout.instance.container;
  const auto [lo, hi] = c.bounds();
  const double extent = std::max(hi.x - lo.x, hi.y - lo.y);
  const double s = opt.scale > 0.0 ? opt.scale : 800.0 / extent;
  const double m = opt.margin_px;
  const double width = (hi.x - lo.x) * s + 2 * m;
  const double height = (hi.y - lo.y) * s + 2 * m + 24.0;  // room for the caption
  auto X = [&](double x) { return (x - lo.x) * s + m; };
  auto Y = [&](double y) { return (hi.y - y) * s + m; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt3(width) +
         "\" height=\"" + fmt3(height) + "\" viewBox=\"0 0 " + fmt3(width) + " " + fmt3(height) + "\">\n";
  out += "<title>" + std::string(to_string(layout.instance.id)) + ": " +
         std::to_string(layout.count()) + " houses</title>\n";
  const std::string wall_style = " fill=\"#f4efe4\" stroke=\"#222\" stroke-width=\"1.5\"";
  if (c.is_circle()) {
    const auto& circ = c.as_circle();
    out += "<circle class=\"wall\" cx=\"" + fmt3(X(circ.center.x)) + "\" cy=\"" + fmt3(Y(circ.center.y)) +
           "\" r=\"" + fmt3(circ.radius * s) + "\"" + wall_style + "/>\n";
  } else {
    out += "<path class=\"wall\" d=\"";
    bool first = true;
    for (const auto& p : c.vertices()) {
      out += first ? "M " : " L ";
      out += fmt3(X(p.x)) + " " + fmt3(Y(p.y));
      first = false;
    }
    out += " Z\"" + wall_style + "/>\n";
  }

  const auto& house = layout.instance.house;
  out += "<g class=\"houses\" fill=\"#c8a27a\" stroke=\"#4a3520\" stroke-width=\"" +
         fmt3(std::min(1.0, 0.04 * house.width * s)) + "\">\n";
  for (const auto& h : layout.houses) {
    const double cx = X(h.center().x);
    const double cy = Y(h.center().y);
    const double w = h.length() * s;
    const double ht = h.width() * s;
    out += "<rect x=\"" + fmt3(cx - 0.5 * w) + "\" y=\"" + fmt3(cy - 0.5 * ht) + "\" width=\"" + fmt3(w) +
           "\" height=\"" + fmt3(ht) + "\"";
    if (h.theta() != 0.0) {
      // SVG angles turn clockwise on screen; the y flip turns ours into that.
      out += " transform=\"rotate(" + fmt3(-h.theta() * 180.0 / kPi) + " " + fmt3(cx) + " " + fmt3(cy) + ")\"";
    }
    out += "/>\n";
  }
  out += "</g>\n";

  if (layout.count() <= opt.label_limit && layout.count() > 0) {
    out += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"" +
           fmt3(0.45 * house.width * s) + "\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
    for (std::size_t i = 0; i < layout.count(); ++i) {
      const auto& h = layout.houses[i];
      out += "<text x=\"" + fmt3(X(h.center().x)) + "\" y=\"" + fmt3(Y(h.center().y)) + "\">" +
             std::to_string(i + 1) + "</text>\n";
    }
    out += "</g>\n";
  }
  out += "<text x=\"" + fmt3(width / 2) + "\" y=\"" + fmt3(height - 8.0) +
         "\" font-family=\"serif\" font-size=\"14\" text-anchor=\"middle\">" +
         std::string(to_string(layout.instance.id)) + ": " + std::to_string(layout.count()) +
         " houses</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace civitas
