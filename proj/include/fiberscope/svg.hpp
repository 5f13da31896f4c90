#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>

#include "fiberscope/numeric.hpp"
#include "fiberscope/polygon.hpp"
#include "fiberscope/words.hpp"

namespace fiberscope {

namespace detail {

inline std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace detail

/// SVG plot of a lattice path: light integer grid, the path as a thick
/// polyline, vertex dots, and a highlighted origin. Purely presentational;
/// nothing numeric is derived from these files.
inline std::string svg_lattice_path(const LatticePath& path) {
  std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& v : path.vertices) {
    min_x = std::min(min_x, v[0]);
    max_x = std::max(max_x, v[0]);
    min_y = std::min(min_y, v[1]);
    max_y = std::max(max_y, v[1]);
  }
  const int scale = 40;
  const int margin = 30;
  const auto px = [&](std::int64_t x) {
    return static_cast<int>(margin + (x - min_x) * scale);
  };
  // SVG y grows downward; flip so the mathematical y-axis points up.
  const auto py = [&](std::int64_t y) {
    return static_cast<int>(margin + (max_y - y) * scale);
  };
  const int width = px(max_x) + margin;
  const int height = py(min_y) + margin;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::int64_t x = min_x; x <= max_x; ++x) {
    svg += "  <line x1=\"" + std::to_string(px(x)) + "\" y1=\"" + std::to_string(py(max_y)) +
           "\" x2=\"" + std::to_string(px(x)) + "\" y2=\"" + std::to_string(py(min_y)) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  }
  for (std::int64_t y = min_y; y <= max_y; ++y) {
    svg += "  <line x1=\"" + std::to_string(px(min_x)) + "\" y1=\"" + std::to_string(py(y)) +
           "\" x2=\"" + std::to_string(px(max_x)) + "\" y2=\"" + std::to_string(py(y)) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  }
  if (!path.vertices.empty()) {
    std::string points;
    for (const auto& v : path.vertices) {
      if (!points.empty()) points += " ";
      points += std::to_string(px(v[0])) + "," + std::to_string(py(v[1]));
    }
    svg += "  <polyline points=\"" + points +
           "\" fill=\"none\" stroke=\"#1f3a6e\" stroke-width=\"3\" "
           "stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
    for (const auto& v : path.vertices) {
      svg += "  <circle cx=\"" + std::to_string(px(v[0])) + "\" cy=\"" +
             std::to_string(py(v[1])) + "\" r=\"3\" fill=\"#1f3a6e\"/>\n";
    }
    svg += "  <circle cx=\"" + std::to_string(px(0)) + "\" cy=\"" + std::to_string(py(0)) +
           "\" r=\"5\" fill=\"#c0392b\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

/// SVG plot of a convex polygon (the norm ball) with coordinate axes and
/// exact fraction labels at the vertices.
inline std::string svg_norm_ball(const RatPolygon& ball) {
  const auto& verts = ball.vertices();
  double min_x = -1, max_x = 1, min_y = -1, max_y = 1;
  for (const auto& v : verts) {
    const double x = static_cast<double>(v.x);
    const double y = static_cast<double>(v.y);
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double scale = 360.0 / (span > 0 ? span : 1.0);
  const double margin = 60.0;
  const auto px = [&](double x) { return margin + (x - min_x) * scale; };
  const auto py = [&](double y) { return margin + (max_y - y) * scale; };
  const int width = static_cast<int>(px(max_x) + margin);
  const int height = static_cast<int>(py(min_y) + margin);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <line x1=\"" + detail::fmt2(px(min_x)) + "\" y1=\"" + detail::fmt2(py(0)) +
         "\" x2=\"" + detail::fmt2(px(max_x)) + "\" y2=\"" + detail::fmt2(py(0)) +
         "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  svg += "  <line x1=\"" + detail::fmt2(px(0)) + "\" y1=\"" + detail::fmt2(py(min_y)) +
         "\" x2=\"" + detail::fmt2(px(0)) + "\" y2=\"" + detail::fmt2(py(max_y)) +
         "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  if (!verts.empty()) {
    std::string points;
    for (const auto& v : verts) {
      if (!points.empty()) points += " ";
      points += detail::fmt2(px(static_cast<double>(v.x))) + "," +
                detail::fmt2(py(static_cast<double>(v.y)));
    }
    svg += "  <polygon points=\"" + points +
           "\" fill=\"#aecbe8\" fill-opacity=\"0.6\" stroke=\"#1f3a6e\" "
           "stroke-width=\"2\"/>\n";
    for (const auto& v : verts) {
      const double x = px(static_cast<double>(v.x));
      const double y = py(static_cast<double>(v.y));
      svg += "  <circle cx=\"" + detail::fmt2(x) + "\" cy=\"" + detail::fmt2(y) +
             "\" r=\"3\" fill=\"#1f3a6e\"/>\n";
      svg += "  <text x=\"" + detail::fmt2(x + 6) + "\" y=\"" + detail::fmt2(y - 6) +
             "\" font-family=\"monospace\" font-size=\"12\">(" +
             to_fraction_string(v.x) + ", " + to_fraction_string(v.y) + ")</text>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace fiberscope
