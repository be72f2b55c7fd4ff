#pragma once

#include <algorithm>
#include <span>
#include <string>

#include "loewner/io.hpp"

namespace loewner::io {

/// Self-contained SVG line plot with axis box and min/max labels.
inline std::string svg_line_plot(std::span<const double> xs, std::span<const double> ys, const std::string& title) {
  require(xs.size() == ys.size() && !xs.empty(), "plot needs matching nonempty series");
  constexpr double w = 640, h = 400, pad = 50;
  const auto [xmin_it, xmax_it] = std::minmax_element(xs.begin(), xs.end());
  const auto [ymin_it, ymax_it] = std::minmax_element(ys.begin(), ys.end());
  const double xmin = *xmin_it, xmax = *xmax_it > *xmin_it ? *xmax_it : *xmin_it + 1.0;
  const double ymin = std::min(0.0, *ymin_it), ymax = *ymax_it > ymin ? *ymax_it : ymin + 1.0;
  auto px = [&](double x) { return pad + (x - xmin) / (xmax - xmin) * (w - 2 * pad); };
  auto py = [&](double y) { return h - pad - (y - ymin) / (ymax - ymin) * (h - 2 * pad); };

  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
  s += "<rect x=\"50\" y=\"50\" width=\"540\" height=\"300\" fill=\"none\" stroke=\"black\"/>\n";
  s += "<text x=\"320\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" + title + "</text>\n";
  s += "<text x=\"50\" y=\"370\" font-family=\"sans-serif\" font-size=\"11\">" + format_double(xmin) + "</text>\n";
  s += "<text x=\"590\" y=\"370\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + format_double(xmax) +
       "</text>\n";
  s += "<text x=\"45\" y=\"350\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + format_double(ymin) +
       "</text>\n";
  s += "<text x=\"45\" y=\"58\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + format_double(ymax) +
       "</text>\n";
  s += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s += (i ? " " : "") + format_double(std::round(px(xs[i]) * 100) / 100) + "," +
         format_double(std::round(py(ys[i]) * 100) / 100);
  }
  s += "\"/>\n</svg>\n";
  return s;
}

}  // namespace loewner::io
