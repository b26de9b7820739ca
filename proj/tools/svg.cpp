// Copyright 2026 The snakevqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace snakevqe::cli {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    }
    const double span = hi - lo;
    const double p = span > 0.0 ? 0.05 * span : std::max(0.5, 0.05 * std::abs(lo));
    lo -= p;
    hi += p;
  }
};

}  // namespace

std::string line_plot(const std::string& title, const std::string& x_label,
                      const std::string& y_label, const std::vector<Series>& series) {
  Range xr, yr;
  for (const auto& s : series) {
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  xr.pad();
  yr.pad();
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto sy = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
    << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" "
    << "font-family=\"sans-serif\" font-size=\"16\">" << escape(title) << "</text>\n"
    << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << num(pw)
    << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 5.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / 5.0;
    o << "<line x1=\"" << num(sx(fx)) << "\" y1=\"" << num(kTop + ph) << "\" x2=\""
      << num(sx(fx)) << "\" y2=\"" << num(kTop + ph + 5) << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << num(sx(fx)) << "\" y=\"" << num(kTop + ph + 20)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
      << tick(fx) << "</text>\n"
      << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(sy(fy)) << "\" x2=\""
      << kLeft << "\" y2=\"" << num(sy(fy)) << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(sy(fy) + 4)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << tick(fy) << "</text>\n";
  }
  o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 15)
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
    << escape(x_label) << "</text>\n"
    << "<text x=\"18\" y=\"" << num(kTop + ph / 2)
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
    << "transform=\"rotate(-90 18 " << num(kTop + ph / 2) << ")\">" << escape(y_label)
    << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* colour = kPalette[i % std::size(kPalette)];
    o << "<g class=\"series\" data-name=\"" << escape(s.name) << "\">\n";
    if (s.markers) {
      for (std::size_t j = 0; j < s.x.size() && j < s.y.size(); ++j) {
        if (!std::isfinite(s.x[j]) || !std::isfinite(s.y[j])) continue;
        o << "<circle cx=\"" << num(sx(s.x[j])) << "\" cy=\"" << num(sy(s.y[j]))
          << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
      }
    } else {
      o << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\"";
      if (s.dashed) o << " stroke-dasharray=\"5,4\"";
      o << " points=\"";
      for (std::size_t j = 0; j < s.x.size() && j < s.y.size(); ++j) {
        if (!std::isfinite(s.x[j]) || !std::isfinite(s.y[j])) continue;
        o << (j ? " " : "") << num(sx(s.x[j])) << ',' << num(sy(s.y[j]));
      }
      o << "\"/>\n";
    }
    const double ly = kTop + 14.0 + 18.0 * static_cast<double>(i);
    o << "<line x1=\"" << num(kLeft + pw + 12) << "\" y1=\"" << num(ly) << "\" x2=\""
      << num(kLeft + pw + 32) << "\" y2=\"" << num(ly) << "\" stroke=\"" << colour
      << "\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << num(kLeft + pw + 38) << "\" y=\"" << num(ly + 4)
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(s.name)
      << "</text>\n</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace snakevqe::cli
