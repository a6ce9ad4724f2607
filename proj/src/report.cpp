// Copyright 2026 The edgeplace Authors
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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "edgeplace/experiment.hpp"
#include "edgeplace/scenario_gen.hpp"

namespace edgeplace {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// Round-trip precision.
std::string full(double v) { return fmt("%.17g", v); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double to_double(const std::string& s, int line_no) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": \"" + s + "\" is not a number");
  }
  return v;
}

}  // namespace

void write_csv(const SweepResult& result, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const SweepRow& r : result.rows) {
    out << r.swept_param << ',' << full(r.swept_value) << ',' << r.replication << ',' << r.seed
        << ',' << r.algorithm << ',' << r.status << ',' << full(r.objective_total) << ','
        << full(r.placement_cost) << ',' << full(r.scheduling_cost) << ','
        << full(r.drop_fraction) << ',' << fmt("%.3f", r.runtime_ms) << '\n';
  }
}

SweepResult read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw ParseError("unexpected CSV header");
  SweepResult result;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 11) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 11 fields");
    }
    SweepRow r;
    r.swept_param = f[0];
    r.swept_value = to_double(f[1], line_no);
    r.replication = static_cast<int>(to_double(f[2], line_no));
    try {
      r.seed = std::stoull(f[3]);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": bad seed");
    }
    r.algorithm = f[4];
    r.status = f[5];
    r.objective_total = to_double(f[6], line_no);
    r.placement_cost = to_double(f[7], line_no);
    r.scheduling_cost = to_double(f[8], line_no);
    r.drop_fraction = to_double(f[9], line_no);
    r.runtime_ms = to_double(f[10], line_no);
    result.rows.push_back(std::move(r));
  }
  return result;
}

void write_summary_csv(const std::vector<SummaryRow>& summary, std::ostream& out) {
  out << "swept_value,algorithm,mean_objective,mean_drop_fraction,mean_runtime_ms,included,"
         "excluded\n";
  for (const SummaryRow& s : summary) {
    out << full(s.swept_value) << ',' << s.algorithm << ',' << full(s.mean_objective) << ','
        << full(s.mean_drop_fraction) << ',' << fmt("%.3f", s.mean_runtime_ms) << ','
        << s.included << ',' << s.excluded << '\n';
  }
}

void write_svg(const std::vector<SummaryRow>& summary, const std::string& swept_param,
               PlotMetric metric, std::ostream& out) {
  constexpr double kWidth = 640, kHeight = 420, kLeft = 70, kRight = 150, kTop = 30, kBottom = 60;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd"};

  const auto value_of = [metric](const SummaryRow& s) {
    return metric == PlotMetric::kObjective ? s.mean_objective : s.mean_drop_fraction;
  };
  std::vector<std::string> algorithms;
  double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
  for (const SummaryRow& s : summary) {
    if (std::find(algorithms.begin(), algorithms.end(), s.algorithm) == algorithms.end()) {
      algorithms.push_back(s.algorithm);
    }
    const double y = value_of(s);
    if (std::isnan(y)) continue;
    x_lo = std::min(x_lo, s.swept_value);
    x_hi = std::max(x_hi, s.swept_value);
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  }
  if (!(x_lo < x_hi)) {
    x_lo -= 1.0;
    x_hi += 1.0;
  }
  if (!(y_lo < y_hi)) {
    y_lo -= 1.0;
    y_hi += 1.0;
  }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  const auto py = [&](double y) { return kTop + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h; };
  const std::string y_label = metric == PlotMetric::kObjective ? "mean objective" : "mean drop fraction";

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + plot_h << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\">" << swept_param << "</text>\n";
  out << "<text x=\"15\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
      << kTop + plot_h / 2 << ")\">" << y_label << "</text>\n";
  out << "<text x=\"" << kLeft << "\" y=\"" << kTop + plot_h + 18 << "\">" << fmt("%g", x_lo)
      << "</text>\n";
  out << "<text x=\"" << kLeft + plot_w << "\" y=\"" << kTop + plot_h + 18
      << "\" text-anchor=\"end\">" << fmt("%g", x_hi) << "</text>\n";
  out << "<text x=\"" << kLeft - 5 << "\" y=\"" << kTop + plot_h << "\" text-anchor=\"end\">"
      << fmt("%.4g", y_lo) << "</text>\n";
  out << "<text x=\"" << kLeft - 5 << "\" y=\"" << kTop + 10 << "\" text-anchor=\"end\">"
      << fmt("%.4g", y_hi) << "</text>\n";

  for (std::size_t a = 0; a < algorithms.size(); ++a) {
    const char* color = kColors[a % 5];
    std::ostringstream points;
    for (const SummaryRow& s : summary) {
      if (s.algorithm != algorithms[a] || std::isnan(value_of(s))) continue;
      points << fmt("%.2f", px(s.swept_value)) << ',' << fmt("%.2f", py(value_of(s))) << ' ';
    }
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\""
        << points.str() << "\"/>\n";
    const double ly = kTop + 20.0 * static_cast<double>(a) + 10.0;
    out << "<line x1=\"" << kWidth - kRight + 15 << "\" y1=\"" << ly << "\" x2=\""
        << kWidth - kRight + 40 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kWidth - kRight + 45 << "\" y=\"" << ly + 4 << "\">" << algorithms[a]
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace edgeplace
