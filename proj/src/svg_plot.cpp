#include <algorithm>
#include <cmath>
#include <fstream>

#include "cvarn/experiments.hpp"

namespace cvarn {

namespace {

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
                               "#bcbd22", "#e377c2", "#393b79", "#637939"};

struct Frame {
  double x0, x1;      // data range, abscissa
  double e0, e1;      // data range, log10 of the error axis
  double left = 70, right = 20, top = 20, bottom = 45;
  double width = 760, height = 520;

  double px(double x) const {
    return left + (x - x0) / (x1 - x0 + (x1 == x0)) * (width - left - right);
  }
  double py(double log_err) const {
    return height - bottom -
           (log_err - e0) / (e1 - e0 + (e1 == e0)) * (height - top - bottom);
  }
};

}  // namespace

void emit_plot(const ResultTable& table, const std::string& path) {
  if (table.empty()) throw std::invalid_argument("emit_plot: empty table");
  if (table.columns.size() < 2)
    throw std::invalid_argument("emit_plot: need an abscissa and at least one series");

  // positive minimum over every series sets the clamp for zero entries
  double min_pos = 1.0, max_val = 0.0;
  for (const auto& row : table.rows)
    for (size_t i = 1; i < row.size(); ++i) {
      if (!std::isfinite(row[i]) || row[i] <= 0) continue;
      min_pos = std::min(min_pos, row[i]);
      max_val = std::max(max_val, row[i]);
    }
  if (max_val == 0.0) {
    min_pos = 1e-17;
    max_val = 1.0;
  }
  const double clamp = min_pos / 10;

  Frame fr;
  fr.x0 = fr.x1 = table.rows.front().at(0);
  for (const auto& row : table.rows) {
    fr.x0 = std::min(fr.x0, row[0]);
    fr.x1 = std::max(fr.x1, row[0]);
  }
  fr.e0 = std::floor(std::log10(clamp));
  fr.e1 = std::ceil(std::log10(max_val));
  if (fr.e1 <= fr.e0) fr.e1 = fr.e0 + 1;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_plot: cannot open " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fr.width << "\" height=\""
      << fr.height << "\" viewBox=\"0 0 " << fr.width << " " << fr.height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // frame and decade grid
  out << "<rect x=\"" << fr.left << "\" y=\"" << fr.top << "\" width=\""
      << fr.width - fr.left - fr.right << "\" height=\"" << fr.height - fr.top - fr.bottom
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  const int decades = static_cast<int>(fr.e1 - fr.e0);
  const int tick_step = std::max(1, decades / 8);
  for (int e = static_cast<int>(fr.e0); e <= static_cast<int>(fr.e1); e += tick_step) {
    const double y = fr.py(e);
    out << "<line x1=\"" << fr.left << "\" y1=\"" << y << "\" x2=\"" << fr.width - fr.right
        << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << fr.left - 6 << "\" y=\"" << y + 4
        << "\" font-size=\"12\" text-anchor=\"end\">1e" << e << "</text>\n";
  }
  for (int i = 0; i <= 6; ++i) {
    const double x = fr.x0 + (fr.x1 - fr.x0) * i / 6.0;
    out << "<text x=\"" << fr.px(x) << "\" y=\"" << fr.height - fr.bottom + 18
        << "\" font-size=\"12\" text-anchor=\"middle\">" << std::round(x) << "</text>\n";
  }
  out << "<text x=\"" << (fr.left + fr.width - fr.right) / 2 << "\" y=\""
      << fr.height - fr.bottom + 36 << "\" font-size=\"13\" text-anchor=\"middle\">"
      << table.columns[0] << "</text>\n";

  for (size_t col = 1; col < table.columns.size(); ++col) {
    const char* color = kSeriesColors[(col - 1) % std::size(kSeriesColors)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& row : table.rows) {
      double v = row[col];
      if (!std::isfinite(v)) continue;
      v = std::max(v, clamp);
      out << fr.px(row[0]) << "," << fr.py(std::log10(v)) << " ";
    }
    out << "\"/>\n";
    for (const auto& row : table.rows) {
      double v = row[col];
      if (!std::isfinite(v)) continue;
      v = std::max(v, clamp);
      out << "<circle cx=\"" << fr.px(row[0]) << "\" cy=\"" << fr.py(std::log10(v))
          << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }
    const double ly = fr.top + 16 * static_cast<double>(col);
    out << "<line x1=\"" << fr.width - fr.right - 170 << "\" y1=\"" << ly << "\" x2=\""
        << fr.width - fr.right - 150 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << fr.width - fr.right - 144 << "\" y=\"" << ly + 4
        << "\" font-size=\"11\">" << table.columns[col] << "</text>\n";
  }
  out << "</svg>\n";
  if (!out.good()) throw std::runtime_error("emit_plot: write failed for " + path);
}

}  // namespace cvarn
