#include "lflow/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace lflow::cli {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

void write_trace_csv(std::ostream& out, std::span<const DiagnosticsRecord> trace) {
  out << kTraceHeader << '\n';
  for (const DiagnosticsRecord& r : trace) {
    const std::array<double, 12> row = {r.t,         r.grad_sup,   r.ut_min,     r.ut_max,
                                        r.u_min,     r.u_max,      r.energy_ut,  r.energy_vtx,
                                        r.speed_mean, r.speed_dev, r.curvature_max, r.profile_dist};
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
}

void write_columns_csv(std::ostream& out, const std::string& x_name, const std::string& y_name,
                       std::span<const double> xs, std::span<const double> ys) {
  out << x_name << ',' << y_name << '\n';
  const std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i) {
    out << format_double(xs[i]) << ',' << format_double(ys[i]) << '\n';
  }
}

namespace {

std::string polyline(std::span<const double> xs, std::span<const double> ys, double x0,
                     double x1, double y0, double y1, double left, double top, double width,
                     double height) {
  std::ostringstream os;
  os.precision(6);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double px = left + (xs[i] - x0) / (x1 - x0) * width;
    const double py = top + height - (ys[i] - y0) / (y1 - y0) * height;
    if (i > 0) os << ' ';
    os << std::fixed << px << ',' << py;
  }
  return os.str();
}

}  // namespace

void write_profile_svg(std::ostream& out, const Grid& grid, std::span<const double> u,
                       const TranslatorProfile& translator, const std::string& title) {
  const std::vector<double> xs = grid.coordinates();
  std::vector<double> shifted(u.begin(), u.end());
  normalize_mean_zero(shifted, grid);

  double lo = std::min(*std::min_element(shifted.begin(), shifted.end()),
                       *std::min_element(translator.samples.begin(), translator.samples.end()));
  double hi = std::max(*std::max_element(shifted.begin(), shifted.end()),
                       *std::max_element(translator.samples.begin(), translator.samples.end()));
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  constexpr double kWidth = 640, kHeight = 400, kLeft = 60, kTop = 40;
  constexpr double kPlotW = 540, kPlotH = 300;
  const double d = grid.half_width();

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"14\">" << title << "</text>\n"
      << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kPlotW << "\" height=\""
      << kPlotH << "\" fill=\"none\" stroke=\"black\"/>\n";
  // Axis labels at the corners of the box.
  out << "<text x=\"" << kLeft << "\" y=\"" << kTop + kPlotH + 18
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << format_double(-d) << "</text>\n"
      << "<text x=\"" << kLeft + kPlotW << "\" y=\"" << kTop + kPlotH + 18
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << format_double(d)
      << "</text>\n"
      << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + 10
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << format_double(hi) << "</text>\n"
      << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + kPlotH
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << format_double(lo) << "</text>\n"
      << "<text x=\"" << kLeft + kPlotW / 2 << "\" y=\"" << kTop + kPlotH + 30
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">x</text>\n";
  out << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\" stroke-opacity=\"0.6\" points=\""
      << polyline(xs, translator.samples, -d, d, lo, hi, kLeft, kTop, kPlotW, kPlotH) << "\"/>\n";
  out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\""
      << polyline(xs, shifted, -d, d, lo, hi, kLeft, kTop, kPlotW, kPlotH) << "\"/>\n";
  // Legend.
  out << "<line x1=\"" << kLeft + 10 << "\" y1=\"" << kTop + 14 << "\" x2=\"" << kLeft + 40
      << "\" y2=\"" << kTop + 14 << "\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n"
      << "<text x=\"" << kLeft + 46 << "\" y=\"" << kTop + 18
      << "\" font-family=\"sans-serif\" font-size=\"11\">u(x, t) - mean</text>\n"
      << "<line x1=\"" << kLeft + 10 << "\" y1=\"" << kTop + 32 << "\" x2=\"" << kLeft + 40
      << "\" y2=\"" << kTop + 32 << "\" stroke=\"#d62728\" stroke-width=\"3\" stroke-opacity=\"0.6\"/>\n"
      << "<text x=\"" << kLeft + 46 << "\" y=\"" << kTop + 36
      << "\" font-family=\"sans-serif\" font-size=\"11\">translator (" << to_string(translator.kind)
      << ")</text>\n";
  out << "</svg>\n";
}

}  // namespace lflow::cli
