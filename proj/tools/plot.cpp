#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "dfw/errors.hpp"
#include "dfw/text_io.hpp"
#include "dfw_cli.hpp"

namespace dfw::cli {
namespace {

constexpr std::array<const char*, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c",
                                                "#9467bd", "#ff7f0e", "#17becf"};

std::string fixed(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

std::string tick(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 4);
  return std::string(buf, res.ptr);
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

Range padded(double lo, double hi) {
  if (!(hi > lo)) {
    const double d = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
    return {lo - d, hi + d};
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

}  // namespace

void write_svg_plot(std::ostream& out, std::istream& csv, const PlotOptions& options) {
  const CsvTable table = read_csv(csv);
  if (table.header.size() < 2) throw ConfigError("plot needs at least two CSV columns");
  const std::size_t xc = options.x_column.empty() ? 0 : table.column(options.x_column);
  std::vector<std::size_t> ycols;
  if (options.y_columns.empty()) {
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      if (c != xc) ycols.push_back(c);
    }
  } else {
    for (const auto& name : options.y_columns) ycols.push_back(table.column(name));
  }
  if (options.width < 100 || options.height < 100) throw ConfigError("plot size must be >= 100 px");

  double xlo = INFINITY, xhi = -INFINITY, ylo = INFINITY, yhi = -INFINITY;
  for (const auto& row : table.rows) {
    if (!std::isfinite(row[xc])) continue;
    xlo = std::min(xlo, row[xc]);
    xhi = std::max(xhi, row[xc]);
    for (std::size_t c : ycols) {
      if (!std::isfinite(row[c])) continue;
      ylo = std::min(ylo, row[c]);
      yhi = std::max(yhi, row[c]);
    }
  }
  if (!std::isfinite(xlo) || !std::isfinite(ylo)) throw ConfigError("plot input has no finite data");
  const Range xr = padded(xlo, xhi);
  const Range yr = padded(ylo, yhi);

  const double left = 70, right = 20, top = 40, bottom = 50;
  const double pw = options.width - left - right;
  const double ph = options.height - top - bottom;
  auto sx = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto sy = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\"" << fixed(pw)
      << "\" height=\"" << fixed(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (!options.title.empty()) {
    out << "<text x=\"" << fixed(options.width / 2.0) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"14\">" << escape(options.title) << "</text>\n";
  }
  for (int t = 0; t <= 4; ++t) {
    const double fx = xr.lo + (xr.hi - xr.lo) * t / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * t / 4.0;
    out << "<text x=\"" << fixed(sx(fx)) << "\" y=\"" << fixed(top + ph + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
        << tick(fx) << "</text>\n";
    out << "<text x=\"" << fixed(left - 6) << "\" y=\"" << fixed(sy(fy) + 3)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
        << tick(fy) << "</text>\n";
  }
  out << "<text x=\"" << fixed(left + pw / 2) << "\" y=\"" << fixed(options.height - 10.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
      << escape(table.header[xc]) << "</text>\n";

  for (std::size_t k = 0; k < ycols.size(); ++k) {
    const char* color = kColors[k % kColors.size()];
    const std::size_t c = ycols[k];
    if (options.scatter) {
      for (const auto& row : table.rows) {
        if (!std::isfinite(row[xc]) || !std::isfinite(row[c])) continue;
        out << "<circle cx=\"" << fixed(sx(row[xc])) << "\" cy=\"" << fixed(sy(row[c]))
            << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
      }
    } else {
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      bool first = true;
      for (const auto& row : table.rows) {
        if (!std::isfinite(row[xc]) || !std::isfinite(row[c])) continue;
        out << (first ? "" : " ") << fixed(sx(row[xc])) << ',' << fixed(sy(row[c]));
        first = false;
      }
      out << "\"/>\n";
    }
    out << "<text x=\"" << fixed(left + 8) << "\" y=\"" << fixed(top + 14 + 14.0 * k)
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << color << "\">"
        << escape(table.header[c]) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace dfw::cli
