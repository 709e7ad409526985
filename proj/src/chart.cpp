#include "jscc/chart.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace jscc {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct Point {
  double x;
  double y;
};

// A series is a list of runs; a run is an unbroken stretch of points.
struct Series {
  std::string label;
  std::vector<std::vector<Point>> runs;
};

struct Axis {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool log = false;

  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finalize() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (lo == hi) {
      const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
      lo -= pad;
      hi += pad;
    }
  }
  double map(double v, double from, double to) const { return from + (to - from) * (v - lo) / (hi - lo); }
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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

std::optional<double> plottable(const Cell& c, bool log) {
  const double* v = std::get_if<double>(&c);
  if (!v || !std::isfinite(*v)) return std::nullopt;
  if (log) {
    if (*v <= 0.0) return std::nullopt;
    return std::log10(*v);
  }
  return *v;
}

std::string group_label(const Cell& c) {
  if (const double* v = std::get_if<double>(&c)) return format_number(*v);
  if (const std::string* s = std::get_if<std::string>(&c)) return *s;
  return "";
}

std::vector<double> ticks(const Axis& a) {
  std::vector<double> out;
  if (a.log) {
    for (double d = std::ceil(a.lo); d <= std::floor(a.hi); d += 1.0) out.push_back(d);
    if (out.size() >= 2) return out;
    out.clear();
  }
  for (int i = 0; i <= 4; ++i) out.push_back(a.lo + (a.hi - a.lo) * i / 4.0);
  return out;
}

std::string tick_label(double v, bool log) { return log ? "1e" + num(v) : num(v); }

}  // namespace

std::string render_svg(const Table& table, const ChartSpec& spec) {
  const std::size_t xi = table.column_index(spec.x_column);
  std::vector<std::size_t> yis;
  for (const auto& y : spec.y_columns) yis.push_back(table.column_index(y));
  const std::optional<std::size_t> gi =
      spec.group_column ? std::optional{table.column_index(*spec.group_column)} : std::nullopt;

  // Group rows preserving first-appearance order.
  std::vector<std::string> group_order;
  std::map<std::string, std::vector<std::size_t>> group_rows;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const std::string key = gi ? group_label(table.rows[r][*gi]) : "";
    if (!group_rows.count(key)) group_order.push_back(key);
    group_rows[key].push_back(r);
  }

  Axis ax{.log = spec.log_x};
  Axis ay{.log = spec.log_y};
  std::vector<Series> series;
  for (const auto& key : group_order) {
    for (std::size_t k = 0; k < yis.size(); ++k) {
      Series s;
      s.label = spec.y_columns[k];
      if (gi) s.label += " (" + *spec.group_column + "=" + key + ")";
      std::vector<Point> run;
      for (std::size_t r : group_rows[key]) {
        const auto x = plottable(table.rows[r][xi], spec.log_x);
        const auto y = plottable(table.rows[r][yis[k]], spec.log_y);
        if (x && y) {
          run.push_back({*x, *y});
          ax.include(*x);
          ay.include(*y);
        } else if (!run.empty()) {
          s.runs.push_back(std::move(run));
          run.clear();
        }
      }
      if (!run.empty()) s.runs.push_back(std::move(run));
      series.push_back(std::move(s));
    }
  }
  ax.finalize();
  ay.finalize();

  const double x0 = kLeft;
  const double x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom;
  const double y1 = kTop;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!spec.title.empty())
    svg << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
        << escape(spec.title) << "</text>\n";
  svg << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\"" << y0 - y1
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (double t : ticks(ax)) {
    const double px = ax.map(t, x0, x1);
    svg << "<line x1=\"" << num(px) << "\" y1=\"" << y0 << "\" x2=\"" << num(px) << "\" y2=\"" << y0 + 5
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(px) << "\" y=\"" << y0 + 18 << "\" text-anchor=\"middle\">"
        << tick_label(t, ax.log) << "</text>\n";
  }
  for (double t : ticks(ay)) {
    const double py = ay.map(t, y0, y1);
    svg << "<line x1=\"" << x0 - 5 << "\" y1=\"" << num(py) << "\" x2=\"" << x0 << "\" y2=\"" << num(py)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << x0 - 8 << "\" y=\"" << num(py + 4) << "\" text-anchor=\"end\">"
        << tick_label(t, ay.log) << "</text>\n";
  }
  svg << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">"
      << escape(spec.x_column) << "</text>\n";
  const std::string y_title = spec.y_columns.size() == 1 ? spec.y_columns.front() : "value";
  svg << "<text x=\"18\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << (y0 + y1) / 2 << ")\">" << escape(y_title) << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    for (const auto& run : series[i].runs) {
      if (run.size() == 1) {
        svg << "<circle cx=\"" << num(ax.map(run[0].x, x0, x1)) << "\" cy=\"" << num(ay.map(run[0].y, y0, y1))
            << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        continue;
      }
      svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t p = 0; p < run.size(); ++p)
        svg << (p ? " " : "") << num(ax.map(run[p].x, x0, x1)) << ',' << num(ay.map(run[p].y, y0, y1));
      svg << "\"/>\n";
    }
    const double ly = y1 + 14.0 * static_cast<double>(i) + 8.0;
    svg << "<line x1=\"" << x1 + 10 << "\" y1=\"" << ly << "\" x2=\"" << x1 + 30 << "\" y2=\"" << ly
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << x1 + 34 << "\" y=\"" << ly + 4 << "\" font-size=\"10\">" << escape(series[i].label)
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_chart(const Table& table, const ChartSpec& spec, const std::filesystem::path& path) {
  const std::string svg = render_svg(table, spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open chart file '" + path.string() + "' for writing");
  out << svg;
  if (!out) throw std::runtime_error("failed writing chart file '" + path.string() + "'");
}

}  // namespace jscc
