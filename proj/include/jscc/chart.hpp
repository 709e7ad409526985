#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jscc/table.hpp"

namespace jscc {

struct ChartSpec {
  std::string x_column;
  std::vector<std::string> y_columns;
  /// Rows are split into one series per distinct value of this column.
  std::optional<std::string> group_column;
  bool log_x = false;
  bool log_y = false;
  std::string title;
};

/// Standalone SVG line chart: one polyline per (group, y column). Missing or
/// non-plottable values break the line; isolated points get a marker.
std::string render_svg(const Table& table, const ChartSpec& spec);

/// Writes render_svg to `path`. Throws std::runtime_error naming the path on
/// I/O failure.
void emit_chart(const Table& table, const ChartSpec& spec, const std::filesystem::path& path);

}  // namespace jscc
