#pragma once

// Tabular results with CSV and JSON renderings. Numbers are written with 12
// significant digits so identical inputs give byte-identical output.

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace jscc {

/// Empty (missing), numeric, or text cell.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Ordered metadata, rendered as "# key=value" lines in CSV and as the
  /// "meta" object in JSON.
  std::vector<std::pair<std::string, Cell>> meta;

  std::size_t column_index(const std::string& name) const;
  std::optional<double> number(std::size_t row, const std::string& column) const;
  void add_row(std::vector<Cell> row);
};

enum class Format { csv, json };

Format parse_format(const std::string& name);

/// "%.12g"; non-finite values render as "nan", "inf" or "-inf".
std::string format_number(double v);

/// Value a number takes after a write/read cycle.
double round_trip_number(double v);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);
std::string render(const Table& t, Format f);

/// Reads what to_csv writes: metadata lines, header, rows. Cells that parse
/// completely as numbers become numbers, empty cells become missing.
Table read_csv(std::istream& in);

}  // namespace jscc
