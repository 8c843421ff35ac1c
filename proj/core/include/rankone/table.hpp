#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankone {

/// Numeric table written as CSV with a leading `#` metadata line.
struct Table {
  std::string comment;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
};

/// Shortest decimal form that parses back to the same double; `nan`/`inf` for
/// non-finite values.
std::string format_double(double v);

void write_csv(std::ostream& out, const Table& table);
/// Throws ValidationError on malformed input.
Table read_csv(std::istream& in);

std::string to_json(const Table& table);

/// Bitwise equality of two tables (NaN equals NaN).
bool same_table(const Table& a, const Table& b);

}  // namespace rankone
