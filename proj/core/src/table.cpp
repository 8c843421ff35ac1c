#include "rankone/table.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "rankone/error.hpp"

namespace rankone {

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) throw ValidationError("row width does not match the header");
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const Table& table) {
  if (!table.comment.empty()) out << "# " << table.comment << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

Table read_csv(std::istream& in) {
  Table table;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!header && line[0] == '#') {
      table.comment = line.size() > 2 ? line.substr(2) : std::string{};
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!header) {
      table.columns = std::move(cells);
      header = true;
      continue;
    }
    if (cells.size() != table.columns.size()) throw ValidationError("CSV row width mismatch");
    std::vector<double> row;
    for (const auto& c : cells) {
      double v = 0.0;
      const auto res = std::from_chars(c.data(), c.data() + c.size(), v);
      if (res.ec != std::errc{} || res.ptr != c.data() + c.size()) {
        throw ValidationError("invalid CSV number '" + c + "'");
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (!header) throw ValidationError("CSV has no header row");
  return table;
}

std::string to_json(const Table& table) {
  nlohmann::json doc;
  doc["comment"] = table.comment;
  doc["columns"] = table.columns;
  auto rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    auto r = nlohmann::json::array();
    for (double v : row) {
      if (std::isfinite(v)) {
        r.push_back(v);
      } else {
        r.push_back(nullptr);
      }
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2);
}

bool same_table(const Table& a, const Table& b) {
  if (a.comment != b.comment || a.columns != b.columns || a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].size() != b.rows[i].size()) return false;
    if (std::memcmp(a.rows[i].data(), b.rows[i].data(), a.rows[i].size() * sizeof(double)) != 0) {
      // memcmp distinguishes NaN payloads; accept any NaN pair.
      for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
        const double x = a.rows[i][j];
        const double y = b.rows[i][j];
        if (std::isnan(x) && std::isnan(y)) continue;
        if (std::memcmp(&x, &y, sizeof(double)) != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace rankone
