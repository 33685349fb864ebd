#include <cstdio>
#include <fstream>
#include <sstream>

#include "cvarn/experiments.hpp"

namespace cvarn {

Index ResultTable::col_index(const std::string& name) const {
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<Index>(i);
  throw std::out_of_range("ResultTable: no column named " + name);
}

std::vector<double> ResultTable::column(const std::string& name) const {
  const auto idx = static_cast<size_t>(col_index(name));
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.at(idx));
  return out;
}

void write_csv(const ResultTable& table, std::ostream& out) {
  for (size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << "\n";
  char buf[64];
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::invalid_argument("write_csv: row width != column count");
    for (size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      out << (i ? "," : "") << buf;
    }
    out << "\n";
  }
}

void write_csv(const ResultTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  write_csv(table, out);
  if (!out.good()) throw std::runtime_error("write_csv: write failed for " + path);
}

ResultTable read_csv(std::istream& in) {
  ResultTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty input");
  std::stringstream header(line);
  for (std::string cell; std::getline(header, cell, ',');) table.columns.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row_in(line);
    std::vector<double> row;
    for (std::string cell; std::getline(row_in, cell, ',');) row.push_back(std::stod(cell));
    if (row.size() != table.columns.size())
      throw std::runtime_error("read_csv: ragged row");
    table.rows.push_back(std::move(row));
  }
  return table;
}

ResultTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path);
  return read_csv(in);
}

}  // namespace cvarn
