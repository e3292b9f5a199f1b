#include "moshinsky/sweep_table.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace moshinsky {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::string format_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

SweepTable::SweepTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw std::invalid_argument("SweepTable: empty header");
}

void SweepTable::add_row(std::vector<double> row) {
  if (row.size() != header_.size()) {
    throw std::invalid_argument("SweepTable: row arity does not match header");
  }
  if (!rows_.empty() && !(row.front() > rows_.back().front())) {
    throw std::invalid_argument("SweepTable: sweep parameter must be strictly increasing");
  }
  rows_.push_back(std::move(row));
}

std::size_t SweepTable::column_index(const std::string& name) const {
  const auto it = std::find(header_.begin(), header_.end(), name);
  if (it == header_.end()) throw std::out_of_range("SweepTable: no column " + name);
  return static_cast<std::size_t>(it - header_.begin());
}

std::vector<double> SweepTable::column(const std::string& name) const {
  const auto index = column_index(name);
  std::vector<double> values;
  values.reserve(rows_.size());
  for (const auto& row : rows_) values.push_back(row[index]);
  return values;
}

void SweepTable::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < header_.size(); ++i) out << (i ? "," : "") << header_[i];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_real(row[i]);
    out << '\n';
  }
}

std::string SweepTable::to_csv() const {
  std::ostringstream out;
  write_csv(out);
  return out.str();
}

SweepTable SweepTable::parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("CSV: missing header line");
  SweepTable table(split(line));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& field : split(line)) {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(field, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != field.size()) throw std::runtime_error("CSV: bad number '" + field + "'");
      row.push_back(value);
    }
    table.add_row(std::move(row));
  }
  return table;
}

SweepTable SweepTable::parse_csv(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

}  // namespace moshinsky
