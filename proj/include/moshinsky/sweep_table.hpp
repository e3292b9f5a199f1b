#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moshinsky {

/// Columnar numeric table. The first column is the sweep parameter and must
/// be strictly increasing; every row has one value per header entry.
class SweepTable {
 public:
  SweepTable() = default;
  explicit SweepTable(std::vector<std::string> header);

  void add_row(std::vector<double> row);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  std::size_t column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;

  /// Header line, then one line per row; reals use 12 significant digits.
  void write_csv(std::ostream& out) const;
  std::string to_csv() const;
  static SweepTable parse_csv(std::istream& in);
  static SweepTable parse_csv(const std::string& text);

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

/// Shortest "%.12g" rendering used for every CSV cell.
std::string format_real(double value);

}  // namespace moshinsky
