#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qwalk {

inline constexpr const char* kSolverVersion = "1.0.0";

enum class ColumnKind { Integer, Real };

struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::Real;
};

// Rectangular table with named columns, row-major values and an ordered
// key/value metadata block. Integer columns hold exactly representable values.
class ResultTable {
 public:
  explicit ResultTable(std::vector<Column> columns);

  const std::vector<Column>& columns() const noexcept { return columns_; }
  std::size_t rows() const noexcept { return columns_.empty() ? 0 : data_.size() / columns_.size(); }
  double at(std::size_t row, std::size_t column) const { return data_.at(row * columns_.size() + column); }

  // Throws Config on a width mismatch or a non-finite entry.
  void add_row(const std::vector<double>& values);

  void set_metadata(const std::string& key, const std::string& value);
  const std::vector<std::pair<std::string, std::string>>& metadata() const noexcept { return metadata_; }
  const std::string* find_metadata(const std::string& key) const noexcept;

 private:
  std::vector<Column> columns_;
  std::vector<double> data_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

// Decimal text with 17 significant digits (round-trips every double).
std::string format_real(double value);

// CSV text: '# key=value' metadata lines, header row, data rows, LF endings.
std::string to_csv(const ResultTable& table);

// Writes to_csv(table) to `path`, or to stdout when path is "-". Throws Io.
void emit_csv(const ResultTable& table, const std::string& path);

}  // namespace qwalk
