#include "qwalk/table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>

#include "qwalk/error.hpp"

namespace qwalk {

ResultTable::ResultTable(std::vector<Column> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw Error(ErrorKind::Config, "ResultTable needs at least one column");
}

void ResultTable::add_row(const std::vector<double>& values) {
  if (values.size() != columns_.size()) {
    throw Error(ErrorKind::Config, "ResultTable: row has " + std::to_string(values.size()) + " values, expected " +
                                       std::to_string(columns_.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorKind::Config, "ResultTable: non-finite value in column " + columns_[i].name);
    }
  }
  data_.insert(data_.end(), values.begin(), values.end());
}

void ResultTable::set_metadata(const std::string& key, const std::string& value) {
  for (auto& [k, v] : metadata_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  metadata_.emplace_back(key, value);
}

const std::string* ResultTable::find_metadata(const std::string& key) const noexcept {
  for (const auto& [k, v] : metadata_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string format_real(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return {buf, res.ptr};
}

namespace {

std::string format_integer(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, static_cast<long long>(std::llround(value)));
  return {buf, res.ptr};
}

}  // namespace

std::string to_csv(const ResultTable& table) {
  std::string out;
  for (const auto& [k, v] : table.metadata()) out += "# " + k + "=" + v + "\n";
  const auto& cols = table.columns();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (j) out += ',';
    out += cols[j].name;
  }
  out += '\n';
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j) out += ',';
      const double v = table.at(i, j);
      out += cols[j].kind == ColumnKind::Integer ? format_integer(v) : format_real(v);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const ResultTable& table, const std::string& path) {
  const std::string text = to_csv(table);
  if (path == "-") {
    std::cout.write(text.data(), static_cast<std::streamsize>(text.size()));
    std::cout.flush();
    if (!std::cout) throw Error(ErrorKind::Io, "failed writing CSV to stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.close();
  if (!file) throw Error(ErrorKind::Io, "failed writing " + path);
}

}  // namespace qwalk
