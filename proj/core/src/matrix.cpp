#include "asms/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "asms/error.hpp"

namespace asms {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::sub(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
  if (r0 + h > rows_ || c0 + w > cols_) throw std::out_of_range("IntMatrix::sub");
  IntMatrix out(h, w);
  for (std::size_t r = 0; r < h; ++r)
    for (std::size_t c = 0; c < w; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void IntMatrix::paste(std::size_t r0, std::size_t c0, const IntMatrix& src) {
  if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
    throw std::out_of_range("IntMatrix::paste");
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) (*this)(r0 + r, c0 + c) = src(r, c);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

IntMatrix IntMatrix::shifted(Entry delta) const {
  IntMatrix out = *this;
  for (auto& v : out.data_) v += delta;
  return out;
}

std::vector<Entry> IntMatrix::row_sums() const {
  std::vector<Entry> sums(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) sums[r] += (*this)(r, c);
  return sums;
}

std::vector<Entry> IntMatrix::col_sums() const {
  std::vector<Entry> sums(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) sums[c] += (*this)(r, c);
  return sums;
}

Entry IntMatrix::main_diagonal_sum() const {
  Entry s = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

Entry IntMatrix::back_diagonal_sum() const {
  Entry s = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, cols_ - 1 - i);
  return s;
}

std::vector<Entry> IntMatrix::sorted_values() const {
  std::vector<Entry> v = data_;
  std::sort(v.begin(), v.end());
  return v;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os;
}

bool is_qmr_star(const IntMatrix& mat) {
  const auto zero = [](const std::vector<Entry>& v) {
    return std::all_of(v.begin(), v.end(), [](Entry e) { return e == 0; });
  };
  return zero(mat.row_sums()) && zero(mat.col_sums());
}

std::string to_csv(const IntMatrix& mat) {
  std::ostringstream os;
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    for (std::size_t c = 0; c < mat.cols(); ++c) os << (c ? "," : "") << mat(r, c);
    os << '\n';
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

IntMatrix parse_csv(const std::string& text) {
  std::vector<std::vector<Entry>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = trim(line);
    if (rest.empty()) continue;
    std::vector<Entry> row;
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view cell = trim(rest.substr(0, comma));
      Entry v = 0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size())
        throw ParseError("line " + std::to_string(line_no) + ": not an integer: '" +
                         std::string(cell) + "'");
      row.push_back(v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("line " + std::to_string(line_no) + ": ragged row (" +
                       std::to_string(row.size()) + " cells, expected " +
                       std::to_string(rows.front().size()) + ")");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  IntMatrix out(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) out(r, c) = rows[r][c];
  return out;
}

std::string to_json(const IntMatrix& mat, const std::string& form) {
  nlohmann::ordered_json j;
  j["n"] = mat.rows();
  j["form"] = form;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    const auto row = mat.row(r);
    rows.push_back(std::vector<Entry>(row.begin(), row.end()));
  }
  j["rows"] = std::move(rows);
  return j.dump() + "\n";
}

IntMatrix parse_json_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
    throw ParseError("JSON matrix needs a non-empty \"rows\" array");
  const auto& rows = j["rows"];
  const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
  IntMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != cols)
      throw ParseError("ragged row " + std::to_string(r + 1) + " in JSON matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!rows[r][c].is_number_integer())
        throw ParseError("non-integer cell at row " + std::to_string(r + 1));
      out(r, c) = rows[r][c].get<Entry>();
    }
  }
  return out;
}

}  // namespace asms
