#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace asms {

using Entry = std::int64_t;

/// Dense row-major integer matrix. Indices are 0-based; the domain code
/// converts from the 1-based row/column numbers used in reports.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Entry fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Entry& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Entry operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Entry> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Entry> values() const { return data_; }

  /// Copy of the h x w sub-matrix whose top-left corner is (r0, c0).
  IntMatrix sub(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;
  /// Writes `src` with its top-left corner at (r0, c0).
  void paste(std::size_t r0, std::size_t c0, const IntMatrix& src);

  IntMatrix transposed() const;
  IntMatrix negated() const;
  IntMatrix shifted(Entry delta) const;

  std::vector<Entry> row_sums() const;
  std::vector<Entry> col_sums() const;
  /// Sum of a(i, i) for a square matrix.
  Entry main_diagonal_sum() const;
  /// Sum of a(i, n-1-i) for a square matrix.
  Entry back_diagonal_sum() const;

  /// All entries, sorted ascending.
  std::vector<Entry> sorted_values() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// True iff every row and every column sums to zero (QMR*).
bool is_qmr_star(const IntMatrix& mat);

/// One line per row, comma-separated signed integers.
std::string to_csv(const IntMatrix& mat);
/// Parses CSV written by to_csv. Blank lines are skipped; ragged rows
/// or non-integer cells raise ParseError.
IntMatrix parse_csv(const std::string& text);

/// `{"n": N, "form": <form>, "rows": [[...], ...]}`
std::string to_json(const IntMatrix& mat, const std::string& form);
/// Reads the "rows" array of a document written by to_json.
IntMatrix parse_json_matrix(const std::string& text);

}  // namespace asms
