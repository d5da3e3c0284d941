#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asms/matrix.hpp"

namespace asms {

/// A k x k window with 1-based inclusive row and column ranges.
struct SubsquareWindow {
  int k = 0;
  int row_first = 0;
  int row_last = 0;
  int col_first = 0;
  int col_last = 0;

  friend bool operator==(const SubsquareWindow&, const SubsquareWindow&) = default;
};

std::string to_string(const SubsquareWindow& w);

/// Where the construction puts its GMS(k), 3 <= k <= n-2:
///   k = 3     rows/cols [3w-5, 3w-3]   (w = n/3)
///   k = 4     rows [1,4] x cols [8,11]
///   k = n-3   rows/cols [1, n-3]
///   otherwise by k mod 3: 0 -> [7, 6+k], 1 -> [3, 2+k], 2 -> [5, 4+k].
/// Throws OrderOutOfRange for k outside [3, n-2] or an unsupported n.
SubsquareWindow subsquare_window(int n, int k);

/// Copies the window out of `mat`.
IntMatrix window_entries(const IntMatrix& mat, const SubsquareWindow& w);

struct GmsResult {
  bool pass = false;               ///< all line sums equal
  std::optional<Entry> common_sum; ///< set when pass
  std::vector<Entry> row_sums;
  std::vector<Entry> col_sums;
  Entry main_diagonal = 0;
  Entry back_diagonal = 0;
  bool distinct = true;            ///< entries pairwise distinct (reported separately)
};

/// General magic square test: every row, column, the main diagonal and
/// the back diagonal share one sum.
GmsResult is_gms(const IntMatrix& window);

enum class SquareForm { kCentered, kClassic, kUnknown };

const char* to_string(SquareForm form);

enum class Severity { kError, kWarning };

struct Check {
  std::string kind;  ///< structure, entries, row, column, main_diagonal, back_diagonal, subsquare, subsquare_distinct
  std::optional<int> index;   ///< 1-based row/column for row/column checks
  std::optional<int> k;
  std::optional<SubsquareWindow> window;
  std::optional<Entry> expected;  ///< target sum, when the check compares a sum
  std::optional<Entry> actual;
  std::string detail;
  bool pass = false;
  Severity severity = Severity::kError;
};

struct VerificationReport {
  int n = 0;
  SquareForm form = SquareForm::kUnknown;
  std::optional<Entry> magic_constant;
  bool structural_error = false;
  bool is_magic_square = false;
  bool subsquares_checked = false;
  std::vector<Check> checks;
  bool verdict = false;

  std::vector<const Check*> failures() const;
  /// `{n, form, magic_constant, checks: [...], verdict}`
  std::string to_json() const;
};

/// Runs every check without short-circuiting: entry range (auto-detecting
/// centered [-lambda, lambda] or classic [1, n^2]), each row and column,
/// both diagonals, and, when n = 18u +- 3 >= 21, the GMS(k) window for
/// every k in [3, n-2]. Non-square input is a structural failure.
VerificationReport verify_asms(const IntMatrix& mat);

/// Largest n scan_all_gms accepts unless told otherwise.
inline constexpr int kMaxScanOrder = 45;

/// Every contiguous k x k window of `mat` that passes is_gms with distinct
/// entries, in row-major order of the top-left corner. Throws
/// OracleScaleExceeded when n > kMaxScanOrder and `allow_large` is false.
std::vector<SubsquareWindow> scan_all_gms(const IntMatrix& mat, int k, bool allow_large = false);

}  // namespace asms
