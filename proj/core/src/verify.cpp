#include "asms/verify.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "asms/error.hpp"

namespace asms {

namespace {

bool supported_order(int n) { return n >= 21 && (n % 18 == 3 || n % 18 == 15); }

std::string join(const std::vector<Entry>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

std::string to_string(const SubsquareWindow& w) {
  return "rows [" + std::to_string(w.row_first) + "," + std::to_string(w.row_last) + "] x cols [" +
         std::to_string(w.col_first) + "," + std::to_string(w.col_last) + "]";
}

SubsquareWindow subsquare_window(int n, int k) {
  if (!supported_order(n))
    throw OrderOutOfRange("subsquare windows are defined for n ≡ ±3 (mod 18), n ≥ 21 (got " +
                          std::to_string(n) + ")");
  if (k < 3 || k > n - 2)
    throw OrderOutOfRange("k=" + std::to_string(k) + " outside [3, " + std::to_string(n - 2) + "]");
  const auto square = [k](int first) { return SubsquareWindow{k, first, first + k - 1, first, first + k - 1}; };
  if (k == 3) return square(n - 5);  // block (w-1, w-1)
  if (k == 4) return {4, 1, 4, 8, 11};
  if (k == n - 3) return square(1);
  switch (k % 3) {
    case 0: return square(7);
    case 1: return square(3);
    default: return square(5);
  }
}

IntMatrix window_entries(const IntMatrix& mat, const SubsquareWindow& w) {
  return mat.sub(static_cast<std::size_t>(w.row_first - 1), static_cast<std::size_t>(w.col_first - 1),
                 static_cast<std::size_t>(w.row_last - w.row_first + 1),
                 static_cast<std::size_t>(w.col_last - w.col_first + 1));
}

GmsResult is_gms(const IntMatrix& window) {
  GmsResult r;
  if (!window.is_square() || window.empty()) return r;
  r.row_sums = window.row_sums();
  r.col_sums = window.col_sums();
  r.main_diagonal = window.main_diagonal_sum();
  r.back_diagonal = window.back_diagonal_sum();
  const auto sorted = window.sorted_values();
  r.distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  const Entry target = r.row_sums.front();
  const auto eq = [target](Entry v) { return v == target; };
  r.pass = std::all_of(r.row_sums.begin(), r.row_sums.end(), eq) &&
           std::all_of(r.col_sums.begin(), r.col_sums.end(), eq) && r.main_diagonal == target &&
           r.back_diagonal == target;
  if (r.pass) r.common_sum = target;
  return r;
}

const char* to_string(SquareForm form) {
  switch (form) {
    case SquareForm::kCentered: return "centered";
    case SquareForm::kClassic: return "classic";
    case SquareForm::kUnknown: return "unknown";
  }
  return "unknown";
}

std::vector<const Check*> VerificationReport::failures() const {
  std::vector<const Check*> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(&c);
  return out;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["form"] = to_string(form);
  j["magic_constant"] = magic_constant ? nlohmann::ordered_json(*magic_constant) : nlohmann::ordered_json();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["kind"] = c.kind;
    if (c.index) cj["index"] = *c.index;
    if (c.k) cj["k"] = *c.k;
    if (c.window)
      cj["window"] = {{"rows", {c.window->row_first, c.window->row_last}},
                      {"cols", {c.window->col_first, c.window->col_last}}};
    cj["expected"] = c.expected ? nlohmann::ordered_json(*c.expected) : nlohmann::ordered_json();
    cj["actual"] = c.actual ? nlohmann::ordered_json(*c.actual) : nlohmann::ordered_json();
    if (!c.detail.empty()) cj["detail"] = c.detail;
    cj["pass"] = c.pass;
    cj["severity"] = c.severity == Severity::kError ? "error" : "warning";
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  j["verdict"] = verdict ? "pass" : "fail";
  return j.dump(2);
}

VerificationReport verify_asms(const IntMatrix& mat) {
  VerificationReport rep;
  rep.n = static_cast<int>(mat.rows());

  if (mat.empty() || !mat.is_square()) {
    Check c;
    c.kind = "structure";
    c.detail = "matrix is " + std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) + ", not square";
    rep.checks.push_back(std::move(c));
    rep.structural_error = true;
    return rep;
  }
  const int n = rep.n;
  const Entry nn = static_cast<Entry>(n) * n;

  // Entry set: n^2 consecutive integers starting at -lambda or 1.
  const auto values = mat.sorted_values();
  if (n % 2 == 1 && values.front() == -(nn - 1) / 2) rep.form = SquareForm::kCentered;
  else if (values.front() == 1) rep.form = SquareForm::kClassic;
  {
    Check c;
    c.kind = "entries";
    const Entry first = rep.form == SquareForm::kCentered ? -(nn - 1) / 2 : 1;
    c.detail = "expected [" + std::to_string(first) + ", " + std::to_string(first + nn - 1) + "]";
    c.pass = rep.form != SquareForm::kUnknown;
    for (std::size_t i = 0; c.pass && i < values.size(); ++i) {
      if (values[i] != first + static_cast<Entry>(i)) {
        c.pass = false;
        c.detail += i > 0 && values[i] == values[i - 1]
                        ? "; " + std::to_string(values[i]) + " repeated"
                        : "; " + std::to_string(first + static_cast<Entry>(i)) + " missing";
      }
    }
    if (rep.form == SquareForm::kUnknown) c.detail = "smallest entry " + std::to_string(values.front()) +
                                                     " is neither -(n^2-1)/2 nor 1";
    rep.checks.push_back(std::move(c));
  }

  Entry total = 0;
  for (Entry v : values) total += v;
  switch (rep.form) {
    case SquareForm::kCentered: rep.magic_constant = 0; break;
    case SquareForm::kClassic: rep.magic_constant = n * (nn + 1) / 2; break;
    case SquareForm::kUnknown:
      if (total % n == 0) rep.magic_constant = total / n;
      break;
  }
  const Entry target = rep.magic_constant.value_or(mat.row_sums().front());

  const auto line = [&](std::string kind, std::optional<int> index, Entry actual) {
    Check c;
    c.kind = std::move(kind);
    c.index = index;
    c.expected = target;
    c.actual = actual;
    c.pass = actual == target;
    rep.checks.push_back(std::move(c));
  };
  const auto rows = mat.row_sums(), cols = mat.col_sums();
  for (int i = 0; i < n; ++i) line("row", i + 1, rows[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i) line("column", i + 1, cols[static_cast<std::size_t>(i)]);
  line("main_diagonal", std::nullopt, mat.main_diagonal_sum());
  line("back_diagonal", std::nullopt, mat.back_diagonal_sum());
  rep.is_magic_square = std::all_of(rep.checks.begin(), rep.checks.end(), [](const Check& c) { return c.pass; });

  if (supported_order(n)) {
    rep.subsquares_checked = true;
    for (int k = 3; k <= n - 2; ++k) {
      const SubsquareWindow w = subsquare_window(n, k);
      const GmsResult g = is_gms(window_entries(mat, w));
      Check c;
      c.kind = "subsquare";
      c.k = k;
      c.window = w;
      c.pass = g.pass;
      if (g.pass) {
        c.actual = *g.common_sum;
      } else {
        c.detail = "rows {" + join(g.row_sums) + "} cols {" + join(g.col_sums) + "} main " +
                   std::to_string(g.main_diagonal) + " back " + std::to_string(g.back_diagonal);
      }
      rep.checks.push_back(std::move(c));

      Check dc;
      dc.kind = "subsquare_distinct";
      dc.k = k;
      dc.window = w;
      dc.pass = g.distinct;
      dc.severity = Severity::kWarning;
      if (!g.distinct) dc.detail = "window has repeated entries";
      rep.checks.push_back(std::move(dc));
    }
  }

  rep.verdict = std::all_of(rep.checks.begin(), rep.checks.end(),
                            [](const Check& c) { return c.pass || c.severity == Severity::kWarning; });
  return rep;
}

std::vector<SubsquareWindow> scan_all_gms(const IntMatrix& mat, int k, bool allow_large) {
  const int n = static_cast<int>(mat.rows());
  if (!mat.is_square()) throw PreconditionViolated("scan_all_gms needs a square matrix");
  if (n > kMaxScanOrder && !allow_large)
    throw OracleScaleExceeded("scan_all_gms is limited to n <= " + std::to_string(kMaxScanOrder));
  std::vector<SubsquareWindow> out;
  if (k < 1 || k > n) return out;
  for (int r = 1; r + k - 1 <= n; ++r)
    for (int c = 1; c + k - 1 <= n; ++c) {
      const SubsquareWindow w{k, r, r + k - 1, c, c + k - 1};
      const GmsResult g = is_gms(window_entries(mat, w));
      if (g.pass && g.distinct) out.push_back(w);
    }
  return out;
}

}  // namespace asms
