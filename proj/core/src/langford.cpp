#include "asms/langford.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "asms/error.hpp"

namespace asms {

ConstructionParams derive_parameters(int n) {
  const int r = ((n % 18) + 18) % 18;
  if (n < 21 || (r != 3 && r != 15))
    throw UnsupportedOrder("n must be ≡ ±3 (mod 18) and ≥ 21 (got " + std::to_string(n) + ")");
  ConstructionParams p;
  p.n = n;
  p.u = r == 3 ? (n - 3) / 18 : (n + 3) / 18;
  const Entry nn = static_cast<Entry>(n) * n;
  p.lambda = (nn - 1) / 2;
  p.w = n / 3;
  p.m = static_cast<int>((nn - 171) / 54);
  p.d = 4;
  return p;
}

std::vector<int> admissible_k_set(int m) {
  std::vector<int> ks;
  if (m < 5) return ks;
  // (m, k) = (0,1), (1,0), (2,0), (3,1) mod (4, 2)
  const int parity = (m % 4 == 0 || m % 4 == 3) ? 1 : 0;
  // m/2 (7-m) + 1 <= k <= m/2 (m-3) + 1, doubled to stay integral
  const long long lo2 = static_cast<long long>(m) * (7 - m) + 2;
  const long long hi2 = static_cast<long long>(m) * (m - 3) + 2;
  for (int k = 1; k <= 2 * m + 1; ++k)
    if (k % 2 == parity && 2LL * k >= lo2 && 2LL * k <= hi2) ks.push_back(k);
  return ks;
}

std::vector<std::pair<int, int>> ExtendedLangfordSequence::pairs() const {
  std::vector<std::pair<int, int>> out(static_cast<std::size_t>(std::max(m_, 0)), {0, 0});
  std::vector<int> seen(out.size(), 0);
  for (int pos = 1; pos <= static_cast<int>(slots_.size()); ++pos) {
    const int v = slots_[static_cast<std::size_t>(pos - 1)];
    if (v == kHole) continue;
    if (v < d_ || v >= d_ + m_) throw InvalidSequence("value " + std::to_string(v) + " out of range");
    const auto idx = static_cast<std::size_t>(v - d_);
    if (seen[idx] == 0) out[idx].first = pos;
    else if (seen[idx] == 1) out[idx].second = pos;
    ++seen[idx];
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != 2)
      throw InvalidSequence("value " + std::to_string(d_ + static_cast<int>(i)) + " occurs " +
                            std::to_string(seen[i]) + " times");
  return out;
}

ExtendedLangfordSequence ExtendedLangfordSequence::reversed() const {
  std::vector<int> s(slots_.rbegin(), slots_.rend());
  return {d_, m_, 2 * m_ + 2 - k_, std::move(s)};
}

const char* to_string(SequenceRule rule) {
  switch (rule) {
    case SequenceRule::kOk: return "ok";
    case SequenceRule::kShape: return "shape";
    case SequenceRule::kValueOutOfRange: return "value out of range";
    case SequenceRule::kMultiplicity: return "wrong multiplicity";
    case SequenceRule::kGap: return "wrong gap";
    case SequenceRule::kHoleMisplaced: return "hole misplaced";
  }
  return "?";
}

SequenceValidation validate_sequence(const ExtendedLangfordSequence& seq) {
  const int d = seq.d(), m = seq.m(), k = seq.k();
  const auto fail = [](SequenceRule r, std::string msg) { return SequenceValidation{r, std::move(msg)}; };

  if (d < 1 || m < 1) return fail(SequenceRule::kShape, "need d >= 1 and m >= 1");
  if (static_cast<int>(seq.slots().size()) != 2 * m + 1)
    return fail(SequenceRule::kShape, "expected " + std::to_string(2 * m + 1) + " slots, got " +
                                          std::to_string(seq.slots().size()));
  if (k < 1 || k > 2 * m + 1) return fail(SequenceRule::kShape, "hole position k=" + std::to_string(k) + " outside [1, 2m+1]");

  std::vector<std::vector<int>> positions(static_cast<std::size_t>(m));
  for (int pos = 1; pos <= 2 * m + 1; ++pos) {
    const int v = seq.at(pos);
    if (v == kHole) continue;
    if (v < d || v >= d + m)
      return fail(SequenceRule::kValueOutOfRange,
                  "slot " + std::to_string(pos) + " holds " + std::to_string(v));
    positions[static_cast<std::size_t>(v - d)].push_back(pos);
  }
  for (int j = d; j < d + m; ++j) {
    const auto& p = positions[static_cast<std::size_t>(j - d)];
    if (p.size() != 2)
      return fail(SequenceRule::kMultiplicity,
                  std::to_string(j) + " occurs " + std::to_string(p.size()) + " times");
  }
  for (int j = d; j < d + m; ++j) {
    const auto& p = positions[static_cast<std::size_t>(j - d)];
    if (p[1] - p[0] != j)
      return fail(SequenceRule::kGap, std::to_string(j) + " at positions " + std::to_string(p[0]) +
                                          " and " + std::to_string(p[1]) + " (gap " +
                                          std::to_string(p[1] - p[0]) + " != " + std::to_string(j) + ")");
  }
  if (seq.at(k) != kHole) return fail(SequenceRule::kHoleMisplaced, "slot k=" + std::to_string(k) + " is filled");
  return {};
}

namespace {

/// Backtracking over placements (j, a) meaning value j at slots a and a+j.
class Solver {
 public:
  using Visit = std::function<bool(const ExtendedLangfordSequence&)>;

  enum class Outcome { kStopped, kComplete, kCapped };

  Solver(int d, int m, int k) : d_(d), m_(m), k_(k), len_(2 * m + 1) {
    slot_.assign(static_cast<std::size_t>(len_ + 1), 0);
    slot_[static_cast<std::size_t>(k)] = kBlocked;
    used_.assign(static_cast<std::size_t>(m), 0);
  }

  /// Explores until `visit` returns false (kStopped), the tree is done
  /// (kComplete) or `node_cap` / the deadline is hit (kCapped).
  Outcome run(std::uint64_t node_cap, std::optional<std::chrono::steady_clock::time_point> deadline,
              const Visit& visit) {
    cap_ = node_cap;
    deadline_ = deadline;
    capped_ = false;
    visit_ = &visit;
    const bool stopped = dfs(0);
    if (stopped) return Outcome::kStopped;
    return capped_ ? Outcome::kCapped : Outcome::kComplete;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr int kBlocked = -1;

  bool fits(int j, int a) const {
    return a >= 1 && a + j <= len_ && slot_[static_cast<std::size_t>(a)] == 0 &&
           slot_[static_cast<std::size_t>(a + j)] == 0;
  }
  bool is_used(int j) const { return used_[static_cast<std::size_t>(j - d_)] != 0; }
  void place(int j, int a, int v) {
    slot_[static_cast<std::size_t>(a)] = v;
    slot_[static_cast<std::size_t>(a + j)] = v;
    used_[static_cast<std::size_t>(j - d_)] = v != 0;
  }

  ExtendedLangfordSequence snapshot() const {
    std::vector<int> s(slot_.begin() + 1, slot_.end());
    for (auto& v : s)
      if (v == kBlocked) v = kHole;
    return {d_, m_, k_, std::move(s)};
  }

  bool out_of_budget() {
    if (nodes_ >= cap_) return true;
    if (deadline_ && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() >= *deadline_) return true;
    return false;
  }

  // Returns true when the visitor asked to stop.
  bool dfs(int placed) {
    if (placed == m_) return !(*visit_)(snapshot());
    if (out_of_budget()) {
      capped_ = true;
      return false;
    }
    ++nodes_;

    int best = std::numeric_limits<int>::max();
    int best_value = -1;
    int best_slot = -1;
    for (int j = d_ + m_ - 1; j >= d_; --j) {
      if (is_used(j)) continue;
      int count = 0;
      for (int a = 1; a + j <= len_; ++a) count += fits(j, a);
      if (count == 0) return false;
      if (count < best) best = count, best_value = j, best_slot = -1;
    }
    for (int p = 1; p <= len_; ++p) {
      if (slot_[static_cast<std::size_t>(p)] != 0) continue;
      int count = 0;
      for (int j = d_; j < d_ + m_; ++j)
        if (!is_used(j)) count += fits(j, p) + fits(j, p - j);
      if (count == 0) return false;
      if (count < best) best = count, best_value = -1, best_slot = p;
    }

    const auto attempt = [&](int j, int a) {
      place(j, a, j);
      const bool stop = dfs(placed + 1);
      place(j, a, 0);
      return stop;
    };
    if (best_value >= 0) {
      const int j = best_value;
      for (int a = 1; a + j <= len_; ++a)
        if (fits(j, a) && (attempt(j, a) || capped_)) return !capped_;
    } else {
      const int p = best_slot;
      for (int j = d_ + m_ - 1; j >= d_; --j) {
        if (is_used(j)) continue;
        for (int a : {p, p - j})
          if (fits(j, a) && (attempt(j, a) || capped_)) return !capped_;
      }
    }
    return false;
  }

  int d_, m_, k_, len_;
  std::vector<int> slot_;
  std::vector<char> used_;
  std::uint64_t nodes_ = 0;
  std::uint64_t cap_ = 0;
  bool capped_ = false;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  const Visit* visit_ = nullptr;
};

std::vector<int> candidate_holes(int d, int m) {
  if (d == 4) return admissible_k_set(m);
  std::vector<int> ks(static_cast<std::size_t>(2 * m + 1));
  for (int k = 1; k <= 2 * m + 1; ++k) ks[static_cast<std::size_t>(k - 1)] = k;
  return ks;
}

}  // namespace

ExtendedLangfordSequence search_sequence(int d, int m, std::optional<int> k, const SearchBudget& budget) {
  if (d < 1 || m < 1) throw PreconditionViolated("search_sequence needs d >= 1 and m >= 1");
  const std::vector<int> holes = candidate_holes(d, m);
  if (holes.empty())
    throw PreconditionViolated("no admissible hole position for d=" + std::to_string(d) +
                               ", m=" + std::to_string(m));
  if (k && std::find(holes.begin(), holes.end(), *k) == holes.end())
    throw PreconditionViolated("k=" + std::to_string(*k) + " is not an admissible hole for d=" +
                               std::to_string(d) + ", m=" + std::to_string(m));

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (budget.time_limit) deadline = std::chrono::steady_clock::now() + *budget.time_limit;

  std::optional<ExtendedLangfordSequence> found;
  const Solver::Visit keep_first = [&](const ExtendedLangfordSequence& s) {
    found = s;
    return false;
  };

  std::uint64_t spent = 0;
  const auto exhausted = [&](const std::string& why) {
    return SearchExhausted("no sequence for d=" + std::to_string(d) + ", m=" + std::to_string(m) +
                           (k ? ", k=" + std::to_string(*k) : std::string()) + ": " + why +
                           " after " + std::to_string(spent) + " nodes");
  };

  if (k) {
    Solver solver(d, m, *k);
    const auto outcome = solver.run(budget.max_nodes, deadline, keep_first);
    spent = solver.nodes();
    if (found) return *found;
    throw exhausted(outcome == Solver::Outcome::kComplete ? "search space exhausted" : "budget exceeded");
  }

  std::vector<int> open = holes;
  for (std::uint64_t cap = 1000; !open.empty(); cap *= 10) {
    std::vector<int> still_open;
    for (int hole : open) {
      if (spent >= budget.max_nodes) throw exhausted("budget exceeded");
      if (deadline && std::chrono::steady_clock::now() >= *deadline) throw exhausted("time limit exceeded");
      Solver solver(d, m, hole);
      const auto outcome = solver.run(std::min(cap, budget.max_nodes - spent), deadline, keep_first);
      spent += solver.nodes();
      if (found) return *found;
      if (outcome == Solver::Outcome::kCapped) still_open.push_back(hole);
    }
    open = std::move(still_open);
  }
  throw exhausted("search space exhausted for every admissible hole");
}

std::size_t enumerate_sequences(int d, int m, int k,
                                const std::function<bool(const ExtendedLangfordSequence&)>& visit) {
  if (m > kMaxEnumerationLength)
    throw OracleScaleExceeded("enumeration is limited to m <= " + std::to_string(kMaxEnumerationLength));
  if (d < 1 || m < 1 || k < 1 || k > 2 * m + 1)
    throw PreconditionViolated("enumerate_sequences needs d, m >= 1 and k in [1, 2m+1]");
  std::size_t count = 0;
  Solver solver(d, m, k);
  solver.run(std::numeric_limits<std::uint64_t>::max(), std::nullopt,
             [&](const ExtendedLangfordSequence& s) {
               ++count;
               return visit(s);
             });
  return count;
}

std::vector<ExtendedLangfordSequence> enumerate_sequences(int d, int m, int k) {
  std::vector<ExtendedLangfordSequence> out;
  enumerate_sequences(d, m, k, [&](const ExtendedLangfordSequence& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::string format_sequence(const ExtendedLangfordSequence& seq) {
  std::ostringstream os;
  os << "d=" << seq.d() << " m=" << seq.m() << " k=" << seq.k() << '\n';
  for (std::size_t i = 0; i < seq.slots().size(); ++i) {
    if (i) os << ' ';
    if (seq.slots()[i] == kHole) os << '_';
    else os << seq.slots()[i];
  }
  os << '\n';
  return os.str();
}

ExtendedLangfordSequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  const auto next_line = [&]() -> bool {
    while (std::getline(in, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    return false;
  };

  if (!next_line()) throw ParseError("sequence file is empty");
  std::optional<int> d, m, k;
  {
    std::istringstream header(line);
    std::string tok;
    while (header >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError("bad header token '" + tok + "'");
      const std::string key = tok.substr(0, eq);
      int value = 0;
      try {
        std::size_t used = 0;
        value = std::stoi(tok.substr(eq + 1), &used);
        if (used != tok.size() - eq - 1) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad header value in '" + tok + "'");
      }
      if (key == "d") d = value;
      else if (key == "m") m = value;
      else if (key == "k") k = value;
      else throw ParseError("unknown header key '" + key + "'");
    }
  }
  if (!d || !m || !k) throw ParseError("header must be 'd=<d> m=<m> k=<k>'");
  if (*m < 1) throw ParseError("m must be positive");

  if (!next_line()) throw ParseError("missing slot line");
  std::vector<int> slots;
  std::istringstream body(line);
  std::string tok;
  while (body >> tok) {
    if (tok == "_") {
      slots.push_back(kHole);
      continue;
    }
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size() || v <= 0) throw std::invalid_argument(tok);
      slots.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad slot token '" + tok + "'");
    }
  }
  if (static_cast<int>(slots.size()) != 2 * *m + 1)
    throw ParseError("expected " + std::to_string(2 * *m + 1) + " slots, got " + std::to_string(slots.size()));
  return {*d, *m, *k, std::move(slots)};
}

}  // namespace asms
