#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asms/matrix.hpp"

namespace asms {

/// Parameters of the order-n construction, n = 18u +- 3 = 3w.
struct ConstructionParams {
  int n = 0;
  int u = 0;
  Entry lambda = 0;  ///< (n^2 - 1) / 2; entries run over [-lambda, lambda]
  int w = 0;         ///< side of the grid of 3x3 blocks
  int m = 0;         ///< Langford length, (n^2 - 171) / 54
  int d = 4;         ///< Langford defect

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

/// Throws UnsupportedOrder unless n = 3 or 15 (mod 18) and n >= 21.
ConstructionParams derive_parameters(int n);

/// Hole positions k for which an extended Langford sequence of defect 4
/// and length m is known to exist, clipped to the valid slots [1, 2m+1].
/// Empty for m < 5.
std::vector<int> admissible_k_set(int m);

/// Marker stored in the hole slot.
inline constexpr int kHole = 0;

/// A k-extended Langford sequence of defect d and length m: 2m+1 slots,
/// slot k (1-based) empty, every j in [d, d+m-1] occurring twice with its
/// two positions exactly j apart.
class ExtendedLangfordSequence {
 public:
  ExtendedLangfordSequence() = default;
  /// `slots` holds 2m+1 entries, kHole marking empty slots. No validation.
  ExtendedLangfordSequence(int d, int m, int k, std::vector<int> slots)
      : d_(d), m_(m), k_(k), slots_(std::move(slots)) {}

  int d() const { return d_; }
  int m() const { return m_; }
  int k() const { return k_; }
  int length() const { return 2 * m_ + 1; }
  const std::vector<int>& slots() const { return slots_; }
  /// Value at 1-based position, kHole if empty.
  int at(int pos) const { return slots_.at(static_cast<std::size_t>(pos - 1)); }

  /// (a_j, b_j) for j = d .. d+m-1, in that order; positions are 1-based.
  /// Throws InvalidSequence if some j does not occur exactly twice.
  std::vector<std::pair<int, int>> pairs() const;

  /// Mirror image: slot p moves to 2m+2-p, the hole to 2m+2-k.
  ExtendedLangfordSequence reversed() const;

  friend bool operator==(const ExtendedLangfordSequence&,
                         const ExtendedLangfordSequence&) = default;

 private:
  int d_ = 0;
  int m_ = 0;
  int k_ = 0;
  std::vector<int> slots_;
};

enum class SequenceRule {
  kOk,
  kShape,           // slot count differs from 2m+1, or d, m, k out of range
  kValueOutOfRange, // a slot holds something outside [d, d+m-1]
  kMultiplicity,    // some j does not occur exactly twice
  kGap,             // the two occurrences of j are not j apart
  kHoleMisplaced,   // slot k is filled (or another slot is empty)
};

struct SequenceValidation {
  SequenceRule rule = SequenceRule::kOk;
  std::string message;

  bool ok() const { return rule == SequenceRule::kOk; }
  explicit operator bool() const { return ok(); }
};

const char* to_string(SequenceRule rule);

/// Checks every sequence invariant and names the first one violated.
/// Never throws.
SequenceValidation validate_sequence(const ExtendedLangfordSequence& seq);

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
};

/// Deterministic backtracking search for a defect-d sequence of length m.
///
/// Each node branches on whichever unplaced value or empty slot has the
/// fewest feasible placements (ties favour the largest value, then the
/// leftmost slot). With `k` given only that hole is searched. Without it
/// the admissible holes (every hole for d != 4) are tried in ascending
/// order under a per-hole node cap that grows tenfold each round, so one
/// stubborn hole cannot eat the whole budget.
///
/// Throws PreconditionViolated for m < 1, d < 1, or a given k that is not
/// admissible, and SearchExhausted when the budget runs out.
ExtendedLangfordSequence search_sequence(int d, int m, std::optional<int> k = std::nullopt,
                                         const SearchBudget& budget = {});

/// Largest m enumerate_sequences accepts.
inline constexpr int kMaxEnumerationLength = 8;

/// Calls `visit` for every valid sequence with hole k, each exactly once,
/// in the DFS order used by search_sequence. Returning false from `visit`
/// stops early. Returns the number of sequences visited.
/// Throws OracleScaleExceeded for m > kMaxEnumerationLength.
std::size_t enumerate_sequences(int d, int m, int k,
                                const std::function<bool(const ExtendedLangfordSequence&)>& visit);

/// Convenience wrapper collecting every sequence.
std::vector<ExtendedLangfordSequence> enumerate_sequences(int d, int m, int k);

/// Sequence file: header `d=<d> m=<m> k=<k>`, then one line of 2m+1
/// whitespace-separated tokens, `_` marking the hole.
std::string format_sequence(const ExtendedLangfordSequence& seq);
/// Parses the first sequence in `text`; throws ParseError on malformed input.
/// The result is not validated.
ExtendedLangfordSequence parse_sequence(const std::string& text);

}  // namespace asms
