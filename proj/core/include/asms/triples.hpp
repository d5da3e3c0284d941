#pragma once

#include <string>
#include <vector>

#include "asms/langford.hpp"
#include "asms/matrix.hpp"

namespace asms {

struct Triple {
  Entry x = 0;
  Entry y = 0;
  Entry z = 0;

  Entry sum() const { return x + y + z; }
  Triple operator-() const { return {-x, -y, -z}; }
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// The 2m+1 zero-sum triples T_i, i in [-m, m], derived from a sequence.
/// Storage is indexed by the signed i.
class ZeroSumTripleSystem {
 public:
  ZeroSumTripleSystem() = default;
  ZeroSumTripleSystem(int d, int m, int k, std::vector<Triple> by_offset)
      : d_(d), m_(m), k_(k), triples_(std::move(by_offset)) {}

  int d() const { return d_; }
  int m() const { return m_; }
  int k() const { return k_; }

  /// Number of stored triples (2m+1 for a well-formed system).
  std::size_t size() const { return triples_.size(); }
  /// T_i for i in [-m, m].
  const Triple& operator[](int i) const { return triples_.at(static_cast<std::size_t>(i + m_)); }
  Triple& operator[](int i) { return triples_.at(static_cast<std::size_t>(i + m_)); }

  const std::vector<Triple>& triples() const { return triples_; }

 private:
  int d_ = 0;
  int m_ = 0;
  int k_ = 0;
  std::vector<Triple> triples_;  // T_{-m} .. T_m
};

/// T_0 = (k+d+m-1, -(k+d+m-1), 0); for i in [1, m] with j = i+d-1:
/// T_i = (j, a_j + d+m-1, -(b_j + d+m-1)) and T_{-i} = -T_i.
/// Throws InvalidSequence unless validate_sequence accepts `seq`.
ZeroSumTripleSystem build_triples(const ExtendedLangfordSequence& seq);

struct PartitionValidation {
  bool valid = true;
  std::string message;

  explicit operator bool() const { return valid; }
};

/// Accepts iff there are 2m+1 triples, each sums to zero, and together they
/// cover [d, d+3m] ∪ [-d-3m, -d] ∪ {0} exactly once.
PartitionValidation validate_partition(const ZeroSumTripleSystem& ts);

/// Debug dump `{"-m": [x,y,z], ..., "m": [x,y,z]}`.
std::string triples_to_json(const ZeroSumTripleSystem& ts);

}  // namespace asms
