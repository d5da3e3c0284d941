#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asms/cubes.hpp"
#include "asms/langford.hpp"
#include "asms/matrix.hpp"

namespace asms {

/// 1-based coordinates of a 3x3 block in the w x w block grid.
struct BlockPos {
  int s = 0;
  int t = 0;
  friend auto operator<=>(const BlockPos&, const BlockPos&) = default;
};

/// The split of [1,w]^2 into V1..V4 and of V4 into V41, V42, V43.
/// Each list is sorted by (s, t).
struct BlockIndexPartition {
  int w = 0;
  std::vector<BlockPos> v1, v2, v3, v4;
  std::vector<BlockPos> v41, v42, v43;
};

/// Requires w >= 7 and w odd; throws PreconditionViolated otherwise.
BlockIndexPartition partition_blocks(int w);

/// The fixed 144 entries filling V1: the 12 x 12 top-left corner without its
/// (4,4) block, plus A_ww = -A_33. Together they cover
/// [5,31] ∪ [-31,-5] ∪ [lambda-44, lambda] ∪ [-lambda, 44-lambda].
class CornerTable {
 public:
  explicit CornerTable(Entry lambda);

  Entry lambda() const { return lambda_; }
  /// Block (s, t) of the top-left 4x4 block grid, (s, t) != (4, 4).
  IntMatrix block(int s, int t) const;
  /// The block placed at (w, w).
  IntMatrix ww_block() const { return block(3, 3).negated(); }
  /// The 15 table blocks and A_ww, 144 values in no particular order.
  std::vector<Entry> entries() const;

 private:
  Entry lambda_;
  IntMatrix grid_;  // 12 x 12, the (4,4) block left as zeros
};

/// Requires lambda >= 220 (n >= 21).
CornerTable corner_table(Entry lambda);

enum class BlockSource { kCorner, kP, kQ, kCube };

/// What fills a block. For cubes `index`/`slice` name M_{index,slice};
/// for P/Q `slice` is the half (1 = first three rows/columns); corner
/// blocks carry index 0, slice 0.
struct BlockAssignment {
  BlockSource source = BlockSource::kCorner;
  int index = 0;
  int slice = 0;
  int sign = 1;
  friend bool operator==(const BlockAssignment&, const BlockAssignment&) = default;
};

struct Placement {
  BlockPos pos;
  BlockAssignment what;
  friend bool operator==(const Placement&, const Placement&) = default;
};

class BlockLayout {
 public:
  BlockLayout() = default;
  explicit BlockLayout(int w) : w_(w), cells_(static_cast<std::size_t>(w) * w) {}

  int w() const { return w_; }
  /// Throws LayoutInconsistency if `pos` is outside the grid or already set.
  void assign(BlockPos pos, const BlockAssignment& what);
  const std::optional<BlockAssignment>& at(BlockPos pos) const;
  bool complete() const;

  /// `{"s,t": {"source": "corner|P|Q|cube", "i": .., "slice": .., "sign": +-1}}`
  std::string to_json() const;

 private:
  int w_ = 0;
  std::vector<std::optional<BlockAssignment>> cells_;
};

/// Tracks which of the 3(2m+1) slices M_{0,j}, +-M_{i,j} (i in [1,m]) have
/// been placed. Each may be consumed once.
class SliceLedger {
 public:
  explicit SliceLedger(int m) : m_(m), used_(static_cast<std::size_t>(6 * m + 3), false) {}

  int m() const { return m_; }
  /// Throws LayoutInconsistency on an unknown or already consumed slice.
  void consume(int index, int slice, int sign);
  bool consumed(int index, int slice, int sign) const;
  bool all_consumed() const;
  std::size_t remaining() const;

 private:
  std::size_t key(int index, int slice, int sign) const;

  int m_;
  std::vector<bool> used_;
};

/// The cube slices on V41 ∪ V42: M_0 on V41, and for h = 4, 6, ..., w-3 the
/// cube c = m-(h-4) on the anti-diagonal s+t = 2h with its negation on
/// s+t = 2h+2. Throws LayoutInconsistency if V41 ∪ V42 is not covered
/// exactly once or a cube index drops below 1.
std::vector<Placement> diagonal_band_placement(int m, int w);

/// Places the slices not consumed by the ledger on V43.
using V43Placer = std::function<std::vector<Placement>(int m, int w, const SliceLedger& consumed)>;

/// Canonical V43 rule: upper positions (s < t) sorted by s+t then s are
/// paired, in order, with the remaining positive slices (partially used
/// cubes first, then untouched cubes, each by index then slice). The
/// negated slice goes to the transpose. Throws LayoutInconsistency on any
/// count mismatch.
std::vector<Placement> v43_placement(int m, int w, const SliceLedger& consumed);

struct AssembledSquare {
  int n = 0;
  Entry lambda = 0;
  IntMatrix entries;  ///< centered form, values [-lambda, lambda]
  BlockLayout layout;
};

/// Builds the order-n square from a defect-4 sequence of length params.m.
/// Throws InvalidSequence / PreconditionViolated for bad input and
/// LayoutInconsistency / CoverageViolation if the construction does not
/// close up; no partially filled square is ever returned.
AssembledSquare assemble(const ConstructionParams& params, const ExtendedLangfordSequence& seq,
                         const V43Placer& placer = v43_placement);

/// Adds lambda+1 to every entry, giving values [1, n^2].
IntMatrix to_classic_form(const AssembledSquare& sq);

}  // namespace asms
