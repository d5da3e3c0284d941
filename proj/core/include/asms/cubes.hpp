#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "asms/matrix.hpp"
#include "asms/triples.hpp"

namespace asms {

/// Three stacked 3x3 zero-sum slices built from one triple T_i. Each slice
/// has zero row and column sums, the three slices sum to zero cell-wise,
/// and slice 2 also has a zero main diagonal.
struct MagicCube {
  int index = 0;          ///< i in [-m, m]
  bool negated = false;   ///< true for -M_i
  std::array<IntMatrix, 3> slices;

  /// Slice j in {1, 2, 3}.
  const IntMatrix& slice(int j) const { return slices.at(static_cast<std::size_t>(j - 1)); }
  std::vector<Entry> entries() const;
};

MagicCube build_cube(const Triple& t, int index);
/// Entry-wise negation; keeps the index and flips `negated`.
MagicCube negate_cube(const MagicCube& cube);

/// Checks the three cube invariants listed on MagicCube.
bool satisfies_cube_invariants(const MagicCube& cube);

/// Given M_{-m}, ..., M_m (in any order, 2m+1 cubes), confirms their 27(2m+1)
/// entries are exactly S = [-4,4] ∪ [32, 40+27m] ∪ [-40-27m, -32] and
/// returns S sorted. Throws CoverageViolation naming the first duplicated
/// or missing value.
std::vector<Entry> cube_entry_coverage(std::span<const MagicCube> cubes);

enum class BorderKind { kP, kQ };

/// P_i (6x3, placed in block rows 1-2) or Q_i (3x6, placed in block
/// columns 1-2), i in [1, w-4].
struct BorderBlock {
  BorderKind kind = BorderKind::kP;
  int index = 0;
  IntMatrix entries;
};

/// Throws NonZeroSumTriple unless t sums to zero.
BorderBlock build_p_block(const Triple& t, int index);
BorderBlock build_q_block(const Triple& t, int index);

/// P: zero sums for all rows and columns, and the column sums of rows 3-6
/// and of rows 5-6 vanish too. Q: the transposed statement on columns.
bool satisfies_border_properties(const BorderBlock& block);

std::string cube_to_json(const MagicCube& cube);
std::string border_to_json(const BorderBlock& block);

}  // namespace asms
