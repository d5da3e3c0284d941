#include "asms/assembly.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <json.hpp>
#include <set>

#include "asms/error.hpp"
#include "asms/triples.hpp"

namespace asms {

namespace {

/// eps * lambda + c; `present` is false inside the (4,4) hole.
struct AffineCell {
  int eps;
  int c;
  bool present;
};

// Rows 1-12 of the top-left corner; block (4,4) is supplied by M_{m,2}.
constexpr std::array<std::array<AffineCell, 12>, 12> kCorner = {{
    {{{0, 17, true}, {1, -17, true}, {0, -25, true}, {0, 29, true}, {-1, 24, true}, {1, -20, true}, {-1, 12, true}, {1, -26, true}, {-1, 6, true}, {1, -22, true}, {-1, 42, true}, {0, -20, true}}},
    {{{-1, 17, true}, {0, -17, true}, {0, 25, true}, {0, -29, true}, {1, -24, true}, {-1, 20, true}, {1, -12, true}, {-1, 26, true}, {1, -6, true}, {-1, 22, true}, {1, -42, true}, {0, 20, true}}},
    {{{0, -22, true}, {0, 22, true}, {0, 14, true}, {1, -9, true}, {-1, 13, true}, {1, -29, true}, {-1, 1, true}, {-1, 37, true}, {1, -27, true}, {-1, 11, true}, {1, -21, true}, {0, 10, true}}},
    {{{0, 30, true}, {0, -30, true}, {-1, 9, true}, {0, -14, true}, {1, -13, true}, {-1, 29, true}, {1, -1, true}, {1, -37, true}, {-1, 27, true}, {1, -11, true}, {-1, 21, true}, {0, -10, true}}},
    {{{0, -23, true}, {0, 23, true}, {1, -5, true}, {-1, 5, true}, {0, -11, true}, {-1, 8, true}, {1, -16, true}, {1, -15, true}, {-1, 34, true}, {1, -4, true}, {-1, 10, true}, {0, -6, true}}},
    {{{0, 26, true}, {0, -26, true}, {1, -38, true}, {-1, 38, true}, {1, -8, true}, {0, 11, true}, {-1, 16, true}, {-1, 15, true}, {1, -34, true}, {-1, 4, true}, {1, -10, true}, {0, 6, true}}},
    {{{1, 0, true}, {-1, 0, true}, {-1, 36, true}, {1, -36, true}, {-1, 3, true}, {1, -3, true}, {0, -5, true}, {1, -39, true}, {-1, 44, true}, {0, -18, true}, {0, -13, true}, {0, 31, true}}},
    {{{1, -32, true}, {-1, 32, true}, {1, -41, true}, {-1, 41, true}, {-1, 30, true}, {1, -30, true}, {-1, 7, true}, {0, 21, true}, {1, -28, true}, {0, -9, true}, {0, 28, true}, {0, -19, true}}},
    {{{-1, 35, true}, {1, -35, true}, {-1, 25, true}, {1, -25, true}, {1, -14, true}, {-1, 14, true}, {1, -2, true}, {-1, 18, true}, {0, -16, true}, {0, 27, true}, {0, -15, true}, {0, -12, true}}},
    {{{1, -43, true}, {-1, 43, true}, {1, -31, true}, {-1, 31, true}, {-1, 40, true}, {1, -40, true}, {0, 18, true}, {0, 13, true}, {0, -31, true}, {0, 0, false}, {0, 0, false}, {0, 0, false}}},
    {{{-1, 19, true}, {1, -19, true}, {-1, 23, true}, {1, -23, true}, {1, -33, true}, {-1, 33, true}, {0, 9, true}, {0, -28, true}, {0, 19, true}, {0, 0, false}, {0, 0, false}, {0, 0, false}}},
    {{{0, -24, true}, {0, 24, true}, {0, 8, true}, {0, -8, true}, {0, -7, true}, {0, 7, true}, {0, -27, true}, {0, 15, true}, {0, 12, true}, {0, 0, false}, {0, 0, false}, {0, 0, false}}},
}};

std::string pos_string(BlockPos p) { return "(" + std::to_string(p.s) + "," + std::to_string(p.t) + ")"; }

}  // namespace

BlockIndexPartition partition_blocks(int w) {
  if (w < 7 || w % 2 == 0) throw PreconditionViolated("block grid side must be odd and >= 7");
  BlockIndexPartition p;
  p.w = w;
  const auto in_v41 = [w](int s, int t) {
    return (s == w - 2 && t == w) || (s == w - 1 && t == w - 1) || (s == w && t == w - 2);
  };
  const auto in_v42 = [w](int s, int t) {
    // (h-1, h+1), (h, h), (h+1, h-1) for h in [4, w-2]
    return s + t >= 8 && s + t <= 2 * (w - 2) && (s + t) % 2 == 0 && std::abs(s - t) <= 2;
  };
  for (int s = 1; s <= w; ++s) {
    for (int t = 1; t <= w; ++t) {
      const BlockPos pos{s, t};
      if ((s <= 4 && t <= 4 && !(s == 4 && t == 4)) || (s == w && t == w)) {
        p.v1.push_back(pos);
      } else if (s <= 2) {
        p.v2.push_back(pos);
      } else if (t <= 2) {
        p.v3.push_back(pos);
      } else {
        p.v4.push_back(pos);
        if (in_v41(s, t)) p.v41.push_back(pos);
        else if (in_v42(s, t)) p.v42.push_back(pos);
        else p.v43.push_back(pos);
      }
    }
  }
  return p;
}

CornerTable::CornerTable(Entry lambda) : lambda_(lambda), grid_(12, 12) {
  for (std::size_t r = 0; r < 12; ++r)
    for (std::size_t c = 0; c < 12; ++c) {
      const AffineCell& cell = kCorner[r][c];
      grid_(r, c) = cell.present ? cell.eps * lambda + cell.c : 0;
    }
}

IntMatrix CornerTable::block(int s, int t) const {
  if (s < 1 || s > 4 || t < 1 || t > 4 || (s == 4 && t == 4))
    throw std::out_of_range("CornerTable::block " + pos_string({s, t}));
  return grid_.sub(static_cast<std::size_t>(3 * (s - 1)), static_cast<std::size_t>(3 * (t - 1)), 3, 3);
}

std::vector<Entry> CornerTable::entries() const {
  std::vector<Entry> out;
  out.reserve(144);
  for (std::size_t r = 0; r < 12; ++r)
    for (std::size_t c = 0; c < 12; ++c)
      if (kCorner[r][c].present) out.push_back(grid_(r, c));
  const IntMatrix ww = ww_block();
  out.insert(out.end(), ww.values().begin(), ww.values().end());
  return out;
}

CornerTable corner_table(Entry lambda) {
  if (lambda < 220) throw PreconditionViolated("corner table needs lambda >= 220 (n >= 21)");
  return CornerTable(lambda);
}

void BlockLayout::assign(BlockPos pos, const BlockAssignment& what) {
  if (pos.s < 1 || pos.s > w_ || pos.t < 1 || pos.t > w_)
    throw LayoutInconsistency("block " + pos_string(pos) + " is outside the grid");
  auto& cell = cells_[static_cast<std::size_t>((pos.s - 1) * w_ + (pos.t - 1))];
  if (cell) throw LayoutInconsistency("block " + pos_string(pos) + " assigned twice");
  cell = what;
}

const std::optional<BlockAssignment>& BlockLayout::at(BlockPos pos) const {
  return cells_.at(static_cast<std::size_t>((pos.s - 1) * w_ + (pos.t - 1)));
}

bool BlockLayout::complete() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const auto& c) { return c.has_value(); });
}

std::string BlockLayout::to_json() const {
  static constexpr const char* kNames[] = {"corner", "P", "Q", "cube"};
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (int s = 1; s <= w_; ++s)
    for (int t = 1; t <= w_; ++t) {
      const auto& a = at({s, t});
      if (!a) continue;
      j[std::to_string(s) + "," + std::to_string(t)] = {{"source", kNames[static_cast<int>(a->source)]},
                                                       {"i", a->index},
                                                       {"slice", a->slice},
                                                       {"sign", a->sign}};
    }
  return j.dump();
}

std::size_t SliceLedger::key(int index, int slice, int sign) const {
  if (index < 0 || index > m_ || slice < 1 || slice > 3 || (sign != 1 && sign != -1) ||
      (index == 0 && sign != 1))
    throw LayoutInconsistency("no slice " + std::string(sign < 0 ? "-" : "") + "M_{" +
                              std::to_string(index) + "," + std::to_string(slice) + "}");
  if (index == 0) return static_cast<std::size_t>(slice - 1);
  return static_cast<std::size_t>(3 + 6 * (index - 1) + 2 * (slice - 1) + (sign < 0));
}

void SliceLedger::consume(int index, int slice, int sign) {
  const auto k = key(index, slice, sign);
  if (used_[k])
    throw LayoutInconsistency("slice " + std::string(sign < 0 ? "-" : "") + "M_{" +
                              std::to_string(index) + "," + std::to_string(slice) + "} used twice");
  used_[k] = true;
}

bool SliceLedger::consumed(int index, int slice, int sign) const { return used_[key(index, slice, sign)]; }

bool SliceLedger::all_consumed() const { return std::all_of(used_.begin(), used_.end(), [](bool b) { return b; }); }

std::size_t SliceLedger::remaining() const {
  return static_cast<std::size_t>(std::count(used_.begin(), used_.end(), false));
}

std::vector<Placement> diagonal_band_placement(int m, int w) {
  const BlockIndexPartition part = partition_blocks(w);
  const auto cube = [](int i, int j, int sign) { return BlockAssignment{BlockSource::kCube, i, j, sign}; };

  std::vector<Placement> out;
  out.push_back({{w - 2, w}, cube(0, 1, 1)});
  out.push_back({{w - 1, w - 1}, cube(0, 2, 1)});
  out.push_back({{w, w - 2}, cube(0, 3, 1)});
  for (int h = 4; h <= w - 3; h += 2) {
    const int c = m - (h - 4);
    if (c < 1) throw LayoutInconsistency("band cube index " + std::to_string(c) + " < 1 (m too small for w)");
    out.push_back({{h - 1, h + 1}, cube(c, 1, 1)});
    out.push_back({{h, h}, cube(c, 2, 1)});
    out.push_back({{h + 1, h - 1}, cube(c, 3, 1)});
    out.push_back({{h, h + 2}, cube(c, 1, -1)});
    out.push_back({{h + 1, h + 1}, cube(c, 2, -1)});
    out.push_back({{h + 2, h}, cube(c, 3, -1)});
  }

  std::set<BlockPos> expected(part.v41.begin(), part.v41.end());
  expected.insert(part.v42.begin(), part.v42.end());
  std::set<BlockPos> seen;
  for (const auto& p : out) {
    if (!expected.count(p.pos)) throw LayoutInconsistency("band block " + pos_string(p.pos) + " is outside V41 ∪ V42");
    if (!seen.insert(p.pos).second) throw LayoutInconsistency("band block " + pos_string(p.pos) + " assigned twice");
  }
  if (seen.size() != expected.size())
    throw LayoutInconsistency("band leaves " + std::to_string(expected.size() - seen.size()) + " blocks empty");
  return out;
}

std::vector<Placement> v43_placement(int m, int w, const SliceLedger& consumed) {
  const BlockIndexPartition part = partition_blocks(w);
  std::vector<BlockPos> upper;
  for (const auto& p : part.v43)
    if (p.s < p.t) upper.push_back(p);
  std::sort(upper.begin(), upper.end(), [](BlockPos a, BlockPos b) {
    return std::pair(a.s + a.t, a.s) < std::pair(b.s + b.t, b.s);
  });

  if (consumed.m() != m) throw LayoutInconsistency("ledger is for a different m");
  for (int j = 1; j <= 3; ++j)
    if (!consumed.consumed(0, j, 1)) throw LayoutInconsistency("M_0 must be placed before V43");

  std::vector<std::pair<int, int>> partial, untouched;
  for (int i = 1; i <= m; ++i) {
    int used = 0;
    for (int j = 1; j <= 3; ++j) {
      const bool pos = consumed.consumed(i, j, 1), neg = consumed.consumed(i, j, -1);
      if (pos != neg)
        throw LayoutInconsistency("M_{" + std::to_string(i) + "," + std::to_string(j) +
                                  "} and its negation are not consumed together");
      used += pos;
    }
    for (int j = 1; j <= 3; ++j) {
      if (consumed.consumed(i, j, 1)) continue;
      (used == 0 ? untouched : partial).emplace_back(i, j);
    }
  }
  std::vector<std::pair<int, int>> slices = std::move(partial);
  slices.insert(slices.end(), untouched.begin(), untouched.end());

  if (slices.size() != upper.size())
    throw LayoutInconsistency(std::to_string(slices.size()) + " slices remain for " +
                              std::to_string(upper.size()) + " upper V43 positions");

  std::vector<Placement> out;
  out.reserve(2 * upper.size());
  for (std::size_t n = 0; n < upper.size(); ++n) {
    const auto [i, j] = slices[n];
    out.push_back({upper[n], {BlockSource::kCube, i, j, 1}});
    out.push_back({{upper[n].t, upper[n].s}, {BlockSource::kCube, i, j, -1}});
  }
  return out;
}

AssembledSquare assemble(const ConstructionParams& params, const ExtendedLangfordSequence& seq,
                         const V43Placer& placer) {
  if (seq.d() != params.d || seq.m() != params.m)
    throw PreconditionViolated("sequence has d=" + std::to_string(seq.d()) + ", m=" + std::to_string(seq.m()) +
                               "; order " + std::to_string(params.n) + " needs d=" + std::to_string(params.d) +
                               ", m=" + std::to_string(params.m));
  const int n = params.n, w = params.w, m = params.m;
  const ZeroSumTripleSystem triples = build_triples(seq);

  std::vector<MagicCube> cubes;
  cubes.reserve(static_cast<std::size_t>(2 * m + 1));
  for (int i = -m; i <= m; ++i) cubes.push_back(build_cube(triples[i], i));
  cube_entry_coverage(cubes);
  const auto cube_slice = [&](int i, int j, int sign) {
    const IntMatrix& s = cubes[static_cast<std::size_t>(i + m)].slice(j);
    return sign < 0 ? s.negated() : s;
  };

  const BlockIndexPartition part = partition_blocks(w);
  const CornerTable corner = corner_table(params.lambda);
  IntMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  BlockLayout layout(w);
  SliceLedger ledger(m);

  const auto put = [&](BlockPos pos, const IntMatrix& block, const BlockAssignment& what) {
    layout.assign(pos, what);
    a.paste(static_cast<std::size_t>(3 * (pos.s - 1)), static_cast<std::size_t>(3 * (pos.t - 1)), block);
  };

  // V1: the fixed corner.
  for (const BlockPos pos : part.v1) {
    if (pos.s == w && pos.t == w) put(pos, corner.ww_block(), {BlockSource::kCorner, 0, 0, -1});
    else put(pos, corner.block(pos.s, pos.t), {BlockSource::kCorner, 0, 0, 1});
  }

  // V2 and V3: P_i over block rows 1-2 at column i+4, Q_i over block
  // columns 1-2 at row i+4.
  for (int i = 1; i <= w - 4; ++i) {
    const BorderBlock p = build_p_block(triples[i], i);
    put({1, i + 4}, p.entries.sub(0, 0, 3, 3), {BlockSource::kP, i, 1, 1});
    put({2, i + 4}, p.entries.sub(3, 0, 3, 3), {BlockSource::kP, i, 2, 1});
    ledger.consume(i, 2, 1);
    ledger.consume(i, 2, -1);

    const BorderBlock q = build_q_block(triples[i], i);
    put({i + 4, 1}, q.entries.sub(0, 0, 3, 3), {BlockSource::kQ, i, 1, 1});
    put({i + 4, 2}, q.entries.sub(0, 3, 3, 3), {BlockSource::kQ, i, 2, 1});
    ledger.consume(i, 3, 1);
    ledger.consume(i, 3, -1);
  }

  // V4: diagonal band, then the antisymmetric remainder.
  for (const auto& pl : diagonal_band_placement(m, w)) {
    ledger.consume(pl.what.index, pl.what.slice, pl.what.sign);
    put(pl.pos, cube_slice(pl.what.index, pl.what.slice, pl.what.sign), pl.what);
  }
  const std::set<BlockPos> v43(part.v43.begin(), part.v43.end());
  for (const auto& pl : placer(m, w, ledger)) {
    if (!v43.count(pl.pos)) throw LayoutInconsistency("V43 placer wrote outside V43 at " + pos_string(pl.pos));
    if (pl.what.source != BlockSource::kCube) throw LayoutInconsistency("V43 placer must place cube slices");
    ledger.consume(pl.what.index, pl.what.slice, pl.what.sign);
    put(pl.pos, cube_slice(pl.what.index, pl.what.slice, pl.what.sign), pl.what);
  }

  if (!layout.complete()) throw LayoutInconsistency("block grid is not completely filled");
  if (!ledger.all_consumed())
    throw LayoutInconsistency(std::to_string(ledger.remaining()) + " cube slices were never placed");

  const std::vector<Entry> values = a.sorted_values();
  for (std::size_t idx = 0; idx < values.size(); ++idx)
    if (values[idx] != -params.lambda + static_cast<Entry>(idx))
      throw CoverageViolation("assembled entries are not [-lambda, lambda]; first mismatch near " +
                              std::to_string(values[idx]));

  return {n, params.lambda, std::move(a), std::move(layout)};
}

IntMatrix to_classic_form(const AssembledSquare& sq) { return sq.entries.shifted(sq.lambda + 1); }

}  // namespace asms
