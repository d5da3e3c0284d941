#include <gtest/gtest.h>

#include <set>

#include "asms/assembly.hpp"
#include "asms/verify.hpp"
#include "test_support.hpp"

namespace asms {
namespace {

IntMatrix block_of(const IntMatrix& a, int s, int t) {
  return a.sub(static_cast<std::size_t>(3 * (s - 1)), static_cast<std::size_t>(3 * (t - 1)), 3, 3);
}

/// Block-level properties every assembled square must have.
void expect_structure(const AssembledSquare& sq, int w) {
  const IntMatrix& a = sq.entries;
  const int n = sq.n;
  for (int s = 3; s <= w; ++s) {
    for (int t = 3; t <= w; ++t) EXPECT_TRUE(is_qmr_star(block_of(a, s, t))) << "block " << s << "," << t;
    EXPECT_EQ(block_of(a, s, s).main_diagonal_sum(), 0) << "block " << s;
  }
  for (int h = 20; h <= n + 7; ++h) {
    Entry sum = 0;
    for (int i = 7; i <= h - 7; ++i) sum += a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(h - i - 1));
    EXPECT_EQ(sum, 0) << "h=" << h;
  }
  const auto part = partition_blocks(w);
  for (const auto& p : part.v43) {
    EXPECT_EQ(block_of(a, p.t, p.s), block_of(a, p.s, p.t).negated());
    const auto& x = sq.layout.at(p);
    const auto& y = sq.layout.at({p.t, p.s});
    ASSERT_TRUE(x && y);
    EXPECT_EQ(x->index, y->index);
    EXPECT_EQ(x->slice, y->slice);
    EXPECT_EQ(x->sign, -y->sign);
  }
}

/// Every slice of M_0 and +-M_i, i in [1, m], is placed exactly once.
void expect_ledger_balanced(const AssembledSquare& sq, int m, int w) {
  std::multiset<std::tuple<int, int, int>> used;
  for (int s = 1; s <= w; ++s)
    for (int t = 1; t <= w; ++t) {
      const auto& a = sq.layout.at({s, t});
      ASSERT_TRUE(a);
      if (a->source == BlockSource::kCube) used.insert({a->index, a->slice, a->sign});
      if (a->source == BlockSource::kP && a->slice == 1)
        for (int sign : {1, -1}) used.insert({a->index, 2, sign});
      if (a->source == BlockSource::kQ && a->slice == 1)
        for (int sign : {1, -1}) used.insert({a->index, 3, sign});
    }
  EXPECT_EQ(used.size(), static_cast<std::size_t>(3 * (2 * m + 1)));
  for (int j = 1; j <= 3; ++j) EXPECT_EQ(used.count({0, j, 1}), 1u);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int sign : {1, -1}) EXPECT_EQ(used.count({i, j, sign}), 1u) << i << "," << j << "," << sign;
}

TEST(AssembledSquareProperties, EveryEnumeratedSequenceAtOrder21) {
  const auto params = derive_parameters(21);
  std::size_t count = 0;
  for (const auto& seq : enumerate_sequences(4, 5, 6)) {
    const auto sq = assemble(params, seq);
    expect_structure(sq, params.w);
    expect_ledger_balanced(sq, params.m, params.w);
    const auto rep = verify_asms(sq.entries);
    EXPECT_TRUE(rep.verdict);
    EXPECT_TRUE(verify_asms(to_classic_form(sq)).verdict);
    ++count;
  }
  EXPECT_EQ(count, 6u);
}

TEST(AssembledSquareProperties, Orders33And39) {
  for (int n : {33, 39}) {
    const auto params = derive_parameters(n);
    const auto sq = assemble(params, search_sequence(4, params.m));
    expect_structure(sq, params.w);
    expect_ledger_balanced(sq, params.m, params.w);
    EXPECT_TRUE(verify_asms(sq.entries).verdict) << n;
  }
}

TEST(AssembledSquareProperties, SeveralHolesAtOrder33) {
  const auto params = derive_parameters(33);
  for (int k : {2, 10, 20, 34}) {
    const auto sq = assemble(params, search_sequence(4, params.m, k));
    expect_structure(sq, params.w);
    EXPECT_TRUE(verify_asms(sq.entries).verdict) << "k=" << k;
  }
}

TEST(AssembledSquareProperties, AnyAntisymmetricV43PlacementVerifies) {
  // Pair the remaining slices with V43 positions in reverse order.
  const V43Placer reversed = [](int m, int w, const SliceLedger& ledger) {
    auto canonical = v43_placement(m, w, ledger);
    std::vector<Placement> out;
    const std::size_t pairs = canonical.size() / 2;
    for (std::size_t i = 0; i < pairs; ++i) {
      const auto& slot = canonical[2 * i];
      const auto& what = canonical[2 * (pairs - 1 - i)].what;
      out.push_back({slot.pos, what});
      auto neg = what;
      neg.sign = -1;
      out.push_back({{slot.pos.t, slot.pos.s}, neg});
    }
    return out;
  };
  for (int n : {21, 33}) {
    const auto params = derive_parameters(n);
    const auto seq = search_sequence(4, params.m);
    const auto a = assemble(params, seq);
    const auto b = assemble(params, seq, reversed);
    EXPECT_NE(a.entries, b.entries);
    expect_structure(b, params.w);
    EXPECT_TRUE(verify_asms(b.entries).verdict) << n;
  }
}

TEST(AssembledSquareProperties, ShiftInvarianceAndTranspose) {
  const auto params = derive_parameters(33);
  const auto sq = assemble(params, search_sequence(4, params.m));
  const auto centered = verify_asms(sq.entries);
  const auto classic = verify_asms(to_classic_form(sq));
  ASSERT_EQ(centered.checks.size(), classic.checks.size());
  for (std::size_t i = 0; i < centered.checks.size(); ++i)
    EXPECT_EQ(centered.checks[i].pass, classic.checks[i].pass);
  EXPECT_EQ(centered.verdict, classic.verdict);
  EXPECT_TRUE(verify_asms(sq.entries.transposed()).is_magic_square);
}

TEST(OracleAgreement, ClaimedWindowsAppearInScanAtOrder33) {
  const auto params = derive_parameters(33);
  const auto sq = assemble(params, search_sequence(4, params.m));
  for (int k : {3, 4, 5, 6, 7, 13, 20, 29, 30, 31}) {
    const auto w = subsquare_window(33, k);
    const auto all = scan_all_gms(sq.entries, k);
    EXPECT_NE(std::find(all.begin(), all.end(), w), all.end()) << "k=" << k;
  }
}

}  // namespace
}  // namespace asms
