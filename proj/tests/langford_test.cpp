#include <gtest/gtest.h>

#include <set>

#include "asms/error.hpp"
#include "asms/langford.hpp"
#include "test_support.hpp"

namespace asms {
namespace {

using testing::brute_force_langford;
using testing::example1;

TEST(DeriveParametersTest, SmallestOrders) {
  EXPECT_EQ(derive_parameters(21), (ConstructionParams{21, 1, 220, 7, 5, 4}));
  EXPECT_EQ(derive_parameters(33), (ConstructionParams{33, 2, 544, 11, 17, 4}));
  EXPECT_EQ(derive_parameters(39).m, 25);
  EXPECT_EQ(derive_parameters(51).m, 45);
}

TEST(DeriveParametersTest, RejectsUnsupportedOrders) {
  for (int n : {20, 15, 3, 27, 9, 0, -3, 22, 45})
    EXPECT_THROW(derive_parameters(n), UnsupportedOrder) << n;
}

TEST(DeriveParametersTest, InvariantsHoldForEverySupportedOrder) {
  int checked = 0;
  for (int n = 21; n < 2000; ++n) {
    if (n % 18 != 3 && n % 18 != 15) {
      EXPECT_THROW(derive_parameters(n), UnsupportedOrder);
      continue;
    }
    const auto p = derive_parameters(n);
    const long long nn = static_cast<long long>(n) * n;
    EXPECT_EQ(54LL * p.m + 171, nn);
    EXPECT_EQ(27LL * (2 * p.m + 1), nn - 144);
    EXPECT_EQ(p.m % 4, 1);
    EXPECT_GE(p.m, 5);
    EXPECT_EQ(3 * p.w, n);
    EXPECT_EQ(p.w % 2, 1);
    EXPECT_EQ((p.w - 5) % 2, 0);
    EXPECT_TRUE(n == 18 * p.u + 3 || n == 18 * p.u - 3);
    EXPECT_EQ(2 * p.lambda + 1, nn);
    ++checked;
  }
  EXPECT_GT(checked, 200);
}

TEST(AdmissibleKTest, Examples) {
  EXPECT_EQ(admissible_k_set(5), std::vector<int>{6});
  std::vector<int> even_to_34;
  for (int k = 2; k <= 34; k += 2) even_to_34.push_back(k);
  EXPECT_EQ(admissible_k_set(17), even_to_34);
  EXPECT_TRUE(admissible_k_set(4).empty());
  EXPECT_TRUE(admissible_k_set(0).empty());
  // m = 6: bounds [4, 10], even k.
  EXPECT_EQ(admissible_k_set(6), (std::vector<int>{4, 6, 8, 10}));
}

TEST(AdmissibleKTest, ParityAndRangeProperty) {
  for (int m = 5; m <= 120; ++m) {
    const int parity = (m % 4 == 0 || m % 4 == 3) ? 1 : 0;
    for (int k : admissible_k_set(m)) {
      EXPECT_EQ(k % 2, parity) << "m=" << m;
      EXPECT_GE(k, 1);
      EXPECT_LE(k, 2 * m + 1);
      EXPECT_GE(2 * k, m * (7 - m) + 2);
      EXPECT_LE(2 * k, m * (m - 3) + 2);
    }
  }
}

TEST(ValidateSequenceTest, ExampleOneIsValid) {
  const auto v = validate_sequence(example1());
  EXPECT_TRUE(v.ok()) << v.message;
}

TEST(ValidateSequenceTest, SwappedFoursBreakTheGap) {
  // The 4 at slot 7 trades places with the 6 at slot 8.
  const ExtendedLangfordSequence bad{4, 5, 6, {8, 6, 4, 7, 5, kHole, 6, 4, 8, 5, 7}};
  const auto v = validate_sequence(bad);
  EXPECT_EQ(v.rule, SequenceRule::kGap);
  EXPECT_NE(v.message.find("gap 5 != 4"), std::string::npos) << v.message;
}

TEST(ValidateSequenceTest, AllEmptyFailsMultiplicity) {
  const ExtendedLangfordSequence empty{4, 5, 6, std::vector<int>(11, kHole)};
  EXPECT_EQ(validate_sequence(empty).rule, SequenceRule::kMultiplicity);
}

TEST(ValidateSequenceTest, OtherRules) {
  auto slots = example1().slots();
  EXPECT_EQ(validate_sequence({4, 5, 5, slots}).rule, SequenceRule::kHoleMisplaced);
  EXPECT_EQ(validate_sequence({4, 5, 6, {8, 6, 4}}).rule, SequenceRule::kShape);
  EXPECT_EQ(validate_sequence({4, 5, 12, slots}).rule, SequenceRule::kShape);
  slots[0] = 9;
  EXPECT_EQ(validate_sequence({4, 5, 6, slots}).rule, SequenceRule::kValueOutOfRange);
}

TEST(ValidateSequenceTest, GeneralDefect) {
  // Skolem-type sequence with the hole last.
  const ExtendedLangfordSequence s{1, 4, 9, {1, 1, 4, 2, 3, 2, 4, 3, kHole}};
  EXPECT_TRUE(validate_sequence(s).ok()) << validate_sequence(s).message;
}

TEST(SequenceTest, PairsAndReversal) {
  const auto pairs = example1().pairs();
  ASSERT_EQ(pairs.size(), 5u);
  EXPECT_EQ(pairs[0], std::make_pair(3, 7));   // 4
  EXPECT_EQ(pairs[4], std::make_pair(1, 9));   // 8
  const auto rev = example1().reversed();
  EXPECT_EQ(rev.k(), 6);
  EXPECT_EQ(rev.slots(), (std::vector<int>{7, 5, 8, 6, 4, kHole, 5, 7, 4, 6, 8}));
  EXPECT_TRUE(validate_sequence(rev).ok());
  EXPECT_THROW(ExtendedLangfordSequence(4, 5, 6, std::vector<int>(11, kHole)).pairs(), InvalidSequence);
}

TEST(SearchSequenceTest, ExampleOneOrder) {
  const auto s = search_sequence(4, 5, 6);
  EXPECT_TRUE(validate_sequence(s).ok());
  EXPECT_EQ(s.k(), 6);
  const auto free = search_sequence(4, 5);
  EXPECT_EQ(free.k(), 6);
  EXPECT_EQ(free, s);
}

TEST(SearchSequenceTest, RejectsInadmissibleHole) {
  EXPECT_THROW(search_sequence(4, 5, 3), PreconditionViolated);
  EXPECT_THROW(search_sequence(4, 4), PreconditionViolated);
  EXPECT_THROW(search_sequence(4, 0), PreconditionViolated);
}

TEST(SearchSequenceTest, PipelineLengths) {
  for (int m : {17, 25, 45, 65, 85}) {
    const auto s = search_sequence(4, m);
    EXPECT_TRUE(validate_sequence(s).ok()) << "m=" << m;
    EXPECT_EQ(s.m(), m);
    EXPECT_EQ(s.k() % 2, 0);
  }
}

TEST(SearchSequenceTest, Deterministic) {
  EXPECT_EQ(search_sequence(4, 45), search_sequence(4, 45));
  EXPECT_EQ(search_sequence(4, 17, 10), search_sequence(4, 17, 10));
}

TEST(SearchSequenceTest, BudgetIsReported) {
  SearchBudget tiny;
  tiny.max_nodes = 1;
  EXPECT_THROW(search_sequence(4, 45, 2, tiny), SearchExhausted);
  EXPECT_THROW(search_sequence(4, 45, std::nullopt, tiny), SearchExhausted);
  SearchBudget no_time;
  no_time.time_limit = std::chrono::milliseconds(0);
  EXPECT_THROW(search_sequence(4, 45, std::nullopt, no_time), SearchExhausted);
}

TEST(SearchSequenceTest, ProvablyEmptyHoleIsExhausted) {
  // d = 1, m = 2 with the hole at slot 1 has no solution.
  ASSERT_TRUE(brute_force_langford(1, 2, 1).empty());
  EXPECT_THROW(search_sequence(1, 2, 1), SearchExhausted);
}

TEST(EnumerateSequencesTest, MatchesBruteForceAtM5) {
  const auto oracle = brute_force_langford(4, 5, 6);
  const auto found = enumerate_sequences(4, 5, 6);
  // Frozen from the brute-force oracle above.
  constexpr std::size_t kN5 = 6;
  EXPECT_EQ(oracle.size(), kN5);
  ASSERT_EQ(found.size(), kN5);

  std::vector<std::vector<int>> slots;
  for (const auto& s : found) {
    EXPECT_TRUE(validate_sequence(s).ok());
    slots.push_back(s.slots());
  }
  std::sort(slots.begin(), slots.end());
  EXPECT_EQ(std::adjacent_find(slots.begin(), slots.end()), slots.end());
  EXPECT_EQ(slots, oracle);

  EXPECT_NE(std::find(found.begin(), found.end(), example1()), found.end());
  EXPECT_NE(std::find(found.begin(), found.end(), example1().reversed()), found.end());
}

TEST(EnumerateSequencesTest, MatchesBruteForceAtM6) {
  for (int k : admissible_k_set(6)) {
    std::vector<std::vector<int>> slots;
    for (const auto& s : enumerate_sequences(4, 6, k)) slots.push_back(s.slots());
    std::sort(slots.begin(), slots.end());
    EXPECT_EQ(slots, brute_force_langford(4, 6, k)) << "k=" << k;
  }
}

TEST(EnumerateSequencesTest, ReversalClosure) {
  const auto all = enumerate_sequences(4, 5, 6);
  for (const auto& s : all) {
    const auto r = s.reversed();
    EXPECT_TRUE(validate_sequence(r).ok());
    EXPECT_NE(std::find(all.begin(), all.end(), r), all.end());
  }
}

TEST(EnumerateSequencesTest, FirstMatchesSearchAndPairsCoverSlots) {
  for (int m = 5; m <= 8; ++m) {
    for (int k : admissible_k_set(m)) {
      const auto all = enumerate_sequences(4, m, k);
      if (all.empty()) {
        EXPECT_THROW(search_sequence(4, m, k), SearchExhausted);
        continue;
      }
      EXPECT_EQ(all.front(), search_sequence(4, m, k)) << "m=" << m << " k=" << k;
      for (const auto& s : all) {
        std::vector<int> covered;
        for (auto [a, b] : s.pairs()) covered.insert(covered.end(), {a, b});
        std::sort(covered.begin(), covered.end());
        std::vector<int> expected;
        for (int p = 1; p <= 2 * m + 1; ++p)
          if (p != k) expected.push_back(p);
        EXPECT_EQ(covered, expected);
      }
    }
  }
}

TEST(EnumerateSequencesTest, EarlyStopAndScaleLimit) {
  std::size_t seen = 0;
  enumerate_sequences(4, 5, 6, [&](const ExtendedLangfordSequence&) { return ++seen < 2; });
  EXPECT_EQ(seen, 2u);
  EXPECT_THROW(enumerate_sequences(4, 9, 2), OracleScaleExceeded);
}

TEST(SequenceFileTest, FormatAndParse) {
  EXPECT_EQ(format_sequence(example1()), "d=4 m=5 k=6\n8 6 4 7 5 _ 4 6 8 5 7\n");
  EXPECT_EQ(parse_sequence(testing::read_fixture("example1.seq")), example1());
  for (const auto& s : enumerate_sequences(4, 7, 3)) EXPECT_EQ(parse_sequence(format_sequence(s)), s);
}

TEST(SequenceFileTest, ParseErrors) {
  EXPECT_THROW(parse_sequence(""), ParseError);
  EXPECT_THROW(parse_sequence("d=4 m=5\n8 6 4 7 5 _ 4 6 8 5 7\n"), ParseError);
  EXPECT_THROW(parse_sequence("d=4 m=5 k=6\n8 6 4 7 5 _ 4 6 8 5\n"), ParseError);
  EXPECT_THROW(parse_sequence("d=4 m=5 k=6\n8 6 4 7 5 ? 4 6 8 5 7\n"), ParseError);
  EXPECT_THROW(parse_sequence("d=4 m=5 k=x\n8 6 4 7 5 _ 4 6 8 5 7\n"), ParseError);
  EXPECT_THROW(parse_sequence("d=4 m=5 k=6\n"), ParseError);
}

}  // namespace
}  // namespace asms
