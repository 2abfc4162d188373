#include <gtest/gtest.h>

#include "ttk/horadam.hpp"

using namespace ttk;

TEST(HoradamTerms, SmallValues) {
  EXPECT_EQ(horadam_term(unit_horadam(2, 7), 4), 25);
  EXPECT_EQ(fibonacci(2), 1);
  EXPECT_EQ(fibonacci(7), 13);
  const auto seq = horadam_terms(unit_horadam(2, 7), 5);
  EXPECT_EQ(seq, (std::vector<Integer>{2, 7, 9, 16, 25}));
}

TEST(HoradamTerms, GeneralCoefficients) {
  // H_k = 2 H_{k-2} + 3 H_{k-1}: 1, 1, 5, 17, 61
  HoradamSpec spec{1, 1, 2, 3};
  EXPECT_EQ(horadam_term(spec, 4), 61);
}

TEST(HoradamTerms, ClosedFormMatchesRecursion) {
  EXPECT_EQ(closed_form_term(2, 7, 3), 16);
  EXPECT_EQ(closed_form_term(0, 1, 5), 5);
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; n <= 12; ++n) {
      EXPECT_EQ(closed_form_term(m, n, 1), n);
      for (std::size_t k = 1; k <= 20; ++k) ASSERT_EQ(closed_form_term(m, n, k), horadam_term(unit_horadam(m, n), k));
    }
}

TEST(HoradamTerms, LargeIndicesStayExact) {
  // F_100
  EXPECT_EQ(fibonacci(100).get_str(), "354224848179261915075");
}

TEST(Slopes, InvariantAndValues) {
  EXPECT_EQ(invariant_s(2, 3), 1);
  EXPECT_EQ(invariant_s(0, 1), -1);
  EXPECT_EQ(invariant_s(2, 7), -31);
  const auto spec = unit_horadam(2, 7);
  EXPECT_EQ(slope_s(spec, 1), 59);
  EXPECT_EQ(slope_s(spec, 2), 95);
  EXPECT_EQ(slope_t(spec, 1), 193);
}

TEST(Slopes, RelationsHoldForSmallSeeds) {
  EXPECT_TRUE(check_slope_relations(unit_horadam(2, 3), 2).ok());
  EXPECT_TRUE(check_slope_relations(unit_horadam(0, 1), 10).ok());
  EXPECT_TRUE(check_slope_relations(unit_horadam(2, 7), 2).ok());
  for (int m = 1; m <= 15; ++m)
    for (int n = 1; n <= 15; ++n) {
      const auto rep = check_slope_relations(unit_horadam(m, n), 20);
      ASSERT_TRUE(rep.ok()) << m << "," << n;
      EXPECT_GT(rep.checked, 0u);
    }
}

TEST(Slopes, RejectsNonUnitRecursion) {
  EXPECT_THROW(check_slope_relations(HoradamSpec{1, 2, 2, 1}, 5), Error);
  EXPECT_THROW(slope_s(HoradamSpec{1, 2, 2, 1}, 1), Error);
  EXPECT_THROW(slope_s(unit_horadam(1, 2), 0), Error);
}

TEST(Slopes, GapsAtLeastTwo) {
  for (int m = 1; m <= 12; ++m)
    for (int n = 1; n <= 12; ++n) {
      const auto spec = unit_horadam(m, n);
      for (std::size_t k = 2; k < 15; ++k) {
        ASSERT_GE(slope_s(spec, k + 1) - slope_s(spec, k), 2) << m << "," << n << " k=" << k;
        ASSERT_GE(slope_t(spec, k) - slope_t(spec, k - 1), 2);
      }
      if (m < n) {
        EXPECT_GT(slope_s(spec, 2), slope_s(spec, 1));
      }
    }
}

TEST(Euclid, Traces) {
  auto t = euclid_trace(8, 13);
  EXPECT_EQ(t.quotients, (std::vector<Integer>{1, 1, 1, 1}));
  EXPECT_EQ(t.remainders, (std::vector<Integer>{5, 3, 2, 1}));
  t = euclid_trace(2, 7);
  EXPECT_EQ(t.quotients, (std::vector<Integer>{3}));
  EXPECT_EQ(t.remainders, (std::vector<Integer>{1}));
  t = euclid_trace(3, 7);
  EXPECT_EQ(t.quotients, (std::vector<Integer>{2}));
  EXPECT_EQ(t.final_quotient(), 2);
}

TEST(Euclid, RejectsBadPairs) {
  EXPECT_THROW(euclid_trace(4, 6), Error);
  EXPECT_THROW(euclid_trace(7, 3), Error);
  EXPECT_THROW(euclid_trace(0, 3), Error);
}

TEST(MaximalPairs, Examples) {
  EXPECT_TRUE(is_maximal_pair(8, 13));
  EXPECT_TRUE(is_maximal_pair(3, 7));
  EXPECT_FALSE(is_maximal_pair(2, 7));
  EXPECT_TRUE(is_maximal_pair(2, 3));
}

TEST(Embedding, Examples) {
  EXPECT_EQ(embed_in_unit_sequence(4, 7), (Embedding{+1, 3, 2}));
  EXPECT_EQ(embed_in_unit_sequence(3, 7), (Embedding{-1, 4, 2}));
  EXPECT_FALSE(embed_in_unit_sequence(2, 7).has_value());
  EXPECT_EQ(embed_in_unit_sequence(2, 3), (Embedding{+1, 2, 1}));
}

TEST(Embedding, ExhaustiveAgreesWithBruteForce) {
  for (int n = 3; n <= 200; ++n)
    for (int m = 2; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      const bool maximal = is_maximal_pair(m, n);
      const auto e = embed_in_unit_sequence(m, n);
      ASSERT_EQ(e.has_value(), maximal) << m << "," << n;
      ASSERT_EQ(search_unit_embedding(m, n).has_value(), maximal) << m << "," << n;
      if (e) {
        ASSERT_GE(e->a, 2);
      }
    }
}

TEST(MaximalPairs, PropagateAlongSequence) {
  for (int m = 1; m <= 40; ++m)
    for (int n = 1; n <= 40; ++n) {
      if (m >= n || std::gcd(m, n) != 1 || m == 1) continue;
      const bool maximal = is_maximal_pair(m, n);
      const auto H = horadam_terms(unit_horadam(m, n), 8);
      for (std::size_t j = 1; j <= 6; ++j) ASSERT_EQ(is_maximal_pair(H[j], H[j + 1]), maximal) << m << "," << n;
    }
}
