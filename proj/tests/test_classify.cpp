#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "ttk/classify.hpp"

using namespace ttk;

static bool has_match(const FamilyMap& map, Triple t, int family, const Witness& w) {
  auto it = map.find(t);
  if (it == map.end()) return false;
  for (const auto& m : it->second)
    if (m.family_index == family && m.witness == w) return true;
  return false;
}

TEST(Triples, ValidationAndNormalization) {
  EXPECT_TRUE(is_valid_triple({5, 3, 4}));
  EXPECT_FALSE(is_valid_triple({6, 3, 4}));
  EXPECT_FALSE(is_valid_triple({5, 3, 9}));
  EXPECT_FALSE(is_valid_triple({5, 3, 1}));
  EXPECT_EQ(normalized({3, 5, 4}), (Triple{5, 3, 4}));
  EXPECT_THROW(is_pp({6, 3, 4}), Error);
}

TEST(PrimitivePrimitive, Predicate) {
  EXPECT_TRUE(is_pp({4, 3, 5}));
  EXPECT_TRUE(is_pp({5, 3, 4}));
  EXPECT_FALSE(is_pp({5, 3, 6}));
}

TEST(PrimitivePrimitive, PredicateIsSymmetricCongruence) {
  auto cong = [](long r, long m, long x) { return ((r - x) % m + m) % m == 0; };
  auto side = [&](long r, long m, long other) {
    return cong(r, m, 1) || cong(r, m, -1) || cong(r, m, other) || cong(r, m, -other);
  };
  for (long p = 3; p <= 25; ++p)
    for (long q = 2; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (long r = 2; r <= p + q; ++r) {
        ASSERT_EQ(is_pp({p, q, r}), side(r, p, q) && side(r, q, p)) << p << "," << q << "," << r;
        ASSERT_EQ(is_pp(normalized({q, p, r})), is_pp({p, q, r}));
      }
    }
}

TEST(PrimitivePrimitive, FamilyExamples) {
  const FamilyMap fam = pp_families(20);
  EXPECT_TRUE(has_match(fam, {4, 3, 5}, 4, {{"j", 1}, {"epsilon", -1}}));
  EXPECT_TRUE(has_match(fam, {5, 3, 4}, 5, {{"j", 1}, {"k", 1}, {"epsilon", 1}}));
  EXPECT_FALSE(has_match(fam, {1, 3, 2}, 5, {{"j", 1}, {"k", 1}, {"epsilon", -1}}));
  for (const auto& [t, ms] : fam)
    for (const auto& m : ms)
      if (m.family_index == 5) {
        ASSERT_FALSE(m.witness == (Witness{{"j", 1}, {"k", 1}, {"epsilon", -1}}));
      }
  EXPECT_EQ(fam.count({6, 3, 9}), 0u);
}

TEST(PrimitivePrimitive, WitnessesReproduceTriples) {
  for (const auto& [t, ms] : pp_families(40))
    for (const auto& m : ms) {
      auto w = [&](const char* n) { return *witness_value(m, n); };
      Triple g{};
      switch (m.family_index) {
        case 1: g = {t.p, t.q, t.p + t.q}; break;
        case 2: g = {t.p, t.q, t.p - t.q}; break;
        case 3: {
          const long i = w("i"), j = w("j"), d = w("delta"), base = 2 * i * j + i + j;
          g = {base + (1 + d) / 2, 2 * j + 1, base + (1 - d) / 2};
          break;
        }
        case 4: g = {3 * w("j") + 1 + (1 + w("epsilon")) / 2, 2 * w("j") + 1, 4 * w("j") + 2 + w("epsilon")}; break;
        default: {
          const long q = 2 * w("j") + 1;
          g = {w("k") * q + 2 * w("epsilon"), q, w("k") * q + w("epsilon")};
        }
      }
      ASSERT_EQ(normalized(g), t) << t.to_string() << " family " << m.family_index;
    }
}

TEST(PrimitivePrimitive, CensusIsExact) {
  for (long bound : {20L, 60L}) {
    const auto rep = pp_census(bound);
    EXPECT_TRUE(rep.missing.empty()) << bound;
    EXPECT_TRUE(rep.extra.empty()) << bound;
    EXPECT_TRUE(rep.clean());
  }
}

TEST(PrimitivePrimitive, LaterFamiliesAvoidSumAndDifference) {
  const auto hits = pp_later_families_at_sum_or_difference(60);
  std::ostringstream listing;
  for (const auto& [t, m] : hits) {
    listing << t.to_string() << " family " << m.family_index;
    for (const auto& [k, v] : m.witness) listing << " " << k << "=" << v;
    listing << "\n";
  }
  EXPECT_TRUE(hits.empty()) << hits.size() << " family 3..5 triples with r = p +- q:\n" << listing.str();
}

TEST(PrimitivePrimitive, SumOrDifferenceHitsAreSwappedFamily3) {
  for (const auto& [t, m] : pp_later_families_at_sum_or_difference(60)) {
    EXPECT_EQ(m.family_index, 3) << t.to_string();
    EXPECT_EQ(witness_value(m, "i"), 0) << t.to_string();
    EXPECT_EQ(t.r, t.p - t.q);
  }
}

TEST(MiddleSeifert, Predicates) {
  EXPECT_EQ(middle_seifert_beta({7, 3, 8}), 2);
  EXPECT_FALSE(middle_seifert_beta({4, 3, 5}).has_value());
  EXPECT_EQ(middle_seifert_beta({11, 2, 7}), 2);
  EXPECT_TRUE(is_primitive_Hprime({7, 3, 8}));
  EXPECT_TRUE(is_ps({7, 3, 8}));
}

TEST(MiddleSeifert, FamilyExamples) {
  const FamilyMap fam = ps_families(20);
  EXPECT_TRUE(has_match(fam, {7, 2, 3}, 1, {{"k", 2}}));
  EXPECT_TRUE(has_match(fam, {7, 3, 8}, 2, {{"i", 1}}));
  EXPECT_TRUE(has_match(fam, {8, 3, 10}, 3, {{"i", 2}, {"j", 1}, {"epsilon", 1}}));
  EXPECT_TRUE(is_ps({8, 3, 10}));
}

TEST(MiddleSeifert, CensusFlagsOnlyKnownShapes) {
  const auto rep = ps_census(60);
  EXPECT_TRUE(rep.missing.empty());
  EXPECT_TRUE(rep.undocumented.empty());
  EXPECT_TRUE(rep.clean());
  const std::set<Triple> extra(rep.extra.begin(), rep.extra.end());
  EXPECT_TRUE(extra.count({4, 3, 5}));
  EXPECT_TRUE(extra.count({5, 3, 7}));
  for (const auto& row : rep.rows) {
    if (!extra.count(row.triple)) continue;
    for (const auto& m : row.ps_families)
      ASSERT_TRUE((m.family_index == 2 && row.triple.p < 7) || (m.family_index == 3 && witness_value(m, "i") == 1))
          << row.triple.to_string();
  }
}

TEST(MiddleSeifert, UndocumentedShapeIsCaught) {
  FamilyMatch odd{Classification::ps, 1, {{"k", 2}}};
  EXPECT_FALSE(is_documented_ps_exception({9, 4, 1}, odd));
  FamilyMatch f2{Classification::ps, 2, {{"i", 1}}};
  EXPECT_TRUE(is_documented_ps_exception({4, 3, 5}, f2));
  EXPECT_FALSE(is_documented_ps_exception({7, 3, 8}, f2));
}

TEST(HyperSeifert, Predicate) {
  EXPECT_TRUE(is_p_hyperseifert({5, 3, 4, 2, 1}));
  EXPECT_FALSE(is_p_hyperseifert({5, 3, 4, 1, 1}));
  EXPECT_FALSE(is_p_hyperseifert({5, 3, 6, 3, 1}));
}

TEST(Census, RowsRoundTrip) {
  const auto rep = ps_census(15);
  ASSERT_FALSE(rep.rows.empty());
  EXPECT_TRUE(std::is_sorted(rep.rows.begin(), rep.rows.end(),
                             [](const CensusRow& a, const CensusRow& b) { return a.triple < b.triple; }));
  for (const auto& row : rep.rows) {
    ASSERT_EQ(census_row_from_json(to_json(row).dump()), row) << to_json(row).dump();
    ASSERT_EQ(census_row_from_csv(to_csv(row)), row) << to_csv(row);
  }
  const auto& sample = *std::find_if(rep.rows.begin(), rep.rows.end(),
                                     [](const CensusRow& r) { return r.triple == Triple{4, 3, 5}; });
  EXPECT_EQ(to_json(sample).dump(),
            R"({"p":4,"q":3,"r":5,"pp":true,"pp_families":[{"index":3,"witness":{"i":1,"j":1,"delta":-1}},)"
            R"({"index":4,"witness":{"j":1,"epsilon":-1}},{"index":5,"witness":{"j":1,"k":2,"epsilon":-1}}],)"
            R"("ps":false,"ps_beta":null,"ps_families":[{"index":2,"witness":{"i":1}},)"
            R"({"index":3,"witness":{"i":1,"j":1,"epsilon":-1}}],"flags":["ps_predicate_invalid"]})");
  EXPECT_THROW(census_row_from_csv("1,2,3"), Error);
  EXPECT_THROW(census_row_from_json("{}"), Error);
}
