#include <gtest/gtest.h>

#include <algorithm>

#include "j4free/error.hpp"
#include "j4free/number_theory.hpp"
#include "j4free/predict.hpp"
#include "j4free/search.hpp"
#include "j4free/singer.hpp"

using namespace j4free;

namespace {

bool all_hold(const Prediction& p, const std::vector<std::size_t>& w) {
  for (const auto& o : evaluate(p, w)) {
    if (!o.holds) return false;
  }
  return true;
}

}  // namespace

TEST(Predict, BaerExactSequence) {
  const auto p = predict_profile(StructureKind::projective, 9, 13);
  EXPECT_EQ(p.strongest, PredictionKind::exact_sequence);
  ASSERT_TRUE(p.sequence);
  EXPECT_EQ(*p.sequence, (std::vector<std::size_t>{4, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(orbit_decompose(pg2_singer(9), 13).w, *p.sequence);
}

TEST(Predict, KestenbandEbertHistogram) {
  const auto p = predict_profile(StructureKind::projective, 9, 7);
  ASSERT_TRUE(p.histogram);
  EXPECT_EQ(*p.histogram, (std::map<std::size_t, std::size_t>{{0, 6}, {1, 4}, {2, 3}}));
  EXPECT_TRUE(all_hold(p, orbit_decompose(pg2_singer(9), 7).w));
}

TEST(Predict, TransitiveTauForOrderEightyOne) {
  const auto p = predict_profile(StructureKind::projective, 81, 949);
  ASSERT_TRUE(p.sequence);
  std::vector<std::size_t> want(7, 13);
  want[0] = 4;
  EXPECT_EQ(*p.sequence, want);
  EXPECT_EQ(orbit_decompose(pg2_singer(81), 949).w, want);
}

TEST(Predict, ThreeOrbitCases) {
  // q = 4: p = 2 = 2 mod 3, h = 2.
  const auto p4 = predict_profile(StructureKind::projective, 4, 7);
  ASSERT_TRUE(p4.multiset);
  EXPECT_EQ(*p4.multiset, (std::vector<std::size_t>{1, 1, 3}));
  // q = 16: h = 4.
  const auto p16 = predict_profile(StructureKind::projective, 16, 91);
  ASSERT_TRUE(p16.multiset);
  EXPECT_EQ(*p16.multiset, (std::vector<std::size_t>{3, 7, 7}));
  for (std::uint32_t q : {4u, 7u, 13u, 16u, 19u, 25u, 31u, 37u, 43u, 49u, 61u, 64u, 67u}) {
    const std::size_t v = std::size_t{q} * q + q + 1;
    if (v % 3 != 0) continue;
    const auto p = predict_profile(StructureKind::projective, q, v / 3);
    EXPECT_TRUE(all_hold(p, orbit_decompose(pg2_singer(q), v / 3).w)) << q;
  }
}

TEST(Predict, PairSumsContainObservedSums) {
  const auto sums = three_orbit_pair_sums(7);
  const auto w = orbit_decompose(pg2_singer(7), 19).w;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) EXPECT_TRUE(std::binary_search(sums.begin(), sums.end(), w[i] + w[j]));
  }
}

TEST(Predict, DEqualsThreeHistogram) {
  for (std::uint32_t q : {4u, 7u, 13u}) {
    const std::size_t v = std::size_t{q} * q + q + 1;
    const auto p = predict_profile(StructureKind::projective, q, 3);
    ASSERT_TRUE(p.histogram);
    EXPECT_TRUE(all_hold(p, orbit_decompose(pg2_singer(q), 3).w));
    EXPECT_EQ(p.t, v / 3);
  }
}

TEST(Predict, AffineTDividesQPlusOne) {
  for (std::uint32_t q : {7u, 9u, 11u, 13u, 17u, 19u}) {
    const std::size_t v = std::size_t{q} * q - 1;
    for (auto t : divisors(q + 1)) {
      if (t < 2) continue;
      const auto p = predict_profile(StructureKind::antiflag, q, v / t);
      ASSERT_TRUE(p.multiset);
      EXPECT_EQ(*p.multiset, orbit_decompose(antiflag_singer(q), v / t).multiset()) << q << " t=" << t;
    }
  }
}

TEST(Predict, AffineTDividesQMinusOneBounds) {
  for (std::uint32_t q : {7u, 11u, 13u, 17u}) {
    const std::size_t v = std::size_t{q} * q - 1;
    for (auto t : divisors(q - 1)) {
      if (t < 2) continue;
      const auto p = predict_profile(StructureKind::antiflag, q, v / t);
      EXPECT_TRUE(all_hold(p, orbit_decompose(antiflag_singer(q), v / t).w));
    }
  }
}

TEST(Predict, UniversalWhenNothingApplies) {
  const auto p = predict_profile(StructureKind::projective, 2, 7);
  EXPECT_EQ(p.strongest, PredictionKind::universal);
  EXPECT_THROW(predict_profile(StructureKind::projective, 4, 5), Error);
}

TEST(Predict, LengthMismatchIsAnError) {
  const auto p = predict_profile(StructureKind::projective, 9, 13);
  EXPECT_THROW(evaluate(p, {1, 2}), Error);
}

TEST(Search, OrderSevenRows) {
  const auto rows = search_profiles(7, StructureKind::projective, 2);
  bool found19 = false, found3 = false;
  for (const auto& r : rows) {
    EXPECT_TRUE(r.identities_ok);
    EXPECT_TRUE(r.predictors_failed.empty());
    if (r.d == 19) {
      found19 = true;
      EXPECT_EQ(r.multiset(), (std::vector<std::size_t>{1, 3, 4}));
    }
    if (r.d == 3) {
      found3 = true;
      EXPECT_EQ(format_multiset(r.w), "0^12,1^6,2");
    }
  }
  EXPECT_TRUE(found19 && found3);
}

TEST(Search, AntiflagThirteenHasThreeOrbitRow) {
  const auto rows = search_profiles(13, StructureKind::antiflag, 0);
  const auto it = std::find_if(rows.begin(), rows.end(), [](const ProfileRow& r) { return r.d == 56; });
  ASSERT_NE(it, rows.end());
  EXPECT_EQ(it->t, 3u);
  EXPECT_EQ(it->multiset(), (std::vector<std::size_t>{2, 5, 6}));
}

TEST(Search, OrderTwoHasOnlyTheTrivialRow) {
  const auto rows = search_profiles(2, StructureKind::projective, 1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].d, 7u);
  EXPECT_EQ(rows[0].t, 1u);
}

TEST(Search, TsvAndJsonOutput) {
  const auto rows = search_profiles(4, StructureKind::projective, 1);
  const auto tsv = profiles_to_tsv(rows);
  EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "q\td\tt\tw_multiset\tpredictors_matched\tidentities_ok");
  EXPECT_NE(profiles_to_json(rows).find("\"w_multiset\""), std::string::npos);
}

TEST(Predict, ConicUnionAllowsZeroAsExtraValue) {
  const auto p = predict_profile(StructureKind::antiflag, 7, 8);
  ASSERT_TRUE(p.max_weight && p.max_distinct);
  EXPECT_EQ(*p.max_weight, 2u);
  EXPECT_EQ(*p.max_distinct, 3u);
  EXPECT_EQ(orbit_decompose(antiflag_singer(7), 8).multiset(), (std::vector<std::size_t>{0, 0, 1, 2, 2, 2}));
}
