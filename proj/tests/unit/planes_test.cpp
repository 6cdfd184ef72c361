#include <gtest/gtest.h>

#include <algorithm>

#include "j4free/error.hpp"
#include "j4free/incidence.hpp"
#include "j4free/planes.hpp"
#include "oracles.hpp"

using namespace j4free;

TEST(Planes, ProjectiveSingerBlocksArePerfectDifferenceSets) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 16u, 25u, 27u, 32u}) {
    const auto c = pg2_singer(q);
    EXPECT_EQ(c.v, q * q + q + 1);
    EXPECT_EQ(c.k, q + 1);
    EXPECT_TRUE(oracle::naive_perfect_difference_set(c.base_block, c.v)) << q;
    EXPECT_TRUE(is_perfect_difference_set(c.base_block, c.v));
  }
}

TEST(Planes, AntiflagBlocksHaveDistinctDifferences) {
  for (std::uint32_t q : {2u, 3u, 4u, 7u, 8u, 9u, 13u, 16u, 27u, 32u}) {
    const auto c = antiflag_singer(q);
    EXPECT_EQ(c.v, q * q - 1);
    EXPECT_EQ(c.k, q);
    EXPECT_TRUE(oracle::naive_distinct_differences(c.base_block, c.v)) << q;
    EXPECT_TRUE(has_distinct_differences(c.base_block, c.v));
  }
}

TEST(Planes, AntiflagOfOrderTwoIsTheTriangle) {
  const auto c = antiflag_singer(2);
  const auto m = c.incidence();
  EXPECT_EQ(check_configuration(m), (ConfigParams{3, 3, 2, 2}));
}

TEST(Planes, BaseBlocksAreClosedUnderTheCharacteristic) {
  for (std::uint32_t q : {4u, 7u, 9u, 16u, 27u}) {
    for (auto kind : {StructureKind::projective, StructureKind::antiflag}) {
      const auto c = singer_structure(kind, q);
      for (auto b : c.base_block) {
        EXPECT_TRUE(std::binary_search(c.base_block.begin(), c.base_block.end(), b * c.p % c.v)) << q;
      }
    }
  }
}

TEST(Planes, CyclicIncidenceIsASymmetricConfiguration) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 16u}) {
    EXPECT_EQ(check_configuration(pg2_singer(q).incidence()), (ConfigParams{q * q + q + 1, q * q + q + 1, q + 1, q + 1}));
    EXPECT_EQ(check_configuration(antiflag_singer(q).incidence()), (ConfigParams{q * q - 1, q * q - 1, q, q}));
  }
}

TEST(Planes, CoordinateModelSatisfiesPlaneAxioms) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    const auto plane = pg2_coords(q);
    const std::size_t v = q * q + q + 1;
    ASSERT_EQ(plane.size(), v);
    ASSERT_EQ(plane.lines.size(), v);
    std::size_t flags = 0;
    for (const auto& l : plane.line_points) {
      EXPECT_EQ(l.size(), q + 1u);
      flags += l.size();
    }
    EXPECT_EQ(flags, v * (q + 1));
    // Two points on exactly one line.
    const auto m = plane.incidence();
    const auto cols = m.col_supports();
    for (std::size_t a = 0; a < v; ++a) {
      for (std::size_t b = a + 1; b < v; ++b) {
        std::vector<std::size_t> common;
        std::set_intersection(cols[a].begin(), cols[a].end(), cols[b].begin(), cols[b].end(), std::back_inserter(common));
        ASSERT_EQ(common.size(), 1u);
      }
    }
  }
}

TEST(Planes, CoordinateModelMatchesBruteForcePrimePlanes) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const auto plane = pg2_coords(q);
    EXPECT_EQ(plane.line_points, oracle::prime_plane_lines(q)) << q;
  }
}

TEST(Planes, CyclicAndCoordinateModelsHaveEqualParameters) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    EXPECT_EQ(check_configuration(pg2_singer(q).incidence()), check_configuration(pg2_coords(q).incidence()));
  }
}

TEST(Planes, SpecialPointSetSizes) {
  const auto p4 = pg2_coords(4);
  EXPECT_EQ(special_point_set(p4, PointSetKind::hyperoval_complement).size(), 15u);
  const auto p5 = pg2_coords(5);
  EXPECT_EQ(special_point_set(p5, PointSetKind::conic_internal).size(), 10u);
  EXPECT_EQ(special_point_set(p5, PointSetKind::conic_external).size(), 15u);
  const auto p9 = pg2_coords(9);
  EXPECT_EQ(hermitian_points(p9).size(), 28u);
  EXPECT_EQ(special_point_set(p9, PointSetKind::hermitian_complement).size(), 63u);
  EXPECT_EQ(conic_points(p9).size(), 10u);
}

TEST(Planes, ConicPointClassificationByTangentCount) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u}) {
    const auto plane = pg2_coords(q);
    const auto conic = conic_points(plane);
    std::vector<bool> on(plane.size(), false);
    for (auto x : conic) on[x] = true;
    const auto internal = special_point_set(plane, PointSetKind::conic_internal);
    const auto external = special_point_set(plane, PointSetKind::conic_external);
    for (std::size_t x = 0; x < plane.size(); ++x) {
      if (on[x]) continue;
      std::size_t tangents = 0;
      for (auto l : plane.point_lines[x]) {
        std::size_t meet = 0;
        for (auto y : plane.line_points[l]) meet += on[y] ? 1 : 0;
        tangents += meet == 1 ? 1 : 0;
      }
      EXPECT_EQ(internal.member[x], tangents == 0);
      EXPECT_EQ(external.member[x], tangents == 2);
    }
    EXPECT_EQ(internal.size(), q * (q - 1) / 2);
    EXPECT_EQ(external.size(), q * (q + 1) / 2);
  }
}

TEST(Planes, HyperovalMeetsEveryLineInZeroOrTwoPoints) {
  for (std::uint32_t q : {2u, 4u, 8u, 16u}) {
    const auto plane = pg2_coords(q);
    const auto comp = special_point_set(plane, PointSetKind::hyperoval_complement);
    EXPECT_EQ(comp.size(), q * q - 1);
    for (const auto& l : plane.line_points) {
      std::size_t outside = 0;
      for (auto x : l) outside += comp.member[x] ? 0 : 1;
      EXPECT_TRUE(outside == 0 || outside == 2);
    }
  }
}

TEST(Planes, PointSetParityErrors) {
  const auto p5 = pg2_coords(5);
  EXPECT_THROW(special_point_set(p5, PointSetKind::hyperoval_complement), Error);
  EXPECT_THROW(special_point_set(p5, PointSetKind::hermitian_complement), Error);
  const auto p4 = pg2_coords(4);
  try {
    special_point_set(p4, PointSetKind::conic_internal);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parity_mismatch);
  }
}

TEST(Planes, ParseNames) {
  EXPECT_EQ(parse_structure("antiflag"), StructureKind::antiflag);
  EXPECT_EQ(parse_point_set_kind("hyperoval"), PointSetKind::hyperoval_complement);
  EXPECT_THROW(parse_point_set_kind("ellipse"), Error);
}
