#include <gtest/gtest.h>

#include <random>

#include "j4free/error.hpp"
#include "j4free/incidence.hpp"
#include "j4free/planes.hpp"
#include "j4free/singer.hpp"
#include "oracles.hpp"

using namespace j4free;

namespace {

Matrix01 identity(std::size_t n) {
  Matrix01 m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Matrix01 ones(std::size_t r, std::size_t c) {
  Matrix01 m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j);
  }
  return m;
}

oracle::BitMatrix bits(const Matrix01& m) {
  oracle::BitMatrix b(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) b[i][j] = m.get(i, j);
  }
  return b;
}

}  // namespace

TEST(Incidence, J4Examples) {
  EXPECT_TRUE(is_j4_free(identity(3)));
  EXPECT_FALSE(is_j4_free(ones(2, 2)));
  EXPECT_TRUE(is_j4_free(pg2_singer(2).incidence()));
}

TEST(Incidence, FourCycleReportsCorners) {
  Matrix01 m(3, 4);
  m.set(0, 1);
  m.set(0, 3);
  m.set(2, 1);
  m.set(2, 3);
  const auto c = find_four_cycle(m);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->row_a, 0u);
  EXPECT_EQ(c->row_b, 2u);
  EXPECT_EQ(c->col_a, 1u);
  EXPECT_EQ(c->col_b, 3u);
}

TEST(Incidence, CheckConfigurationOnPlanes) {
  EXPECT_EQ(check_configuration(pg2_singer(2).incidence()), (ConfigParams{7, 7, 3, 3}));
  EXPECT_EQ(check_configuration(pg2_singer(4).incidence()), (ConfigParams{21, 21, 5, 5}));
}

TEST(Incidence, CheckConfigurationErrors) {
  auto m = pg2_singer(2).incidence();
  for (auto j : m.row_support(3)) m.set(3, j, false);
  try {
    check_configuration(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::irregular_row);
    EXPECT_EQ(e.where(), std::vector<std::size_t>{3});
  }
  Matrix01 col(2, 2);
  col.set(0, 0);
  col.set(1, 0);
  try {
    check_configuration(col);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::irregular_column);
  }
  try {
    check_configuration(ones(2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::four_cycle_found);
    EXPECT_EQ(e.where().size(), 4u);
  }
}

TEST(Incidence, TransposeOfAConfiguration) {
  for (std::uint32_t q : {3u, 4u, 7u}) {
    const auto m = pg2_singer(q).incidence();
    EXPECT_EQ(check_configuration(m.transpose()), check_configuration(m).transposed());
  }
  Matrix01 m(2, 4);
  m.set(0, 0);
  m.set(0, 1);
  m.set(1, 2);
  m.set(1, 3);
  EXPECT_EQ(check_configuration(m), (ConfigParams{2, 4, 2, 1}));
  EXPECT_EQ(check_configuration(m.transpose()), (ConfigParams{4, 2, 1, 2}));
}

TEST(Incidence, GirthExamples) {
  EXPECT_EQ(bipartite_girth(pg2_singer(2).incidence()), std::optional<std::size_t>(6));
  EXPECT_EQ(bipartite_girth(ones(2, 2)), std::optional<std::size_t>(4));
  EXPECT_EQ(bipartite_girth(identity(2)), std::nullopt);
  EXPECT_EQ(bipartite_girth(Matrix01(3, 3)), std::nullopt);
}

TEST(Incidence, J4FreeIffGirthAtLeastSix) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 20, c = 1 + rng() % 20;
    Matrix01 m(r, c);
    const std::size_t units = rng() % (r * c / 3 + 2);
    for (std::size_t k = 0; k < units; ++k) m.set(rng() % r, rng() % c);
    const auto g = bipartite_girth(m);
    EXPECT_EQ(is_j4_free(m), !g || *g >= 6);
    EXPECT_EQ(is_j4_free(m), oracle::naive_j4_free(bits(m)));
  }
}

TEST(Incidence, WeightMatrixOfOrbitOrderedPlane) {
  const auto od = orbit_decompose(pg2_singer(4), 7);
  const auto m = assemble_block_circulant(od).materialize();
  const auto w = weight_matrix(m, 7);
  ASSERT_EQ(w.size(), 3u);
  auto first = w[0];
  std::sort(first.begin(), first.end());
  EXPECT_EQ(first, (std::vector<std::size_t>{1, 1, 3}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(w[i][j], w[0][(j + 3 - i) % 3]);
  }
}

TEST(Incidence, WeightMatrixTrivialCases) {
  const auto m = pg2_singer(3).incidence();
  EXPECT_EQ(weight_matrix(m, 13), (WeightMatrix{{4}}));
  const auto w1 = weight_matrix(m, 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(w1[i][j], m.get(i, j) ? 1u : 0u);
  }
}

TEST(Incidence, WeightMatrixErrors) {
  const auto m = pg2_singer(3).incidence();
  try {
    weight_matrix(m, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_divisor);
  }
  Matrix01 bad(4, 4);
  bad.set(0, 0);
  try {
    weight_matrix(bad, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_block_circulant);
    EXPECT_EQ(e.where(), (std::vector<std::size_t>{0, 0}));
  }
}

TEST(Incidence, WeightMatrixSumsMatchDegrees) {
  for (std::uint32_t q : {4u, 7u, 9u}) {
    const auto config = pg2_singer(q);
    for (std::size_t d = 2; d <= config.v; ++d) {
      if (config.v % d != 0) continue;
      const auto m = assemble_block_circulant(orbit_decompose(config, d)).materialize();
      const auto p = check_configuration(m);
      for (const auto& row : weight_matrix(m, d)) {
        std::size_t s = 0;
        for (auto x : row) s += x;
        EXPECT_EQ(s, p.n1);
      }
    }
  }
}

TEST(Matrix, SelectPermuteTranspose) {
  const auto m = pg2_singer(2).incidence();
  EXPECT_EQ(m.transpose().transpose(), m);
  const std::vector<std::size_t> rows{2, 0}, cols{1, 4, 6};
  const auto s = m.select(rows, cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) EXPECT_EQ(s.get(i, j), m.get(rows[i], cols[j]));
  }
  EXPECT_EQ(m.count_ones(), 21u);
  EXPECT_EQ(ConfigParams({7, 7, 3, 3}).str(), "(7,7,3,3)");
}
