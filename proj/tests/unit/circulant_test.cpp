#include <gtest/gtest.h>

#include "j4free/circulant.hpp"
#include "j4free/error.hpp"
#include "j4free/incidence.hpp"

using namespace j4free;

TEST(Circulant, IdentityIsShiftOne) {
  const auto m = circulant_from_shifts(7, {1}).materialize();
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(m.get(i, j), i == j);
  }
}

TEST(Circulant, RowsShiftRight) {
  const auto m = circulant_from_shifts(5, {2, 3}).materialize();
  EXPECT_EQ(m.row_support(0), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(m.row_support(4), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(is_circulant_block(m, 0, 0, 5));
}

TEST(Circulant, J4FreenessFollowsDifferences) {
  const auto fano = circulant_from_shifts(7, {1, 2, 4});
  EXPECT_TRUE(circulant_is_j4_free(fano));
  EXPECT_TRUE(is_j4_free(fano.materialize()));
  const auto bad = circulant_from_shifts(4, {1, 3});
  EXPECT_FALSE(circulant_is_j4_free(bad));
  EXPECT_FALSE(is_j4_free(bad.materialize()));
}

TEST(Circulant, ShiftValidation) {
  try {
    circulant_from_shifts(7, {0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::shift_out_of_range);
  }
  EXPECT_THROW(circulant_from_shifts(7, {8}), Error);
  EXPECT_THROW(circulant_from_shifts(7, {}), Error);
}

TEST(Circulant, Reduce) {
  const auto c = circulant_from_shifts(7, {1, 2, 4});
  const auto r = reduce(c, {1, 2});
  EXPECT_EQ(check_configuration(r.materialize()), (ConfigParams{7, 7, 2, 2}));
  EXPECT_EQ(reduce(c, {1, 2, 4}), c);
  EXPECT_EQ(reduce(c, {4}), shifted_identity(7, 4));
  try {
    reduce(c, {3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_subset);
  }
}

TEST(Circulant, SwapLayoutOfDisjointSubsets) {
  const auto parent = circulant_from_shifts(7, {1, 2, 4});
  const BlockLayout layout{{std::vector<std::size_t>{1, 2}, std::vector<std::size_t>{4}},
                           {std::vector<std::size_t>{4}, std::vector<std::size_t>{1, 2}}};
  const auto out = compose_blocks(layout, 7, parent);
  EXPECT_TRUE(out.j4_free);
  EXPECT_EQ(check_configuration(out.matrix), (ConfigParams{14, 14, 3, 3}));
}

TEST(Circulant, ComposeSingleCellAndZeroBlocks) {
  const auto parent = circulant_from_shifts(7, {1, 2, 4});
  const auto one = compose_blocks({{std::vector<std::size_t>{1, 2, 4}}}, 7, parent);
  EXPECT_EQ(one.matrix, parent.materialize());
  const auto with_zero = compose_blocks({{std::vector<std::size_t>{1}, std::nullopt}}, 7, parent);
  EXPECT_EQ(with_zero.matrix.cols(), 14u);
  EXPECT_EQ(with_zero.matrix.count_ones(), 7u);
}

TEST(Circulant, OverlappingSubsetsAreReportedHonestly) {
  const auto parent = circulant_from_shifts(7, {1, 2, 4});
  const auto out = compose_blocks({{std::vector<std::size_t>{1, 2}, std::vector<std::size_t>{2, 4}}}, 7, parent);
  EXPECT_EQ(out.j4_free, is_j4_free(out.matrix));
}

TEST(Circulant, ComposeErrors) {
  const auto parent = circulant_from_shifts(7, {1, 2, 4});
  try {
    compose_blocks({}, 7, parent);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_grid);
  }
  try {
    compose_blocks({{std::vector<std::size_t>{3}}}, 7, parent);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::subset_out_of_parent);
  }
}
