#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "j4free/matrix.hpp"
#include "j4free/planes.hpp"

namespace j4free {

/// Expands "2,0_7,1" (value_count runs) into a sequence.
std::vector<std::size_t> parse_value_counts(std::string_view text);

/// One expected intersection profile.
struct ProfileFixture {
  std::uint32_t q = 0;
  std::size_t d = 0;
  std::size_t t = 0;
  std::vector<std::size_t> w;
};

/// Embedded expected profiles of PG(2,q) and of the anti-flag structure.
std::vector<ProfileFixture> projective_profile_fixtures();
std::vector<ProfileFixture> antiflag_profile_fixtures();

/// Construction codes of the recipe table.
enum class RecipeCode : char {
  hermitian = 'a',
  baer = 'b',
  antiflag_family = 'c',
  projective_reduction = 'd',
  antiflag_reduction = 'e',
  distinguished_class = 'f',
};

/// One way of obtaining a symmetric configuration M(m2, n_star).
struct Recipe {
  std::size_t n_star = 0;
  std::size_t m2 = 0;
  RecipeCode code = RecipeCode::baer;
  std::uint32_t q = 0;
  std::size_t c = 0;
  std::size_t delta = 0;

  std::string label() const;
};

/// Embedded recipe rows, one entry per (n_star, delta) pair.
std::vector<Recipe> recipe_fixtures();

/// First recipe for the target; m2 may be left open.
std::optional<Recipe> find_recipe(std::size_t n_star, std::optional<std::size_t> m2);

struct RecipeResult {
  Matrix01 matrix;
  ConfigParams params;
  std::string description;
};

/// Builds and certifies the recipe's matrix. Throws Errc::internal_consistency
/// when the certified parameters differ from (m2, m2, n_star, n_star).
RecipeResult execute_recipe(const Recipe& r);

/// One regenerated table row.
struct TableCheck {
  std::string label;
  std::string expected;
  std::string actual;
  bool match = false;
};

/// Regenerates the profile rows with q_min <= q <= q_max, in parallel, and
/// compares them with the fixtures by multiset.
std::vector<TableCheck> check_profile_table(StructureKind structure, std::uint32_t q_min, std::uint32_t q_max,
                                            unsigned threads = 0);

/// Executes the recipes, optionally only those with the given n_star.
std::vector<TableCheck> check_recipe_table(std::optional<std::size_t> n_star, unsigned threads = 0);

/// "label\texpected\tactual\tMATCH|MISMATCH" lines after a header.
std::string table_report(const std::vector<TableCheck>& rows);

}  // namespace j4free
