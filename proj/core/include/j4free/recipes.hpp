#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "j4free/planes.hpp"
#include "j4free/singer.hpp"

namespace j4free {

/// Block-selection families of Construction B.
enum class FamilyKind {
  reduce_full,          // whole cyclic matrix, k - delta shifts kept
  uniform_cxc,          // c x c2 blocks over a run of equal-weight classes
  uniform_reduced,      // square uniform selection, then delta matching rounds
  w0_distinct,          // one distinguished class on the block diagonal
  four_block,           // 2 x 2 blocks over four classes of equal weight
  shifted_double,       // (u+1) x (u+1) blocks over a periodic window
  row_strip,            // one block row, c equal-weight columns
  baer,                 // Baer-subplane orbits of PG(2,q), q square
  antiflag_t_q_plus_1,  // anti-flag orbits of size q - 1
};

std::string_view to_string(FamilyKind k);
FamilyKind parse_family(std::string_view name);

struct FamilyParams {
  StructureKind structure = StructureKind::projective;
  std::uint32_t q = 0;
  std::optional<std::size_t> d;  // subgroup order; every admissible divisor when unset
  std::size_t c = 0;             // block count (u for shifted_double)
  std::size_t c2 = 0;            // second dimension for uniform_cxc; defaults to c
  std::size_t delta = 0;
};

struct FamilyPlan {
  FamilyKind kind = FamilyKind::reduce_full;
  StructureKind structure = StructureKind::projective;
  std::uint32_t q = 0;
  std::size_t d = 0;
  std::shared_ptr<const BlockCirculant> blocks;
  std::vector<std::size_t> row_blocks;
  std::vector<std::size_t> col_blocks;
  ClassReductions reductions;
  /// Each round removes one shift from every block of a perfect matching of
  /// the weight matrix, lowering all row and column sums by one.
  std::size_t matching_rounds = 0;
  ConfigParams predicted;
  std::string description;
};

/// Plans for the family, with parameters predicted in closed form. Throws
/// Errc::param_out_of_range when the parameters leave the family's range or
/// no subgroup order admits the family.
std::vector<FamilyPlan> family_recipes(FamilyKind kind, const FamilyParams& params);

/// Runs Construction B for the plan; the result is certified but not compared
/// with plan.predicted.
ConstructionResult execute_plan(const FamilyPlan& plan);

/// Removes `rounds` perfect matchings from the block weight grid, returning
/// the per-block shift sets to use as Construction B overrides.
BlockOverrides matching_reduction(const BlockCirculant& bc, const ClassReductions& reductions,
                                  const std::vector<std::size_t>& row_blocks,
                                  const std::vector<std::size_t>& col_blocks, std::size_t rounds);

}  // namespace j4free
