#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "j4free/incidence.hpp"
#include "j4free/matrix.hpp"
#include "j4free/planes.hpp"

namespace j4free {

/// Decomposition of a cyclic configuration under the subgroup of order d.
/// Point orbit O_u and line orbit L_u are the indices congruent to u mod t,
/// and w[u] = |l_0 cap O_u|.
struct OrbitData {
  CyclicConfig config;
  std::size_t d = 0;
  std::size_t t = 0;
  std::vector<std::size_t> w;

  /// w sorted ascending.
  std::vector<std::size_t> multiset() const;
};

/// Requires d | v and d > 1 (Errc::not_a_divisor). Checks that every line of
/// L_i meets O_j in w[(j - i) mod t] points: all lines for q <= 16, one line
/// per orbit otherwise.
OrbitData orbit_decompose(const CyclicConfig& config, std::size_t d);

/// t x t grid of d x d circulants, stored compactly by difference class.
/// Block row i lists the lines i, i+t, i+2t, ...; block column j the points
/// j, j+t, .... The block (i, j) with j >= i has the canonical first row
/// class_shifts[j - i]; for j < i the canonical row of class j - i + t is
/// rotated right by one.
class BlockCirculant {
 public:
  BlockCirculant() = default;
  BlockCirculant(std::size_t d, std::size_t t, std::vector<std::vector<std::size_t>> class_shifts);

  std::size_t d() const noexcept { return d_; }
  std::size_t t() const noexcept { return t_; }
  std::size_t difference_class(std::size_t i, std::size_t j) const noexcept { return (j + t_ - i % t_) % t_; }

  /// Canonical 1-based shift set of a difference class.
  std::vector<std::size_t> class_shifts(std::size_t u) const;

  /// 1-based shift set of block (i, j).
  std::vector<std::size_t> block(std::size_t i, std::size_t j) const;

  /// Moves a canonical 1-based subset of class (j - i) mod t into the frame of block (i, j).
  std::vector<std::size_t> to_block_frame(std::size_t i, std::size_t j, const std::vector<std::size_t>& canonical) const;

  WeightMatrix weights() const;
  Matrix01 materialize() const;

  /// Original line (row) and point (column) index of each materialized row/column.
  std::vector<std::size_t> row_labels() const;
  std::vector<std::size_t> col_labels() const;

 private:
  std::size_t d_ = 0;
  std::size_t t_ = 0;
  std::vector<std::vector<std::size_t>> classes_;  // 0-based canonical first rows
};

/// Builds the orbit-ordered block form and verifies it against the cyclic
/// incidence (exhaustively when t*v is small, block row 0 otherwise).
BlockCirculant assemble_block_circulant(const OrbitData& od);

using ClassReductions = std::map<std::size_t, std::vector<std::size_t>>;
using BlockOverrides = std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>;

struct ConstructionResult {
  Matrix01 matrix;
  ConfigParams params;
  WeightMatrix weights;
};

/// Construction B: replaces the blocks of each listed difference class by the
/// retained canonical subset, applies optional per-block subsets (given in the
/// block's own frame), extracts the selected block rows and columns and
/// certifies the result. Throws Errc::not_a_subset,
/// Errc::non_constant_row_sum (where = {block row}),
/// Errc::non_constant_column_sum (where = {block column}) and the
/// check_configuration errors.
ConstructionResult construction_b(const BlockCirculant& bc, const ClassReductions& reductions,
                                  const std::vector<std::size_t>& row_blocks,
                                  const std::vector<std::size_t>& col_blocks,
                                  const BlockOverrides& overrides = {});

/// Number of orbits of x -> p x on Z_t \ {0}. Throws Errc::not_coprime.
std::size_t s_orbit_count(std::uint64_t p, std::uint64_t t);

/// Orbit representatives (smallest element) of x -> p x on Z_t \ {0}.
std::vector<std::size_t> p_orbit_representatives(std::uint64_t p, std::uint64_t t);

struct IdentityCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_ok() const;
};

/// Checks sum(w) = k, the projective sum of squares, the weighted prime-t
/// forms, the p-multiplier symmetry w_u = w_{pu mod t} and the bound on the
/// number of distinct values among w_1..w_{t-1}. t is w.size().
IdentityReport verify_identities(StructureKind structure, std::uint32_t q, const std::vector<std::size_t>& w);

}  // namespace j4free
