#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "j4free/matrix.hpp"

namespace j4free {

/// Circulant d x d matrix given by the 1-based positions of the units in its
/// first row. Every following row is the previous one shifted right by one, so
/// row i (0-based) has units at columns (s - 1 + i) mod d.
struct CirculantMatrix {
  std::size_t d = 0;
  std::vector<std::size_t> shifts;

  std::size_t weight() const noexcept { return shifts.size(); }
  Matrix01 materialize() const;

  friend bool operator==(const CirculantMatrix&, const CirculantMatrix&) = default;
};

/// Validates and sorts the shifts. Throws Errc::shift_out_of_range for a
/// shift outside 1..d and Errc::invalid_argument for an empty or repeated set.
CirculantMatrix circulant_from_shifts(std::size_t d, std::vector<std::size_t> shifts);

/// I_d(v): the permutation matrix with first-row unit at position v.
CirculantMatrix shifted_identity(std::size_t d, std::size_t v);

/// J4-free iff the ordered differences s_i - s_j (i != j) are distinct mod d.
bool circulant_is_j4_free(const CirculantMatrix& c);

/// Keeps only the given shifts. Throws Errc::not_a_subset.
CirculantMatrix reduce(const CirculantMatrix& c, const std::vector<std::size_t>& keep);

/// One cell of a block layout; nullopt is a zero block.
using BlockCell = std::optional<std::vector<std::size_t>>;
using BlockLayout = std::vector<std::vector<BlockCell>>;

struct ComposedMatrix {
  Matrix01 matrix;
  bool j4_free = false;
};

/// Assembles a block matrix whose blocks are circulants over subsets of the
/// parent's shift set. The result is always re-verified. Throws
/// Errc::empty_grid, Errc::subset_out_of_parent or Errc::invalid_argument for a
/// ragged grid.
ComposedMatrix compose_blocks(const BlockLayout& layout, std::size_t d, const CirculantMatrix& parent);

/// Writes the circulant with the given 0-based first-row columns into m at (r0, c0).
void place_circulant(Matrix01& m, std::size_t r0, std::size_t c0, std::size_t d,
                     const std::vector<std::size_t>& first_row);

}  // namespace j4free
