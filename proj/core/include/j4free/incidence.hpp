#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "j4free/matrix.hpp"

namespace j4free {

/// Corners of a 2x2 all-ones submatrix.
struct FourCycle {
  std::size_t row_a = 0;
  std::size_t row_b = 0;
  std::size_t col_a = 0;
  std::size_t col_b = 0;
};

/// First J4 found by column-pair fingerprinting, scanning rows in order.
std::optional<FourCycle> find_four_cycle(const Matrix01& m);

bool is_j4_free(const Matrix01& m);

/// Verifies biregularity and J4-freeness. Throws Errc::irregular_row,
/// Errc::irregular_column or Errc::four_cycle_found (where = {rowA, rowB,
/// colA, colB}).
ConfigParams check_configuration(const Matrix01& m);

/// Girth of the bipartite graph with biadjacency matrix m; nullopt for a forest.
std::optional<std::size_t> bipartite_girth(const Matrix01& m);

/// Girth of a simple undirected graph given by adjacency lists.
std::optional<std::size_t> graph_girth(const std::vector<std::vector<std::size_t>>& adj);

using WeightMatrix = std::vector<std::vector<std::size_t>>;

/// True iff the d x d block of m at (r0, c0) is circulant.
bool is_circulant_block(const Matrix01& m, std::size_t r0, std::size_t c0, std::size_t d);

/// Row weights of the d x d circulant blocks. Throws Errc::not_a_divisor when
/// d does not divide both dimensions and Errc::not_block_circulant (where =
/// {blockRow, blockCol}) for the first non-circulant block.
WeightMatrix weight_matrix(const Matrix01& m, std::size_t d);

}  // namespace j4free
