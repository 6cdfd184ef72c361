#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "j4free/matrix.hpp"
#include "j4free/planes.hpp"

namespace j4free {

/// Points are 0..point_ids.size()-1; point_ids keeps each point's index in the
/// ambient space. Blocks are sorted point lists.
struct IncidenceStructure {
  std::vector<std::size_t> point_ids;
  std::vector<std::vector<std::size_t>> blocks;
  std::string label;

  /// Rows are blocks, columns are points.
  Matrix01 to_matrix() const;
};

struct CertifiedStructure {
  IncidenceStructure structure;
  ConfigParams params;
};

/// Lines meeting the point set in exactly n points, restricted to the point
/// set. Throws Errc::param_out_of_range (n outside 2..q+1),
/// Errc::empty_line_class and Errc::non_constant_point_degree (where = {point}).
CertifiedStructure construction_a(const PlaneModel& plane, const PointSet& pts, std::size_t n);

/// Points of AG(2v,q) off K = {(a_1,a_1^2,...,a_v,a_v^2)}, with the lines
/// lying entirely off K. Throws Errc::odd_q and Errc::table_overflow.
CertifiedStructure parabola_product_complement(std::uint32_t q, std::uint32_t v);
ConfigParams parabola_product_params(std::uint32_t q, std::uint32_t v);

/// s-dimensional subspaces of PG(h,q) against (s+1)-dimensional ones under
/// inclusion. Throws Errc::dimension_out_of_range and Errc::table_overflow.
CertifiedStructure subspace_configuration(std::uint32_t h, std::uint32_t s, std::uint32_t q);
ConfigParams subspace_params(std::uint32_t h, std::uint32_t s, std::uint32_t q);

/// PG(2,q) with the line X0 = 0 as l and P = (0:1:0) on l or P = (1:0:0) off
/// it. The s extra points are the first eligible points of l by index; for P
/// on l the s extra lines are the first lines through P other than l, for P
/// off l they join P to the extra points. All lines through the s+1 points and
/// all points on the s+1 lines are removed. Throws Errc::too_many_deletions
/// when s > q - 2.
CertifiedStructure q_cancellation(std::uint32_t q, std::uint32_t s, bool p_on_line);
ConfigParams q_cancellation_params(std::uint32_t q, std::uint32_t s, bool p_on_line);

/// Gaussian binomial [n choose k]_q.
std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint32_t q);

}  // namespace j4free
