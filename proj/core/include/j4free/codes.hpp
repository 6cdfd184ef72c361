#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "j4free/circulant.hpp"
#include "j4free/matrix.hpp"

namespace j4free {

/// Edges-vertices incidence of the supporting graph of a configuration. Rows
/// 0..m1-1 are the row vertices of M, rows m1..m1+m2-1 its column vertices;
/// column e is edges[e].
struct Skeleton {
  Matrix01 matrix;
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Edges in row-major order of the units of m. Throws Errc::not_a_configuration
/// when m fails check_configuration.
Skeleton skeleton(const Matrix01& m);

/// [I_d ... I_d ; I_d(s_1) ... I_d(s_n)]: column block k holds the edges of
/// the permutation I_d(s_k).
Skeleton qc_skeleton(const CirculantMatrix& c);

/// Binary constituent code of length n given by an r x n parity-check matrix.
struct ConstituentSpec {
  std::size_t n = 0;
  Matrix01 parity;

  /// The [n, n-1] single parity check code.
  static ConstituentSpec single_parity(std::size_t n);
};

/// Replaces the j-th unit of each vertex row (ascending column order) by the
/// j-th column of the constituent parity-check matrix. Row rho of the
/// constituent of vertex t lands in row rho*m1 + t (first class) or
/// m1*r1 + rho*m2 + t (second class). Throws Errc::length_mismatch.
Matrix01 expand_parity_check(const Skeleton& s, const ConstituentSpec& first, const ConstituentSpec& second);

struct CodeBounds {
  std::size_t n = 0;
  std::int64_t k_upper = 0;
  bool nonpositive = false;
};

/// N = m1 n1 and K <= sum(k_t) - m1 n1 for per-vertex constituent dimensions
/// (m1 row vertices first). Throws Errc::bad_dimension.
CodeBounds bg_code_bounds(const ConfigParams& params, const std::vector<std::size_t>& k_list);

/// {"m1","m2","edges":[[row,col],...],"rows":[[...],...]}.
std::string skeleton_to_json(const Skeleton& s);

}  // namespace j4free
