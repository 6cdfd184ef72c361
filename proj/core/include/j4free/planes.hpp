#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "j4free/galois.hpp"
#include "j4free/matrix.hpp"

namespace j4free {

enum class StructureKind { projective, antiflag };

std::string_view to_string(StructureKind k);
StructureKind parse_structure(std::string_view name);

/// Cyclic symmetric (v, k)-configuration: point i lies on line j iff
/// (i - j) mod v belongs to the base block, so line j is base_block + j.
struct CyclicConfig {
  std::size_t v = 0;
  std::size_t k = 0;
  std::vector<std::size_t> base_block;
  StructureKind kind = StructureKind::projective;
  std::uint32_t q = 0;
  std::uint32_t p = 0;

  std::vector<std::size_t> line(std::size_t j) const;
  bool incident(std::size_t line_index, std::size_t point) const;

  /// v x v incidence matrix, rows are lines.
  Matrix01 incidence() const;
};

/// Lines of PG(2,q) as the zero-trace hyperplanes of GF(q^3) over GF(q).
CyclicConfig pg2_singer(std::uint32_t q);

/// Anti-flag structure of AG(2,q): base line {i : Tr(alpha^i) = 1} in GF(q^2).
CyclicConfig antiflag_singer(std::uint32_t q);

CyclicConfig singer_structure(StructureKind kind, std::uint32_t q);

/// True iff every nonzero residue mod v is a difference of two block elements
/// exactly once.
bool is_perfect_difference_set(const std::vector<std::size_t>& block, std::size_t v);

/// True iff the ordered differences of distinct block elements are pairwise
/// distinct mod v.
bool has_distinct_differences(const std::vector<std::size_t>& block, std::size_t v);

using Triple = std::array<Element, 3>;

/// Coordinate model of PG(2,q). Points and lines are normalized triples (first
/// nonzero coordinate 1) ordered as (1,a,b), (0,1,a), (0,0,1) with a, b
/// running over the element codes.
struct PlaneModel {
  std::uint32_t q = 0;
  std::shared_ptr<const FieldCtx> field;
  std::vector<Triple> points;
  std::vector<Triple> lines;
  std::vector<std::vector<std::size_t>> line_points;
  std::vector<std::vector<std::size_t>> point_lines;

  std::size_t size() const noexcept { return points.size(); }
  bool incident(std::size_t line, std::size_t point) const;
  std::size_t index_of(const Triple& t) const;
  Triple normalize(Triple t) const;

  /// (q^2+q+1) x (q^2+q+1) incidence matrix, rows are lines.
  Matrix01 incidence() const;
};

PlaneModel pg2_coords(std::uint32_t q);

enum class PointSetKind { hyperoval_complement, conic_internal, conic_external, hermitian_complement, custom };

std::string_view to_string(PointSetKind k);
PointSetKind parse_point_set_kind(std::string_view name);

struct PointSet {
  std::uint32_t q = 0;
  PointSetKind kind = PointSetKind::custom;
  std::vector<bool> member;

  std::size_t size() const;
  std::vector<std::size_t> indices() const;
};

/// Points of the conic X1^2 = X0 X2.
std::vector<std::size_t> conic_points(const PlaneModel& plane);

/// Points of x0^(r+1) + x1^(r+1) + x2^(r+1) = 0 with r^2 = q.
std::vector<std::size_t> hermitian_points(const PlaneModel& plane);

/// Throws Errc::parity_mismatch when the kind does not fit q (hyperoval needs
/// q even, conic kinds q odd, Hermitian q square) and Errc::invalid_argument
/// for PointSetKind::custom.
PointSet special_point_set(const PlaneModel& plane, PointSetKind kind);

PointSet custom_point_set(const PlaneModel& plane, const std::vector<std::size_t>& points);

}  // namespace j4free
