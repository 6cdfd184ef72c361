#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace j4free {

/// Failure categories reported by the library. Each value names one of the
/// documented error conditions of a construction or verification step.
enum class Errc {
  invalid_argument,
  not_prime,
  not_prime_power,
  no_irreducible_polynomial,
  table_overflow,
  degree_mismatch,
  parity_mismatch,
  irregular_row,
  irregular_column,
  four_cycle_found,
  not_block_circulant,
  shift_out_of_range,
  not_a_subset,
  subset_out_of_parent,
  empty_grid,
  not_a_divisor,
  non_constant_row_sum,
  non_constant_column_sum,
  param_out_of_range,
  not_coprime,
  empty_line_class,
  non_constant_point_degree,
  odd_q,
  dimension_out_of_range,
  too_many_deletions,
  not_a_configuration,
  length_mismatch,
  bad_dimension,
  parse_error,
  internal_consistency,
};

std::string_view to_string(Errc code);

/// Exception carrying an error category plus the indices that locate the
/// failure (row index, block coordinates, four-cycle corners, ...).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::vector<std::size_t> where = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        where_(std::move(where)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<std::size_t>& where() const noexcept { return where_; }

 private:
  Errc code_;
  std::vector<std::size_t> where_;
};

}  // namespace j4free
