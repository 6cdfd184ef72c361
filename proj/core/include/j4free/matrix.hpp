#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace j4free {

/// Dense 01-matrix with bit-packed rows.
class Matrix01 {
 public:
  Matrix01() = default;
  Matrix01(std::size_t rows, std::size_t cols);

  /// Builds a matrix from per-row lists of 0-based unit columns.
  static Matrix01 from_rows(std::size_t rows, std::size_t cols,
                            const std::vector<std::vector<std::size_t>>& support);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    auto& w = bits_[i * words_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    w = value ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t i, std::size_t j) noexcept {
    bits_[i * words_ + j / 64] ^= std::uint64_t{1} << (j % 64);
  }

  std::span<const std::uint64_t> row_words(std::size_t i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }

  /// Sorted 0-based unit columns of row i.
  std::vector<std::size_t> row_support(std::size_t i) const;
  std::vector<std::vector<std::size_t>> row_supports() const;
  std::vector<std::vector<std::size_t>> col_supports() const;

  std::size_t row_weight(std::size_t i) const noexcept;
  std::vector<std::size_t> col_weights() const;
  std::size_t count_ones() const noexcept;

  Matrix01 transpose() const;
  Matrix01 select(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const;
  Matrix01 permuted(std::span<const std::size_t> row_order, std::span<const std::size_t> col_order) const;

  friend bool operator==(const Matrix01& a, const Matrix01& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Parameters (m1, m2, n1, n2) of a configuration: m1 blocks (rows) of n1
/// points each, m2 points (columns) on n2 blocks each.
struct ConfigParams {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  bool symmetric() const noexcept { return m1 == m2 && n1 == n2; }
  ConfigParams transposed() const noexcept { return {m2, m1, n2, n1}; }
  std::string str() const;

  friend bool operator==(const ConfigParams&, const ConfigParams&) = default;
};

}  // namespace j4free
