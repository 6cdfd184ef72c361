#include "j4free/matrix.hpp"

#include <bit>

#include "j4free/error.hpp"

namespace j4free {

Matrix01::Matrix01(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * ((cols + 63) / 64), 0) {}

Matrix01 Matrix01::from_rows(std::size_t rows, std::size_t cols,
                             const std::vector<std::vector<std::size_t>>& support) {
  if (support.size() != rows) throw Error(Errc::invalid_argument, "row count mismatch");
  Matrix01 m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (auto j : support[i]) {
      if (j >= cols) throw Error(Errc::invalid_argument, "column index out of range", {i, j});
      m.set(i, j);
    }
  }
  return m;
}

std::vector<std::size_t> Matrix01::row_support(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t x = bits_[i * words_ + w];
    while (x != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> Matrix01::row_supports() const {
  std::vector<std::vector<std::size_t>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = row_support(i);
  return out;
}

std::vector<std::vector<std::size_t>> Matrix01::col_supports() const {
  std::vector<std::vector<std::size_t>> out(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (auto j : row_support(i)) out[j].push_back(i);
  }
  return out;
}

std::size_t Matrix01::row_weight(std::size_t i) const noexcept {
  std::size_t n = 0;
  for (std::size_t w = 0; w < words_; ++w) n += static_cast<std::size_t>(std::popcount(bits_[i * words_ + w]));
  return n;
}

std::vector<std::size_t> Matrix01::col_weights() const {
  std::vector<std::size_t> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (auto j : row_support(i)) ++out[j];
  }
  return out;
}

std::size_t Matrix01::count_ones() const noexcept {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Matrix01 Matrix01::transpose() const {
  Matrix01 t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (auto j : row_support(i)) t.set(j, i);
  }
  return t;
}

Matrix01 Matrix01::select(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
  Matrix01 out(row_ids.size(), col_ids.size());
  for (std::size_t a = 0; a < row_ids.size(); ++a) {
    for (std::size_t b = 0; b < col_ids.size(); ++b) {
      if (get(row_ids[a], col_ids[b])) out.set(a, b);
    }
  }
  return out;
}

Matrix01 Matrix01::permuted(std::span<const std::size_t> row_order, std::span<const std::size_t> col_order) const {
  if (row_order.size() != rows_ || col_order.size() != cols_) {
    throw Error(Errc::invalid_argument, "permutation size mismatch");
  }
  return select(row_order, col_order);
}

std::string ConfigParams::str() const {
  return "(" + std::to_string(m1) + "," + std::to_string(m2) + "," + std::to_string(n1) + "," +
         std::to_string(n2) + ")";
}

}  // namespace j4free
