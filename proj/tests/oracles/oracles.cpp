#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace oracle {

bool naive_j4_free(const BitMatrix& m) {
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      int common = 0;
      for (std::size_t j = 0; j < m[a].size(); ++j) common += (m[a][j] && m[b][j]) ? 1 : 0;
      if (common >= 2) return false;
    }
  }
  return true;
}

std::optional<std::size_t> brute_force_girth(const BitMatrix& m) {
  const std::size_t r = m.size(), c = r ? m[0].size() : 0, n = r + c;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (m[i][j]) {
        adj[i].push_back(r + j);
        adj[r + j].push_back(i);
      }
    }
  }
  std::optional<std::size_t> best;
  std::vector<bool> on_path(n, false);
  // Cycles are enumerated from their smallest vertex only.
  std::function<void(std::size_t, std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t u, std::size_t len) {
    if (best && len >= *best) return;
    for (auto x : adj[u]) {
      if (x == start && len >= 3) {
        if (!best || len + 1 < *best) best = len + 1;
        continue;
      }
      if (x <= start || on_path[x]) continue;
      on_path[x] = true;
      dfs(start, x, len + 1);
      on_path[x] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(s, s, 0);
    on_path[s] = false;
  }
  return best;
}

namespace {

std::vector<std::size_t> difference_counts(const std::vector<std::size_t>& block, std::size_t v) {
  std::vector<std::size_t> count(v, 0);
  for (auto a : block) {
    for (auto b : block) {
      if (a != b) ++count[(a + v - b) % v];
    }
  }
  return count;
}

}  // namespace

bool naive_perfect_difference_set(const std::vector<std::size_t>& block, std::size_t v) {
  const auto count = difference_counts(block, v);
  for (std::size_t x = 1; x < v; ++x) {
    if (count[x] != 1) return false;
  }
  return true;
}

bool naive_distinct_differences(const std::vector<std::size_t>& block, std::size_t v) {
  const auto count = difference_counts(block, v);
  return std::all_of(count.begin() + 1, count.end(), [](auto k) { return k <= 1; });
}

std::vector<std::uint32_t> NaivePoly::add(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
  std::vector<std::uint32_t> r(modulus.size() - 1, 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % p;
  return r;
}

std::vector<std::uint32_t> NaivePoly::mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
  const std::size_t h = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * h, 0);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t k = 2 * h; k-- > h;) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= h; ++i) prod[k - h + i] = (prod[k - h + i] + (p - lead) * modulus[i]) % p;
  }
  return {prod.begin(), prod.begin() + static_cast<long>(h)};
}

std::vector<std::uint32_t> NaivePoly::pow(std::vector<std::uint32_t> a, std::uint64_t e) const {
  std::vector<std::uint32_t> r(modulus.size() - 1, 0);
  r[0] = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::vector<std::uint32_t> NaivePoly::decode(std::uint32_t code) const {
  std::vector<std::uint32_t> r(modulus.size() - 1, 0);
  for (auto& x : r) {
    x = code % p;
    code /= p;
  }
  return r;
}

std::uint32_t NaivePoly::encode(const std::vector<std::uint32_t>& a) const {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

std::size_t gf2_rank(BitMatrix m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && !m[piv][c]) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto ra = gf2_rank(a), rb = gf2_rank(b), rab = gf2_rank(both);
  return ra == rb && rb == rab;
}

Rows prime_plane_lines(std::uint32_t q) {
  std::vector<std::array<std::uint32_t, 3>> pts;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) pts.push_back({1, a, b});
  }
  for (std::uint32_t a = 0; a < q; ++a) pts.push_back({0, 1, a});
  pts.push_back({0, 0, 1});
  Rows lines;
  for (const auto& l : pts) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& x = pts[i];
      if ((l[0] * x[0] + l[1] * x[1] + l[2] * x[2]) % q == 0) on.push_back(i);
    }
    lines.push_back(std::move(on));
  }
  return lines;
}

}  // namespace oracle
