#include "j4free/incidence.hpp"

#include <limits>
#include <string>
#include <unordered_map>

#include "j4free/error.hpp"

namespace j4free {

std::optional<FourCycle> find_four_cycle(const Matrix01& m) {
  const auto cols = static_cast<std::uint64_t>(m.cols());
  std::unordered_map<std::uint64_t, std::size_t> seen;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto s = m.row_support(i);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        const std::uint64_t key = s[a] * cols + s[b];
        auto [it, inserted] = seen.emplace(key, i);
        if (!inserted) return FourCycle{it->second, i, s[a], s[b]};
      }
    }
  }
  return std::nullopt;
}

bool is_j4_free(const Matrix01& m) { return !find_four_cycle(m).has_value(); }

ConfigParams check_configuration(const Matrix01& m) {
  if (m.empty()) throw Error(Errc::irregular_row, "empty matrix", {0});
  ConfigParams p;
  p.m1 = m.rows();
  p.m2 = m.cols();
  p.n1 = m.row_weight(0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto w = m.row_weight(i);
    if (w != p.n1 || w == 0) {
      throw Error(Errc::irregular_row,
                  "row " + std::to_string(i) + " has weight " + std::to_string(w), {i});
    }
  }
  const auto cw = m.col_weights();
  p.n2 = cw[0];
  for (std::size_t j = 0; j < cw.size(); ++j) {
    if (cw[j] != p.n2 || cw[j] == 0) {
      throw Error(Errc::irregular_column,
                  "column " + std::to_string(j) + " has weight " + std::to_string(cw[j]), {j});
    }
  }
  if (auto c = find_four_cycle(m)) {
    throw Error(Errc::four_cycle_found,
                "rows " + std::to_string(c->row_a) + "," + std::to_string(c->row_b) +
                    " share columns " + std::to_string(c->col_a) + "," + std::to_string(c->col_b),
                {c->row_a, c->row_b, c->col_a, c->col_b});
  }
  if (p.m1 * p.n1 != p.m2 * p.n2) {
    throw Error(Errc::internal_consistency, "flag count mismatch");
  }
  return p;
}

std::optional<std::size_t> graph_girth(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::size_t best = inf;
  std::vector<std::size_t> dist(n, inf), parent(n, inf), queue;
  queue.reserve(n);
  std::vector<std::size_t> touched;
  for (std::size_t root = 0; root < n; ++root) {
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    touched.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      // Any cycle closed from here on has length at least 2*dist[u].
      if (best != inf && 2 * dist[u] >= best) break;
      for (auto w : adj[u]) {
        if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
          touched.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
    for (auto v : touched) {
      dist[v] = inf;
      parent[v] = inf;
    }
  }
  if (best == inf) return std::nullopt;
  return best;
}

std::optional<std::size_t> bipartite_girth(const Matrix01& m) {
  std::vector<std::vector<std::size_t>> adj(m.rows() + m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (auto j : m.row_support(i)) {
      adj[i].push_back(m.rows() + j);
      adj[m.rows() + j].push_back(i);
    }
  }
  return graph_girth(adj);
}

bool is_circulant_block(const Matrix01& m, std::size_t r0, std::size_t c0, std::size_t d) {
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if (m.get(r0 + r, c0 + c) != m.get(r0 + (r + 1) % d, c0 + (c + 1) % d)) return false;
    }
  }
  return true;
}

WeightMatrix weight_matrix(const Matrix01& m, std::size_t d) {
  if (d == 0 || m.rows() % d != 0 || m.cols() % d != 0) {
    throw Error(Errc::not_a_divisor, "block order " + std::to_string(d) + " does not divide the dimensions");
  }
  WeightMatrix w(m.rows() / d, std::vector<std::size_t>(m.cols() / d, 0));
  for (std::size_t bi = 0; bi < w.size(); ++bi) {
    for (std::size_t bj = 0; bj < w[bi].size(); ++bj) {
      if (!is_circulant_block(m, bi * d, bj * d, d)) {
        throw Error(Errc::not_block_circulant,
                    "block (" + std::to_string(bi) + "," + std::to_string(bj) + ") is not circulant",
                    {bi, bj});
      }
      std::size_t n = 0;
      for (std::size_t c = 0; c < d; ++c) n += m.get(bi * d, bj * d + c) ? 1 : 0;
      w[bi][bj] = n;
    }
  }
  return w;
}

}  // namespace j4free
