#include "j4free/singer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "j4free/circulant.hpp"
#include "j4free/error.hpp"
#include "j4free/number_theory.hpp"

namespace j4free {

std::vector<std::size_t> OrbitData::multiset() const {
  auto out = w;
  std::sort(out.begin(), out.end());
  return out;
}

OrbitData orbit_decompose(const CyclicConfig& config, std::size_t d) {
  if (d < 2 || config.v % d != 0) {
    throw Error(Errc::not_a_divisor,
                std::to_string(d) + " is not a divisor > 1 of " + std::to_string(config.v), {d});
  }
  OrbitData od;
  od.config = config;
  od.d = d;
  od.t = config.v / d;
  od.w.assign(od.t, 0);
  for (auto b : config.base_block) ++od.w[b % od.t];

  const bool exhaustive = config.q <= 16;
  std::vector<std::size_t> meet(od.t);
  for (std::size_t line = 0; line < (exhaustive ? config.v : od.t); ++line) {
    std::fill(meet.begin(), meet.end(), 0);
    for (auto p : config.line(line)) ++meet[p % od.t];
    const std::size_t i = line % od.t;
    for (std::size_t j = 0; j < od.t; ++j) {
      if (meet[j] != od.w[(j + od.t - i) % od.t]) {
        throw Error(Errc::internal_consistency,
                    "line " + std::to_string(line) + " meets orbit " + std::to_string(j) +
                        " in an unexpected number of points",
                    {line, j});
      }
    }
  }
  return od;
}

BlockCirculant::BlockCirculant(std::size_t d, std::size_t t, std::vector<std::vector<std::size_t>> class_shifts)
    : d_(d), t_(t), classes_(std::move(class_shifts)) {
  if (classes_.size() != t_) throw Error(Errc::invalid_argument, "one shift class per difference is required");
  for (auto& c : classes_) {
    std::sort(c.begin(), c.end());
    for (auto s : c) {
      if (s >= d_) throw Error(Errc::shift_out_of_range, "class shift out of range", {s});
    }
  }
}

std::vector<std::size_t> BlockCirculant::class_shifts(std::size_t u) const {
  std::vector<std::size_t> out;
  for (auto s : classes_.at(u)) out.push_back(s + 1);
  return out;
}

std::vector<std::size_t> BlockCirculant::to_block_frame(std::size_t i, std::size_t j,
                                                        const std::vector<std::size_t>& canonical) const {
  std::vector<std::size_t> out;
  out.reserve(canonical.size());
  const bool rotate = j < i;
  for (auto s : canonical) out.push_back(rotate ? (s % d_) + 1 : s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> BlockCirculant::block(std::size_t i, std::size_t j) const {
  return to_block_frame(i, j, class_shifts(difference_class(i, j)));
}

WeightMatrix BlockCirculant::weights() const {
  WeightMatrix w(t_, std::vector<std::size_t>(t_, 0));
  for (std::size_t i = 0; i < t_; ++i) {
    for (std::size_t j = 0; j < t_; ++j) w[i][j] = classes_[difference_class(i, j)].size();
  }
  return w;
}

Matrix01 BlockCirculant::materialize() const {
  Matrix01 m(t_ * d_, t_ * d_);
  for (std::size_t i = 0; i < t_; ++i) {
    for (std::size_t j = 0; j < t_; ++j) {
      auto s = block(i, j);
      for (auto& x : s) --x;
      place_circulant(m, i * d_, j * d_, d_, s);
    }
  }
  return m;
}

std::vector<std::size_t> BlockCirculant::row_labels() const {
  std::vector<std::size_t> out;
  out.reserve(t_ * d_);
  for (std::size_t i = 0; i < t_; ++i) {
    for (std::size_t a = 0; a < d_; ++a) out.push_back(i + a * t_);
  }
  return out;
}

std::vector<std::size_t> BlockCirculant::col_labels() const { return row_labels(); }

BlockCirculant assemble_block_circulant(const OrbitData& od) {
  const std::size_t t = od.t, d = od.d;
  std::vector<std::vector<std::size_t>> classes(t);
  for (auto b : od.config.base_block) classes[b % t].push_back((b - b % t) / t);
  BlockCirculant bc(d, t, std::move(classes));

  const bool exhaustive = static_cast<double>(t) * static_cast<double>(od.config.v) <= 2e7;
  for (std::size_t i = 0; i < (exhaustive ? t : 1); ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      const auto shifts = bc.block(i, j);
      if (shifts.size() != od.w[(j + t - i) % t]) {
        throw Error(Errc::internal_consistency, "block weight differs from the orbit profile", {i, j});
      }
      std::vector<bool> first_row(d, false);
      for (auto s : shifts) first_row[s - 1] = true;
      for (std::size_t b = 0; b < d; ++b) {
        if (od.config.incident(i, j + b * t) != first_row[b]) {
          throw Error(Errc::internal_consistency, "block does not match the cyclic incidence", {i, j});
        }
      }
    }
  }
  return bc;
}

ConstructionResult construction_b(const BlockCirculant& bc, const ClassReductions& reductions,
                                  const std::vector<std::size_t>& row_blocks,
                                  const std::vector<std::size_t>& col_blocks, const BlockOverrides& overrides) {
  if (row_blocks.empty() || col_blocks.empty()) throw Error(Errc::empty_grid, "no blocks selected");
  for (auto b : row_blocks) {
    if (b >= bc.t()) throw Error(Errc::invalid_argument, "block row out of range", {b});
  }
  for (auto b : col_blocks) {
    if (b >= bc.t()) throw Error(Errc::invalid_argument, "block column out of range", {b});
  }
  for (const auto& [u, keep] : reductions) {
    if (u >= bc.t()) throw Error(Errc::invalid_argument, "difference class out of range", {u});
    const auto parent = bc.class_shifts(u);
    for (auto s : keep) {
      if (!std::binary_search(parent.begin(), parent.end(), s)) {
        throw Error(Errc::not_a_subset,
                    "shift " + std::to_string(s) + " is not in difference class " + std::to_string(u), {u, s});
      }
    }
  }

  const std::size_t rb = row_blocks.size(), cb = col_blocks.size(), d = bc.d();
  std::vector<std::vector<std::vector<std::size_t>>> grid(rb, std::vector<std::vector<std::size_t>>(cb));
  for (std::size_t a = 0; a < rb; ++a) {
    for (std::size_t b = 0; b < cb; ++b) {
      const std::size_t i = row_blocks[a], j = col_blocks[b];
      auto cell = bc.block(i, j);
      if (auto it = reductions.find(bc.difference_class(i, j)); it != reductions.end()) {
        cell = bc.to_block_frame(i, j, it->second);
      }
      if (auto it = overrides.find({i, j}); it != overrides.end()) {
        for (auto s : it->second) {
          if (!std::binary_search(cell.begin(), cell.end(), s)) {
            throw Error(Errc::not_a_subset, "override shift " + std::to_string(s) + " not in block", {i, j});
          }
        }
        cell = it->second;
        std::sort(cell.begin(), cell.end());
      }
      grid[a][b] = std::move(cell);
    }
  }

  ConstructionResult out;
  out.weights.assign(rb, std::vector<std::size_t>(cb, 0));
  for (std::size_t a = 0; a < rb; ++a) {
    for (std::size_t b = 0; b < cb; ++b) out.weights[a][b] = grid[a][b].size();
  }
  const auto row_sum = [&](std::size_t a) {
    return std::accumulate(out.weights[a].begin(), out.weights[a].end(), std::size_t{0});
  };
  for (std::size_t a = 1; a < rb; ++a) {
    if (row_sum(a) != row_sum(0)) {
      throw Error(Errc::non_constant_row_sum, "block row " + std::to_string(row_blocks[a]) + " has a different sum",
                  {row_blocks[a]});
    }
  }
  const auto col_sum = [&](std::size_t b) {
    std::size_t s = 0;
    for (std::size_t a = 0; a < rb; ++a) s += out.weights[a][b];
    return s;
  };
  for (std::size_t b = 1; b < cb; ++b) {
    if (col_sum(b) != col_sum(0)) {
      throw Error(Errc::non_constant_column_sum,
                  "block column " + std::to_string(col_blocks[b]) + " has a different sum", {col_blocks[b]});
    }
  }

  out.matrix = Matrix01(rb * d, cb * d);
  for (std::size_t a = 0; a < rb; ++a) {
    for (std::size_t b = 0; b < cb; ++b) {
      auto s = grid[a][b];
      for (auto& x : s) --x;
      place_circulant(out.matrix, a * d, b * d, d, s);
    }
  }
  out.params = check_configuration(out.matrix);
  return out;
}

std::vector<std::size_t> p_orbit_representatives(std::uint64_t p, std::uint64_t t) {
  if (t < 2 || std::gcd(p, t) != 1) {
    throw Error(Errc::not_coprime, std::to_string(p) + " and " + std::to_string(t) + " are not coprime");
  }
  std::vector<bool> seen(t, false);
  std::vector<std::size_t> reps;
  for (std::uint64_t u = 1; u < t; ++u) {
    if (seen[u]) continue;
    reps.push_back(u);
    for (std::uint64_t x = u; !seen[x]; x = x * p % t) seen[x] = true;
  }
  return reps;
}

std::size_t s_orbit_count(std::uint64_t p, std::uint64_t t) { return p_orbit_representatives(p, t).size(); }

bool IdentityReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.ok; });
}

IdentityReport verify_identities(StructureKind structure, std::uint32_t q, const std::vector<std::size_t>& w) {
  IdentityReport report;
  const auto pp = require_prime_power(q);
  const std::uint64_t t = w.size();
  const std::uint64_t k = structure == StructureKind::projective ? q + 1 : q;
  const std::uint64_t sum = std::accumulate(w.begin(), w.end(), std::uint64_t{0});
  std::uint64_t sq = 0;
  for (auto x : w) sq += std::uint64_t{x} * x;
  const std::uint64_t qq = q;

  report.checks.push_back({"sum", sum == k, "sum(w)=" + std::to_string(sum) + " k=" + std::to_string(k)});
  if (structure == StructureKind::projective) {
    const std::uint64_t rhs = qq * qq + (t + 1) * qq + 1;
    report.checks.push_back({"sum_of_squares", t * sq == rhs,
                             "t*sum(w^2)=" + std::to_string(t * sq) + " q^2+(t+1)q+1=" + std::to_string(rhs)});
  }
  if (t >= 2) {
    bool sym = true;
    for (std::uint64_t u = 0; u < t; ++u) sym = sym && w[u] == w[u * pp.p % t];
    report.checks.push_back({"p_symmetry", sym, "w_u = w_{pu mod t}"});

    const auto reps = p_orbit_representatives(pp.p, t);
    const std::size_t s = reps.size();
    std::set<std::size_t> distinct(w.begin() + 1, w.end());
    report.checks.push_back({"distinct_values", distinct.size() <= s,
                             std::to_string(distinct.size()) + " values, s(p,t)=" + std::to_string(s)});

    if (structure == StructureKind::projective && is_prime(t)) {
      std::uint64_t rs = 0, rsq = 0;
      for (auto r : reps) {
        rs += w[r];
        rsq += std::uint64_t{w[r]} * w[r];
      }
      const bool lin = s * w[0] + (t - 1) * rs == s * (qq + 1);
      const bool quad = t * (s * w[0] * w[0] + (t - 1) * rsq) == s * (qq * qq + (t + 1) * qq + 1);
      report.checks.push_back({"prime_t_linear", lin, "orbit-weighted sum"});
      report.checks.push_back({"prime_t_quadratic", quad, "orbit-weighted sum of squares"});
    }
  }
  return report;
}

}  // namespace j4free
