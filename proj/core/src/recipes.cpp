#include "j4free/recipes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "j4free/error.hpp"
#include "j4free/number_theory.hpp"

namespace j4free {
namespace {

[[noreturn]] void out_of_range(const std::string& what) { throw Error(Errc::param_out_of_range, what); }

struct Orbits {
  CyclicConfig config;
  std::size_t d = 0;
  std::size_t t = 0;
  std::vector<std::size_t> w;
  std::shared_ptr<const BlockCirculant> blocks;
};

Orbits decompose(const CyclicConfig& config, std::size_t d) {
  const auto od = orbit_decompose(config, d);
  return {config, d, od.t, od.w, std::make_shared<const BlockCirculant>(assemble_block_circulant(od))};
}

std::vector<std::size_t> iota_blocks(std::size_t start, std::size_t count, std::size_t t) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back((start + k) % t);
  return out;
}

FamilyPlan base_plan(FamilyKind kind, const FamilyParams& p, const Orbits& o) {
  FamilyPlan plan;
  plan.kind = kind;
  plan.structure = p.structure;
  plan.q = p.q;
  plan.d = o.d;
  plan.blocks = o.blocks;
  return plan;
}

ConfigParams square(std::size_t m, std::size_t n) { return {m, m, n, n}; }

// Length of the cyclic run of classes with weight w[a] starting at a.
std::size_t run_length(const std::vector<std::size_t>& w, std::size_t a) {
  const std::size_t t = w.size();
  std::size_t len = 0;
  while (len < t && w[(a + len) % t] == w[a]) ++len;
  return len;
}

std::optional<FamilyPlan> uniform_plan(FamilyKind kind, const FamilyParams& p, const Orbits& o, std::size_t c,
                                       std::size_t c2, std::size_t weight) {
  const std::size_t need = c + c2 - 1;
  if (need > o.t) return std::nullopt;
  for (std::size_t a = 0; a < o.t; ++a) {
    if (o.w[a] != weight || run_length(o.w, a) < need) continue;
    auto plan = base_plan(kind, p, o);
    plan.row_blocks = iota_blocks(0, c, o.t);
    plan.col_blocks = iota_blocks(a + c - 1, c2, o.t);
    plan.predicted = {c * o.d, c2 * o.d, c2 * weight, c * weight};
    plan.description = "classes " + std::to_string(a) + ".." + std::to_string(a + need - 1) + " of weight " +
                       std::to_string(weight);
    return plan;
  }
  return std::nullopt;
}

// Class z such that every other class has one common weight different from w[z].
std::optional<std::size_t> distinguished_class(const std::vector<std::size_t>& w) {
  if (w.size() < 2) return std::nullopt;
  for (std::size_t z = 0; z < w.size(); ++z) {
    const std::size_t other = w[(z + 1) % w.size()];
    if (other == w[z]) continue;
    bool ok = true;
    for (std::size_t u = 0; u < w.size() && ok; ++u) ok = u == z || w[u] == other;
    if (ok) return z;
  }
  return std::nullopt;
}

std::optional<FamilyPlan> diagonal_plan(FamilyKind kind, const FamilyParams& p, const Orbits& o, std::size_t c,
                                        std::size_t delta) {
  const auto z = distinguished_class(o.w);
  if (!z || c < 2 || c > o.t) return std::nullopt;
  const std::size_t w = o.w[(*z + 1) % o.t];
  const std::size_t n = o.w[*z] + (c - 1) * w;
  if (delta >= n) return std::nullopt;
  auto plan = base_plan(kind, p, o);
  plan.row_blocks = iota_blocks(0, c, o.t);
  plan.col_blocks = iota_blocks(*z, c, o.t);
  plan.matching_rounds = delta;
  plan.predicted = square(c * o.d, n - delta);
  plan.description = "distinguished class " + std::to_string(*z) + " of weight " + std::to_string(o.w[*z]) +
                     " on the diagonal, other classes of weight " + std::to_string(w);
  return plan;
}

std::vector<std::size_t> distinct_weights(const std::vector<std::size_t>& w) {
  std::set<std::size_t> s(w.begin(), w.end());
  s.erase(0);
  return {s.rbegin(), s.rend()};
}

std::vector<FamilyPlan> plans_for_order(FamilyKind kind, const FamilyParams& p, const Orbits& o) {
  std::vector<FamilyPlan> out;
  const std::size_t c2 = p.c2 == 0 ? p.c : p.c2;
  switch (kind) {
    case FamilyKind::reduce_full: break;
    case FamilyKind::uniform_cxc:
      for (auto w : distinct_weights(o.w)) {
        if (auto plan = uniform_plan(kind, p, o, p.c, c2, w)) out.push_back(std::move(*plan));
      }
      break;
    case FamilyKind::uniform_reduced:
      for (auto w : distinct_weights(o.w)) {
        if (p.delta >= p.c * w) continue;
        if (auto plan = uniform_plan(kind, p, o, p.c, p.c, w)) {
          plan->matching_rounds = p.delta;
          plan->predicted = square(p.c * o.d, p.c * w - p.delta);
          out.push_back(std::move(*plan));
        }
      }
      break;
    case FamilyKind::w0_distinct:
      if (p.c + 1 <= o.t) {
        if (auto plan = diagonal_plan(kind, p, o, p.c, p.delta)) out.push_back(std::move(*plan));
      }
      break;
    case FamilyKind::four_block: {
      std::set<std::size_t> done;
      for (std::size_t f = 1; f < o.t; ++f) {
        for (std::size_t u = 1; u < o.t; ++u) {
          if ((f + u) % o.t == 0) continue;
          for (std::size_t i = 0; i < o.t; ++i) {
            const std::size_t a = i, b = (i + f) % o.t, c = (i + f + u) % o.t, e = (i + 2 * f + u) % o.t;
            const std::size_t w = o.w[a];
            if (w == 0 || done.count(w) || o.w[b] != w || o.w[c] != w || o.w[e] != w) continue;
            auto plan = base_plan(kind, p, o);
            plan.row_blocks = {0, f};
            plan.col_blocks = {b, e};
            plan.predicted = square(2 * o.d, 2 * w);
            plan.description = "i=" + std::to_string(i) + " f=" + std::to_string(f) + " u=" + std::to_string(u);
            out.push_back(std::move(plan));
            done.insert(w);
          }
        }
      }
      break;
    }
    case FamilyKind::shifted_double: {
      const std::size_t u = p.c;
      if (u < 1 || u + 1 > o.t) break;
      for (std::size_t s = 0; s < o.t; ++s) {
        bool periodic = true;
        for (std::size_t k = 0; k < u && periodic; ++k) periodic = o.w[(s + u + 1 + k) % o.t] == o.w[(s + k) % o.t];
        if (!periodic) continue;
        std::size_t n = 0;
        for (std::size_t k = 0; k <= u; ++k) n += o.w[(s + k) % o.t];
        if (n == 0) continue;
        auto plan = base_plan(kind, p, o);
        plan.row_blocks = iota_blocks(0, u + 1, o.t);
        plan.col_blocks = iota_blocks(s + u, u + 1, o.t);
        plan.predicted = square((u + 1) * o.d, n);
        plan.description = "window starting at class " + std::to_string(s);
        out.push_back(std::move(plan));
        break;
      }
      break;
    }
    case FamilyKind::row_strip:
      for (auto w : distinct_weights(o.w)) {
        std::vector<std::size_t> cols;
        for (std::size_t u = 0; u < o.t && cols.size() < p.c; ++u) {
          if (o.w[u] == w) cols.push_back(u);
        }
        if (cols.size() < p.c || p.c < 2) continue;
        auto plan = base_plan(kind, p, o);
        plan.row_blocks = {0};
        plan.col_blocks = cols;
        plan.predicted = {o.d, p.c * o.d, p.c * w, w};
        plan.description = std::to_string(p.c) + " classes of weight " + std::to_string(w);
        out.push_back(std::move(plan));
      }
      break;
    case FamilyKind::baer:
    case FamilyKind::antiflag_t_q_plus_1: break;
  }
  return out;
}

std::vector<std::size_t> subgroup_orders(const CyclicConfig& config, const FamilyParams& p) {
  if (p.d) {
    if (*p.d < 2 || config.v % *p.d != 0) {
      out_of_range(std::to_string(*p.d) + " is not a subgroup order of " + std::to_string(config.v));
    }
    return {*p.d};
  }
  std::vector<std::size_t> out;
  for (auto d : divisors(config.v)) {
    if (d > 1 && d < config.v) out.push_back(static_cast<std::size_t>(d));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }

}  // namespace

std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::reduce_full: return "reduce_full";
    case FamilyKind::uniform_cxc: return "uniform_cxc";
    case FamilyKind::uniform_reduced: return "uniform_reduced";
    case FamilyKind::w0_distinct: return "w0_distinct";
    case FamilyKind::four_block: return "four_block";
    case FamilyKind::shifted_double: return "shifted_double";
    case FamilyKind::row_strip: return "row_strip";
    case FamilyKind::baer: return "baer";
    case FamilyKind::antiflag_t_q_plus_1: return "antiflag_t_q_plus_1";
  }
  return "reduce_full";
}

FamilyKind parse_family(std::string_view name) {
  for (auto k : {FamilyKind::reduce_full, FamilyKind::uniform_cxc, FamilyKind::uniform_reduced,
                 FamilyKind::w0_distinct, FamilyKind::four_block, FamilyKind::shifted_double, FamilyKind::row_strip,
                 FamilyKind::baer, FamilyKind::antiflag_t_q_plus_1}) {
    if (name == to_string(k)) return k;
  }
  throw Error(Errc::invalid_argument, "unknown family '" + std::string(name) + "'");
}

std::vector<FamilyPlan> family_recipes(FamilyKind kind, const FamilyParams& p) {
  require_prime_power(p.q);
  switch (kind) {
    case FamilyKind::reduce_full: {
      const auto config = singer_structure(p.structure, p.q);
      if (p.delta + 1 > config.k) out_of_range("delta must be at most k - 1");
      const auto o = decompose(config, config.v);
      auto plan = base_plan(kind, p, o);
      plan.row_blocks = {0};
      plan.col_blocks = {0};
      auto keep = o.blocks->class_shifts(0);
      keep.resize(config.k - p.delta);
      plan.reductions[0] = keep;
      plan.predicted = square(config.v, config.k - p.delta);
      plan.description = "cyclic " + std::string(to_string(p.structure)) + " matrix keeping " +
                         std::to_string(keep.size()) + " of " + std::to_string(config.k) + " shifts";
      return {plan};
    }
    case FamilyKind::baer: {
      const auto root = exact_sqrt(p.q);
      if (p.structure != StructureKind::projective || !root) out_of_range("Baer family needs PG(2,q) with q square");
      const std::size_t r = *root;
      if (p.c < 2 || p.c > p.q - r) out_of_range("Baer family needs 2 <= c <= q - sqrt(q)");
      if (p.delta > r + p.c - 1) out_of_range("Baer family needs delta <= sqrt(q) + c - 1");
      const std::size_t d = p.q + r + 1;
      if (p.d && *p.d != d) out_of_range("Baer family uses subgroup order q + sqrt(q) + 1");
      const auto o = decompose(pg2_singer(p.q), d);
      auto plan = diagonal_plan(kind, p, o, p.c, p.delta);
      if (!plan || plan->predicted != square(p.c * d, r + p.c - p.delta)) {
        throw Error(Errc::internal_consistency, "Baer orbit profile does not have the expected shape");
      }
      return {*plan};
    }
    case FamilyKind::antiflag_t_q_plus_1: {
      if (p.structure != StructureKind::antiflag) out_of_range("family needs the anti-flag structure");
      const std::size_t bound = p.delta >= 1 ? p.q : ceil_half(p.q);
      if (p.c < 2 || p.c > bound) out_of_range("family needs 2 <= c <= " + std::to_string(bound));
      if (p.delta + 1 > p.c) out_of_range("family needs delta <= c - 1");
      const std::size_t d = p.q - 1;
      if (d < 2) out_of_range("family needs q > 2");
      if (p.d && *p.d != d) out_of_range("family uses subgroup order q - 1");
      const auto o = decompose(antiflag_singer(p.q), d);
      const auto zero = std::find(o.w.begin(), o.w.end(), std::size_t{0});
      if (zero == o.w.end() || std::count(o.w.begin(), o.w.end(), std::size_t{1}) != static_cast<long>(p.q)) {
        throw Error(Errc::internal_consistency, "anti-flag profile for t = q + 1 is not one zero and q ones");
      }
      const std::size_t z = static_cast<std::size_t>(zero - o.w.begin());
      auto plan = base_plan(kind, p, o);
      plan.row_blocks = iota_blocks(0, p.c, o.t);
      if (p.delta == 0) {
        plan.col_blocks = iota_blocks(z + p.c, p.c, o.t);
        plan.description = "run of weight-one classes after the empty class " + std::to_string(z);
      } else {
        plan.col_blocks = iota_blocks(z, p.c, o.t);
        plan.matching_rounds = p.delta - 1;
        plan.description = "empty class " + std::to_string(z) + " on the diagonal";
      }
      plan.predicted = square(p.c * d, p.c - p.delta);
      return {plan};
    }
    default: break;
  }

  if (p.c == 0) out_of_range("family needs c >= 1");
  const auto config = singer_structure(p.structure, p.q);
  std::vector<FamilyPlan> out;
  for (auto d : subgroup_orders(config, p)) {
    const auto o = decompose(config, d);
    for (auto& plan : plans_for_order(kind, p, o)) out.push_back(std::move(plan));
  }
  if (out.empty()) {
    out_of_range("no subgroup order admits " + std::string(to_string(kind)) + " with c=" + std::to_string(p.c) +
                 " delta=" + std::to_string(p.delta));
  }
  return out;
}

BlockOverrides matching_reduction(const BlockCirculant& bc, const ClassReductions& reductions,
                                  const std::vector<std::size_t>& row_blocks,
                                  const std::vector<std::size_t>& col_blocks, std::size_t rounds) {
  BlockOverrides cells;
  const std::size_t n = row_blocks.size();
  if (rounds == 0) return {};
  if (col_blocks.size() != n) throw Error(Errc::invalid_argument, "matching rounds need a square block selection");
  std::vector<std::vector<std::vector<std::size_t>>> grid(n, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t i = row_blocks[a], j = col_blocks[b];
      auto it = reductions.find(bc.difference_class(i, j));
      grid[a][b] = it == reductions.end() ? bc.block(i, j) : bc.to_block_frame(i, j, it->second);
    }
  }
  for (std::size_t round = 0; round < rounds; ++round) {
    // Kuhn's augmenting paths on the support of the current weight grid.
    std::vector<std::size_t> match_col(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<bool> used(n, false);
      auto augment = [&](auto&& self, std::size_t row) -> bool {
        for (std::size_t b = 0; b < n; ++b) {
          if (grid[row][b].empty() || used[b]) continue;
          used[b] = true;
          if (match_col[b] == n || self(self, match_col[b])) {
            match_col[b] = row;
            return true;
          }
        }
        return false;
      };
      if (!augment(augment, a)) {
        throw Error(Errc::internal_consistency, "block weight grid has no perfect matching", {round, a});
      }
    }
    for (std::size_t b = 0; b < n; ++b) grid[match_col[b]][b].pop_back();
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) cells[{row_blocks[a], col_blocks[b]}] = grid[a][b];
  }
  return cells;
}

ConstructionResult execute_plan(const FamilyPlan& plan) {
  if (!plan.blocks) throw Error(Errc::invalid_argument, "plan has no block structure");
  const auto overrides =
      matching_reduction(*plan.blocks, plan.reductions, plan.row_blocks, plan.col_blocks, plan.matching_rounds);
  return construction_b(*plan.blocks, plan.reductions, plan.row_blocks, plan.col_blocks, overrides);
}

}  // namespace j4free
