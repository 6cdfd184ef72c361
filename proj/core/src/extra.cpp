#include "j4free/extra.hpp"

#include <algorithm>
#include <map>

#include "j4free/error.hpp"
#include "j4free/incidence.hpp"
#include "j4free/number_theory.hpp"

namespace j4free {
namespace {

constexpr std::uint64_t kEnumerationBound = std::uint64_t{1} << 21;

using Row = std::vector<Element>;
using Rows = std::vector<Row>;

CertifiedStructure certify(IncidenceStructure s) {
  for (auto& b : s.blocks) std::sort(b.begin(), b.end());
  CertifiedStructure out;
  out.params = check_configuration(s.to_matrix());
  out.structure = std::move(s);
  return out;
}

// Reduced row echelon form with zero rows dropped.
Rows rref(Rows m, const FieldCtx& f) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == f.zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    const Element inv = f.inv(m[rank][c]);
    for (auto& x : m[rank]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == f.zero()) continue;
      const Element factor = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[rank][k]));
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

// Every k x n matrix over GF(q) in reduced row echelon form of rank k.
template <typename Visit>
void for_each_rref(std::uint32_t k, std::uint32_t n, std::uint32_t q, Visit&& visit) {
  std::vector<std::uint32_t> pivots(k);
  for (std::uint32_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free;
    for (std::uint32_t r = 0; r < k; ++r) {
      for (std::uint32_t c = pivots[r] + 1; c < n; ++c) {
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) free.emplace_back(r, c);
      }
    }
    std::vector<std::uint32_t> digits(free.size(), 0);
    while (true) {
      Rows m(k, Row(n, Element{0}));
      for (std::uint32_t r = 0; r < k; ++r) m[r][pivots[r]] = Element{1};
      for (std::size_t i = 0; i < free.size(); ++i) m[free[i].first][free[i].second] = Element{digits[i]};
      visit(m);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    // Next pivot combination in lexicographic order.
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && pivots[i] == n - k + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++pivots[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

std::vector<std::uint32_t> key_of(const Rows& m) {
  std::vector<std::uint32_t> key;
  for (const auto& r : m) {
    for (auto x : r) key.push_back(x.code);
  }
  return key;
}

}  // namespace

Matrix01 IncidenceStructure::to_matrix() const { return Matrix01::from_rows(blocks.size(), point_ids.size(), blocks); }

CertifiedStructure construction_a(const PlaneModel& plane, const PointSet& pts, std::size_t n) {
  if (n < 2 || n > std::size_t{plane.q} + 1) {
    throw Error(Errc::param_out_of_range, "n must lie in 2..q+1", {n});
  }
  if (pts.member.size() != plane.size()) throw Error(Errc::invalid_argument, "point set belongs to another plane");
  IncidenceStructure s;
  s.label = "construction-a:" + std::string(to_string(pts.kind)) + ":q=" + std::to_string(plane.q) +
                 ":n=" + std::to_string(n);
  std::vector<std::size_t> local(plane.size(), 0);
  for (std::size_t p = 0; p < plane.size(); ++p) {
    if (!pts.member[p]) continue;
    local[p] = s.point_ids.size();
    s.point_ids.push_back(p);
  }
  for (std::size_t l = 0; l < plane.lines.size(); ++l) {
    std::vector<std::size_t> block;
    for (auto p : plane.line_points[l]) {
      if (pts.member[p]) block.push_back(local[p]);
    }
    if (block.size() == n) s.blocks.push_back(std::move(block));
  }
  if (s.blocks.empty()) throw Error(Errc::empty_line_class, "no line meets the set in exactly n points", {n});
  std::vector<std::size_t> degree(s.point_ids.size(), 0);
  for (const auto& b : s.blocks) {
    for (auto p : b) ++degree[p];
  }
  for (std::size_t p = 0; p < degree.size(); ++p) {
    if (degree[p] != degree[0]) {
      throw Error(Errc::non_constant_point_degree,
                  "point " + std::to_string(s.point_ids[p]) + " lies on " + std::to_string(degree[p]) +
                      " lines instead of " + std::to_string(degree[0]),
                  {s.point_ids[p]});
    }
  }
  return certify(std::move(s));
}

ConfigParams parabola_product_params(std::uint32_t q, std::uint32_t v) {
  if (q % 2 != 0) throw Error(Errc::odd_q, "parabola products need q even");
  const std::uint64_t qv = ipow(q, v), b = (ipow(q, 2 * v) - 1) / (q - 1);
  return {static_cast<std::size_t>(qv * (ipow(q, v - 1) - 1) * b + qv * (qv - 1) / 2),
          static_cast<std::size_t>(qv * (qv - 1)), q, static_cast<std::size_t>(b - qv + (q - 2) / 2)};
}

CertifiedStructure parabola_product_complement(std::uint32_t q, std::uint32_t v) {
  const auto pp = require_prime_power(q);
  if (q % 2 != 0) throw Error(Errc::odd_q, "parabola products need q even");
  if (v == 0) throw Error(Errc::param_out_of_range, "v must be positive");
  const std::uint32_t dim = 2 * v;
  const std::uint64_t total = ipow(q, dim);
  if (total > kEnumerationBound || dim > 40) throw Error(Errc::table_overflow, "AG(2v,q) is too large");
  const auto f = FieldCtx::create(pp.p, pp.h);

  const auto coords = [&](std::uint64_t idx) {
    std::vector<std::uint32_t> c(dim);
    for (std::uint32_t i = 0; i < dim; ++i, idx /= q) c[i] = static_cast<std::uint32_t>(idx % q);
    return c;
  };
  const auto index = [&](const std::vector<std::uint32_t>& c) {
    std::uint64_t idx = 0;
    for (std::uint32_t i = dim; i-- > 0;) idx = idx * q + c[i];
    return idx;
  };

  std::vector<bool> in_k(total, false);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const auto c = coords(idx);
    bool on = true;
    for (std::uint32_t i = 0; i < v && on; ++i) on = f.mul(Element{c[2 * i]}, Element{c[2 * i]}).code == c[2 * i + 1];
    in_k[idx] = on;
  }

  IncidenceStructure s;
  s.label = "parabola-product:q=" + std::to_string(q) + ":v=" + std::to_string(v);
  std::vector<std::size_t> local(total, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (in_k[idx]) continue;
    local[idx] = s.point_ids.size();
    s.point_ids.push_back(static_cast<std::size_t>(idx));
  }

  std::vector<std::vector<std::uint32_t>> directions;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    auto c = coords(idx);
    const auto lead = std::find_if(c.begin(), c.end(), [](auto x) { return x != 0; });
    if (*lead == 1) directions.push_back(std::move(c));
  }

  std::vector<std::uint64_t> line(q);
  for (std::uint64_t base = 0; base < total; ++base) {
    if (in_k[base]) continue;
    const auto pc = coords(base);
    for (const auto& dir : directions) {
      bool inside = true, smallest = true;
      for (std::uint32_t lam = 0; lam < q && inside; ++lam) {
        std::vector<std::uint32_t> c(dim);
        for (std::uint32_t i = 0; i < dim; ++i) c[i] = f.add(Element{pc[i]}, f.mul(Element{lam}, Element{dir[i]})).code;
        line[lam] = index(c);
        inside = !in_k[line[lam]];
        smallest = smallest && line[lam] >= base;
      }
      if (!inside || !smallest) continue;
      std::vector<std::size_t> block;
      for (auto x : line) block.push_back(local[x]);
      s.blocks.push_back(std::move(block));
    }
  }
  return certify(std::move(s));
}

std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint32_t q) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint32_t j = 0; j < k; ++j) r = r * (ipow(q, n - j) - 1) / (ipow(q, j + 1) - 1);
  return r;
}

ConfigParams subspace_params(std::uint32_t h, std::uint32_t s, std::uint32_t q) {
  if (h < 1 || s + 1 > h) throw Error(Errc::dimension_out_of_range, "need 0 <= s <= h - 1", {h, s});
  return {static_cast<std::size_t>(gaussian_binomial(h + 1, s + 2, q)),
          static_cast<std::size_t>(gaussian_binomial(h + 1, s + 1, q)),
          static_cast<std::size_t>((ipow(q, s + 2) - 1) / (q - 1)),
          static_cast<std::size_t>((ipow(q, h - s) - 1) / (q - 1))};
}

CertifiedStructure subspace_configuration(std::uint32_t h, std::uint32_t s, std::uint32_t q) {
  const auto pp = require_prime_power(q);
  const auto expected = subspace_params(h, s, q);
  if (static_cast<std::uint64_t>(expected.m1) * expected.n1 > kEnumerationBound * 4) {
    throw Error(Errc::table_overflow, "subspace lattice is too large");
  }
  const auto f = FieldCtx::create(pp.p, pp.h);
  const std::uint32_t n = h + 1, a = s + 1, b = s + 2;

  IncidenceStructure st;
  st.label = "subspace:h=" + std::to_string(h) + ":s=" + std::to_string(s) + ":q=" + std::to_string(q);
  std::map<std::vector<std::uint32_t>, std::size_t> point_index;
  for_each_rref(a, n, q, [&](const Rows& m) {
    point_index.emplace(key_of(m), point_index.size());
  });
  st.point_ids.resize(point_index.size());
  for (std::size_t i = 0; i < st.point_ids.size(); ++i) st.point_ids[i] = i;

  std::vector<Rows> sub_frames;
  for_each_rref(a, b, q, [&](const Rows& m) { sub_frames.push_back(m); });

  for_each_rref(b, n, q, [&](const Rows& block) {
    std::vector<std::size_t> pts;
    for (const auto& c : sub_frames) {
      Rows span(a, Row(n, Element{0}));
      for (std::uint32_t r = 0; r < a; ++r) {
        for (std::uint32_t k = 0; k < b; ++k) {
          if (c[r][k] == f.zero()) continue;
          for (std::uint32_t col = 0; col < n; ++col) {
            span[r][col] = f.add(span[r][col], f.mul(c[r][k], block[k][col]));
          }
        }
      }
      const auto it = point_index.find(key_of(rref(span, f)));
      if (it == point_index.end()) throw Error(Errc::internal_consistency, "subspace missing from the point list");
      pts.push_back(it->second);
    }
    st.blocks.push_back(std::move(pts));
  });
  return certify(std::move(st));
}

ConfigParams q_cancellation_params(std::uint32_t q, std::uint32_t s, bool p_on_line) {
  if (s + 2 > q) throw Error(Errc::too_many_deletions, "need s <= q - 2", {s});
  const std::size_t qq = q;
  const std::size_t m = p_on_line ? qq * qq - qq * s : qq * qq - (qq - 1) * s - 1;
  return {m, m, qq - s, qq - s};
}

CertifiedStructure q_cancellation(std::uint32_t q, std::uint32_t s, bool p_on_line) {
  q_cancellation_params(q, s, p_on_line);
  const auto plane = pg2_coords(q);
  const Element zero{0}, one{1};
  const std::size_t ell = plane.index_of({one, zero, zero});
  const std::size_t p = p_on_line ? plane.index_of({zero, one, zero}) : plane.index_of({one, zero, zero});

  std::vector<std::size_t> sel_points{p}, sel_lines{ell};
  for (auto x : plane.line_points[ell]) {
    if (sel_points.size() == std::size_t{s} + 1) break;
    if (x != p) sel_points.push_back(x);
  }
  if (p_on_line) {
    for (auto l : plane.point_lines[p]) {
      if (sel_lines.size() == std::size_t{s} + 1) break;
      if (l != ell) sel_lines.push_back(l);
    }
  } else {
    for (std::size_t i = 1; i < sel_points.size(); ++i) {
      for (auto l : plane.point_lines[sel_points[i]]) {
        if (plane.incident(l, p)) sel_lines.push_back(l);
      }
    }
  }

  std::vector<bool> line_gone(plane.size(), false), point_gone(plane.size(), false);
  for (auto x : sel_points) {
    point_gone[x] = true;
    for (auto l : plane.point_lines[x]) line_gone[l] = true;
  }
  for (auto l : sel_lines) {
    line_gone[l] = true;
    for (auto x : plane.line_points[l]) point_gone[x] = true;
  }

  IncidenceStructure st;
  st.label = "q-cancellation:q=" + std::to_string(q) + ":s=" + std::to_string(s) +
                  (p_on_line ? ":p-on-line" : ":p-off-line");
  std::vector<std::size_t> local(plane.size(), 0);
  for (std::size_t x = 0; x < plane.size(); ++x) {
    if (point_gone[x]) continue;
    local[x] = st.point_ids.size();
    st.point_ids.push_back(x);
  }
  for (std::size_t l = 0; l < plane.size(); ++l) {
    if (line_gone[l]) continue;
    std::vector<std::size_t> block;
    for (auto x : plane.line_points[l]) {
      if (!point_gone[x]) block.push_back(local[x]);
    }
    st.blocks.push_back(std::move(block));
  }
  return certify(std::move(st));
}

}  // namespace j4free
