#include "j4free/codes.hpp"

#include "json.hpp"

#include "j4free/error.hpp"
#include "j4free/incidence.hpp"

namespace j4free {

Skeleton skeleton(const Matrix01& m) {
  try {
    check_configuration(m);
  } catch (const Error& e) {
    throw Error(Errc::not_a_configuration, e.what(), e.where());
  }
  Skeleton s;
  s.m1 = m.rows();
  s.m2 = m.cols();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (auto j : m.row_support(i)) s.edges.emplace_back(i, j);
  }
  s.matrix = Matrix01(s.m1 + s.m2, s.edges.size());
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    s.matrix.set(s.edges[e].first, e);
    s.matrix.set(s.m1 + s.edges[e].second, e);
  }
  return s;
}

Skeleton qc_skeleton(const CirculantMatrix& c) {
  Skeleton s;
  s.m1 = s.m2 = c.d;
  for (auto shift : c.shifts) {
    for (std::size_t r = 0; r < c.d; ++r) s.edges.emplace_back(r, (shift - 1 + r) % c.d);
  }
  s.matrix = Matrix01(2 * c.d, s.edges.size());
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    s.matrix.set(s.edges[e].first, e);
    s.matrix.set(c.d + s.edges[e].second, e);
  }
  return s;
}

ConstituentSpec ConstituentSpec::single_parity(std::size_t n) {
  ConstituentSpec spec;
  spec.n = n;
  spec.parity = Matrix01(1, n);
  for (std::size_t j = 0; j < n; ++j) spec.parity.set(0, j);
  return spec;
}

Matrix01 expand_parity_check(const Skeleton& s, const ConstituentSpec& first, const ConstituentSpec& second) {
  if (first.parity.cols() != first.n || second.parity.cols() != second.n) {
    throw Error(Errc::length_mismatch, "parity-check width differs from the code length");
  }
  const std::size_t r1 = first.parity.rows(), r2 = second.parity.rows();
  Matrix01 h(s.m1 * r1 + s.m2 * r2, s.matrix.cols());
  for (std::size_t v = 0; v < s.m1 + s.m2; ++v) {
    const bool top = v < s.m1;
    const auto& spec = top ? first : second;
    const auto units = s.matrix.row_support(v);
    if (units.size() != spec.n) {
      throw Error(Errc::length_mismatch,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(units.size()) +
                      " but the constituent length is " + std::to_string(spec.n),
                  {v});
    }
    for (std::size_t rho = 0; rho < spec.parity.rows(); ++rho) {
      const std::size_t row = top ? rho * s.m1 + v : s.m1 * r1 + rho * s.m2 + (v - s.m1);
      for (std::size_t j = 0; j < units.size(); ++j) {
        if (spec.parity.get(rho, j)) h.set(row, units[j]);
      }
    }
  }
  return h;
}

CodeBounds bg_code_bounds(const ConfigParams& params, const std::vector<std::size_t>& k_list) {
  if (k_list.size() != params.m1 + params.m2) {
    throw Error(Errc::bad_dimension, "expected " + std::to_string(params.m1 + params.m2) + " dimensions");
  }
  std::int64_t sum = 0;
  for (std::size_t t = 0; t < k_list.size(); ++t) {
    const std::size_t degree = t < params.m1 ? params.n1 : params.n2;
    if (k_list[t] > degree) {
      throw Error(Errc::bad_dimension, "dimension " + std::to_string(k_list[t]) + " exceeds length " + std::to_string(degree), {t});
    }
    sum += static_cast<std::int64_t>(k_list[t]);
  }
  CodeBounds b;
  b.n = params.m1 * params.n1;
  b.k_upper = sum - static_cast<std::int64_t>(b.n);
  b.nonpositive = b.k_upper <= 0;
  return b;
}

std::string skeleton_to_json(const Skeleton& s) {
  nlohmann::ordered_json j;
  j["m1"] = s.m1;
  j["m2"] = s.m2;
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [r, c] : s.edges) edges.push_back({r, c});
  j["rows"] = s.matrix.row_supports();
  return j.dump() + "\n";
}

}  // namespace j4free
