#include "j4free/planes.hpp"

#include <algorithm>
#include <string>

#include "j4free/error.hpp"
#include "j4free/number_theory.hpp"

namespace j4free {

std::string_view to_string(StructureKind k) {
  return k == StructureKind::projective ? "projective" : "antiflag";
}

StructureKind parse_structure(std::string_view name) {
  if (name == "projective" || name == "pg2") return StructureKind::projective;
  if (name == "antiflag" || name == "affine") return StructureKind::antiflag;
  throw Error(Errc::invalid_argument, "unknown structure '" + std::string(name) + "'");
}

std::vector<std::size_t> CyclicConfig::line(std::size_t j) const {
  std::vector<std::size_t> out;
  out.reserve(k);
  for (auto b : base_block) out.push_back((b + j) % v);
  std::sort(out.begin(), out.end());
  return out;
}

bool CyclicConfig::incident(std::size_t line_index, std::size_t point) const {
  const std::size_t diff = (point + v - line_index % v) % v;
  return std::binary_search(base_block.begin(), base_block.end(), diff);
}

Matrix01 CyclicConfig::incidence() const {
  Matrix01 m(v, v);
  for (std::size_t j = 0; j < v; ++j) {
    for (auto b : base_block) m.set(j, (b + j) % v);
  }
  return m;
}

bool is_perfect_difference_set(const std::vector<std::size_t>& block, std::size_t v) {
  if (v == 0 || block.size() * (block.size() - 1) != v - 1) return false;
  return has_distinct_differences(block, v);
}

bool has_distinct_differences(const std::vector<std::size_t>& block, std::size_t v) {
  std::vector<bool> seen(v, false);
  for (std::size_t a = 0; a < block.size(); ++a) {
    for (std::size_t b = 0; b < block.size(); ++b) {
      if (a == b) continue;
      const std::size_t d = (block[a] + v - block[b]) % v;
      if (d == 0 || seen[d]) return false;
      seen[d] = true;
    }
  }
  return true;
}

CyclicConfig pg2_singer(std::uint32_t q) {
  const auto pp = require_prime_power(q);
  const auto field = FieldCtx::create(pp.p, 3 * pp.h);
  CyclicConfig c;
  c.q = q;
  c.p = pp.p;
  c.kind = StructureKind::projective;
  c.v = std::size_t{q} * q + q + 1;
  c.k = q + 1;
  for (std::size_t i = 0; i < c.v; ++i) {
    if (rel_trace(field, 3, field.exp(i)) == field.zero()) c.base_block.push_back(i);
  }
  if (!is_perfect_difference_set(c.base_block, c.v)) {
    throw Error(Errc::internal_consistency, "trace line is not a perfect difference set");
  }
  return c;
}

CyclicConfig antiflag_singer(std::uint32_t q) {
  const auto pp = require_prime_power(q);
  const auto field = FieldCtx::create(pp.p, 2 * pp.h);
  CyclicConfig c;
  c.q = q;
  c.p = pp.p;
  c.kind = StructureKind::antiflag;
  c.v = std::size_t{q} * q - 1;
  c.k = q;
  for (std::size_t i = 0; i < c.v; ++i) {
    if (rel_trace(field, 2, field.exp(i)) == field.one()) c.base_block.push_back(i);
  }
  if (c.base_block.size() != c.k || !has_distinct_differences(c.base_block, c.v)) {
    throw Error(Errc::internal_consistency, "anti-flag base line has repeated differences");
  }
  return c;
}

CyclicConfig singer_structure(StructureKind kind, std::uint32_t q) {
  return kind == StructureKind::projective ? pg2_singer(q) : antiflag_singer(q);
}

Triple PlaneModel::normalize(Triple t) const {
  for (auto& x : t) {
    if (x == field->zero()) continue;
    const Element s = field->inv(x);
    for (auto& y : t) y = field->mul(y, s);
    return t;
  }
  throw Error(Errc::invalid_argument, "zero vector is not a projective point");
}

std::size_t PlaneModel::index_of(const Triple& raw) const {
  const Triple t = normalize(raw);
  if (t[0] == field->one()) return std::size_t{t[1].code} * q + t[2].code;
  if (t[1] == field->one()) return std::size_t{q} * q + t[2].code;
  return std::size_t{q} * q + q;
}

bool PlaneModel::incident(std::size_t line, std::size_t point) const {
  const auto& l = lines[line];
  const auto& p = points[point];
  Element s = field->zero();
  for (int i = 0; i < 3; ++i) s = field->add(s, field->mul(l[i], p[i]));
  return s == field->zero();
}

Matrix01 PlaneModel::incidence() const { return Matrix01::from_rows(lines.size(), points.size(), line_points); }

PlaneModel pg2_coords(std::uint32_t q) {
  const auto pp = require_prime_power(q);
  PlaneModel pm;
  pm.q = q;
  pm.field = std::make_shared<const FieldCtx>(FieldCtx::create(pp.p, pp.h));
  const Element zero{0}, one{1};
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) pm.points.push_back({one, Element{a}, Element{b}});
  }
  for (std::uint32_t a = 0; a < q; ++a) pm.points.push_back({zero, one, Element{a}});
  pm.points.push_back({zero, zero, one});
  pm.lines = pm.points;
  const std::size_t n = pm.points.size();
  pm.line_points.assign(n, {});
  pm.point_lines.assign(n, {});
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t p = 0; p < n; ++p) {
      if (pm.incident(l, p)) {
        pm.line_points[l].push_back(p);
        pm.point_lines[p].push_back(l);
      }
    }
  }
  return pm;
}

std::string_view to_string(PointSetKind k) {
  switch (k) {
    case PointSetKind::hyperoval_complement: return "hyperoval_complement";
    case PointSetKind::conic_internal: return "conic_internal";
    case PointSetKind::conic_external: return "conic_external";
    case PointSetKind::hermitian_complement: return "hermitian_complement";
    case PointSetKind::custom: return "custom";
  }
  return "custom";
}

PointSetKind parse_point_set_kind(std::string_view name) {
  for (auto k : {PointSetKind::hyperoval_complement, PointSetKind::conic_internal, PointSetKind::conic_external,
                 PointSetKind::hermitian_complement, PointSetKind::custom}) {
    if (name == to_string(k)) return k;
  }
  if (name == "hyperoval") return PointSetKind::hyperoval_complement;
  if (name == "internal") return PointSetKind::conic_internal;
  if (name == "external") return PointSetKind::conic_external;
  if (name == "hermitian") return PointSetKind::hermitian_complement;
  throw Error(Errc::invalid_argument, "unknown point set '" + std::string(name) + "'");
}

std::size_t PointSet::size() const { return static_cast<std::size_t>(std::count(member.begin(), member.end(), true)); }

std::vector<std::size_t> PointSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < member.size(); ++i) {
    if (member[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> conic_points(const PlaneModel& plane) {
  const auto& f = *plane.field;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < plane.points.size(); ++i) {
    const auto& x = plane.points[i];
    if (f.mul(x[1], x[1]) == f.mul(x[0], x[2])) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> hermitian_points(const PlaneModel& plane) {
  const auto r = exact_sqrt(plane.q);
  if (!r) throw Error(Errc::parity_mismatch, "Hermitian curve needs a square order");
  const auto& f = *plane.field;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < plane.points.size(); ++i) {
    Element s = f.zero();
    for (const auto& x : plane.points[i]) s = f.add(s, f.pow(x, *r + 1));
    if (s == f.zero()) out.push_back(i);
  }
  return out;
}

PointSet special_point_set(const PlaneModel& plane, PointSetKind kind) {
  PointSet ps;
  ps.q = plane.q;
  ps.kind = kind;
  const std::size_t n = plane.points.size();
  const bool even = plane.q % 2 == 0;
  switch (kind) {
    case PointSetKind::hyperoval_complement: {
      if (!even) throw Error(Errc::parity_mismatch, "hyperoval needs q even");
      ps.member.assign(n, true);
      for (auto i : conic_points(plane)) ps.member[i] = false;
      ps.member[plane.index_of({Element{0}, Element{1}, Element{0}})] = false;  // nucleus
      break;
    }
    case PointSetKind::conic_internal:
    case PointSetKind::conic_external: {
      if (even) throw Error(Errc::parity_mismatch, "conic point classes need q odd");
      std::vector<bool> on_conic(n, false);
      for (auto i : conic_points(plane)) on_conic[i] = true;
      std::vector<bool> tangent(n, false);
      for (std::size_t l = 0; l < n; ++l) {
        std::size_t meet = 0;
        for (auto p : plane.line_points[l]) meet += on_conic[p] ? 1 : 0;
        tangent[l] = meet == 1;
      }
      const std::size_t wanted = kind == PointSetKind::conic_internal ? 0 : 2;
      ps.member.assign(n, false);
      for (std::size_t p = 0; p < n; ++p) {
        if (on_conic[p]) continue;
        std::size_t t = 0;
        for (auto l : plane.point_lines[p]) t += tangent[l] ? 1 : 0;
        ps.member[p] = t == wanted;
      }
      break;
    }
    case PointSetKind::hermitian_complement: {
      if (!exact_sqrt(plane.q)) throw Error(Errc::parity_mismatch, "Hermitian curve needs q square");
      ps.member.assign(n, true);
      for (auto i : hermitian_points(plane)) ps.member[i] = false;
      break;
    }
    case PointSetKind::custom:
      throw Error(Errc::invalid_argument, "custom point sets are built with custom_point_set");
  }
  return ps;
}

PointSet custom_point_set(const PlaneModel& plane, const std::vector<std::size_t>& points) {
  PointSet ps;
  ps.q = plane.q;
  ps.kind = PointSetKind::custom;
  ps.member.assign(plane.points.size(), false);
  for (auto p : points) {
    if (p >= plane.points.size()) throw Error(Errc::invalid_argument, "point index out of range", {p});
    ps.member[p] = true;
  }
  return ps;
}

}  // namespace j4free
