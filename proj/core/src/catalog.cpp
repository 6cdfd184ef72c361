#include "j4free/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "fixtures.hpp"
#include "j4free/error.hpp"
#include "j4free/extra.hpp"
#include "j4free/number_theory.hpp"
#include "j4free/recipes.hpp"
#include "j4free/search.hpp"
#include "j4free/singer.hpp"

namespace j4free {
namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw Error(Errc::parse_error, "expected a number, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

// Data rows of an embedded TSV: comment lines and the header are dropped.
std::vector<std::vector<std::string>> tsv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  bool header = true;
  for (auto& line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    rows.push_back(split(line, '\t'));
  }
  return rows;
}

std::vector<ProfileFixture> profile_fixtures(std::string_view text) {
  std::vector<ProfileFixture> out;
  for (const auto& f : tsv_rows(text)) {
    if (f.size() < 4) throw Error(Errc::parse_error, "profile row needs 4 fields");
    ProfileFixture p;
    p.q = static_cast<std::uint32_t>(to_size(f[0]));
    p.d = to_size(f[1]);
    p.t = to_size(f[2]);
    p.w = parse_value_counts(f[3]);
    if (p.w.size() != p.t) throw Error(Errc::parse_error, "profile length differs from t");
    out.push_back(std::move(p));
  }
  return out;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

ConstructionResult run_family(FamilyKind kind, StructureKind structure, const Recipe& r, std::optional<std::size_t> d) {
  FamilyParams p;
  p.structure = structure;
  p.q = r.q;
  p.d = d;
  p.c = r.c;
  p.delta = r.delta;
  const auto plans = family_recipes(kind, p);
  return execute_plan(plans.front());
}

}  // namespace

std::vector<std::size_t> parse_value_counts(std::string_view text) {
  std::vector<std::size_t> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, '_');
    if (parts.size() > 2) throw Error(Errc::parse_error, "bad run '" + item + "'");
    const std::size_t value = to_size(parts[0]);
    const std::size_t count = parts.size() == 2 ? to_size(parts[1]) : 1;
    out.insert(out.end(), count, value);
  }
  return out;
}

std::vector<ProfileFixture> projective_profile_fixtures() { return profile_fixtures(fixtures::table1_tsv()); }
std::vector<ProfileFixture> antiflag_profile_fixtures() { return profile_fixtures(fixtures::table2_tsv()); }

std::string Recipe::label() const {
  std::ostringstream os;
  os << "n*=" << n_star << " m2=" << m2 << " code=" << static_cast<char>(code) << " q=" << q;
  if (c != 0) os << " c=" << c;
  os << " delta=" << delta;
  return os.str();
}

std::vector<Recipe> recipe_fixtures() {
  std::vector<Recipe> out;
  for (const auto& f : tsv_rows(fixtures::table3_tsv())) {
    if (f.size() < 6) throw Error(Errc::parse_error, "recipe row needs 6 fields");
    if (f[2].size() != 1 || f[2][0] < 'a' || f[2][0] > 'f') throw Error(Errc::parse_error, "bad code '" + f[2] + "'");
    const auto n_stars = split(f[0], ',');
    const auto deltas = f[5].empty() ? std::vector<std::string>{} : split(f[5], ',');
    if (!deltas.empty() && deltas.size() != n_stars.size()) {
      throw Error(Errc::parse_error, "n* and delta lists differ in length");
    }
    for (std::size_t i = 0; i < n_stars.size(); ++i) {
      Recipe r;
      r.n_star = to_size(n_stars[i]);
      r.m2 = to_size(f[1]);
      r.code = static_cast<RecipeCode>(f[2][0]);
      r.q = static_cast<std::uint32_t>(to_size(f[3]));
      r.c = f[4].empty() ? 0 : to_size(f[4]);
      r.delta = deltas.empty() ? 0 : to_size(deltas[i]);
      out.push_back(r);
    }
  }
  return out;
}

std::optional<Recipe> find_recipe(std::size_t n_star, std::optional<std::size_t> m2) {
  for (const auto& r : recipe_fixtures()) {
    if (r.n_star == n_star && (!m2 || r.m2 == *m2)) return r;
  }
  return std::nullopt;
}

RecipeResult execute_recipe(const Recipe& r) {
  RecipeResult out;
  switch (r.code) {
    case RecipeCode::hermitian: {
      const auto plane = pg2_coords(r.q);
      const auto pts = special_point_set(plane, PointSetKind::hermitian_complement);
      auto cs = construction_a(plane, pts, r.n_star);
      out.matrix = cs.structure.to_matrix();
      out.params = cs.params;
      out.description = cs.structure.label;
      break;
    }
    case RecipeCode::baer:
    case RecipeCode::antiflag_family:
    case RecipeCode::projective_reduction:
    case RecipeCode::antiflag_reduction:
    case RecipeCode::distinguished_class: {
      ConstructionResult res;
      std::string name;
      if (r.code == RecipeCode::baer) {
        res = run_family(FamilyKind::baer, StructureKind::projective, r, std::nullopt);
        name = "baer";
      } else if (r.code == RecipeCode::antiflag_family) {
        res = run_family(FamilyKind::antiflag_t_q_plus_1, StructureKind::antiflag, r, std::nullopt);
        name = "antiflag_t_q_plus_1";
      } else if (r.code == RecipeCode::projective_reduction) {
        res = run_family(FamilyKind::reduce_full, StructureKind::projective, r, std::nullopt);
        name = "reduce_full:projective";
      } else if (r.code == RecipeCode::antiflag_reduction) {
        res = run_family(FamilyKind::reduce_full, StructureKind::antiflag, r, std::nullopt);
        name = "reduce_full:antiflag";
      } else {
        if (r.c == 0 || r.m2 % r.c != 0) throw Error(Errc::param_out_of_range, "c must divide m2");
        res = run_family(FamilyKind::w0_distinct, StructureKind::projective, r, r.m2 / r.c);
        name = "w0_distinct";
      }
      out.matrix = std::move(res.matrix);
      out.params = res.params;
      out.description = name + ":" + r.label();
      break;
    }
  }
  const ConfigParams want{r.m2, r.m2, r.n_star, r.n_star};
  if (out.params != want) {
    throw Error(Errc::internal_consistency, r.label() + " produced " + out.params.str() + " instead of " + want.str());
  }
  return out;
}

std::vector<TableCheck> check_profile_table(StructureKind structure, std::uint32_t q_min, std::uint32_t q_max,
                                            unsigned threads) {
  std::vector<ProfileFixture> rows;
  for (auto& f : structure == StructureKind::projective ? projective_profile_fixtures() : antiflag_profile_fixtures()) {
    if (f.q >= q_min && f.q <= q_max) rows.push_back(std::move(f));
  }
  std::map<std::uint32_t, std::vector<std::size_t>> by_q;
  for (std::size_t i = 0; i < rows.size(); ++i) by_q[rows[i].q].push_back(i);
  std::vector<std::pair<std::uint32_t, std::vector<std::size_t>>> groups(by_q.begin(), by_q.end());

  std::vector<TableCheck> out(rows.size());
  parallel_for(groups.size(), threads, [&](std::size_t g) {
    const auto& [q, members] = groups[g];
    std::optional<CyclicConfig> config;
    std::string failure;
    try {
      config = singer_structure(structure, q);
    } catch (const Error& e) {
      failure = e.what();
    }
    for (auto i : members) {
      const auto& f = rows[i];
      auto& check = out[i];
      check.label = "q=" + std::to_string(f.q) + " d=" + std::to_string(f.d) + " t=" + std::to_string(f.t);
      check.expected = format_multiset(f.w);
      if (!config) {
        check.actual = failure;
        continue;
      }
      try {
        const auto od = orbit_decompose(*config, f.d);
        check.actual = format_multiset(od.multiset());
        check.match = od.t == f.t && check.actual == check.expected;
      } catch (const Error& e) {
        check.actual = e.what();
      }
    }
  });
  return out;
}

std::vector<TableCheck> check_recipe_table(std::optional<std::size_t> n_star, unsigned threads) {
  std::vector<Recipe> recipes;
  for (const auto& r : recipe_fixtures()) {
    if (!n_star || r.n_star == *n_star) recipes.push_back(r);
  }
  std::vector<TableCheck> out(recipes.size());
  parallel_for(recipes.size(), threads, [&](std::size_t i) {
    const auto& r = recipes[i];
    auto& check = out[i];
    check.label = r.label();
    check.expected = ConfigParams{r.m2, r.m2, r.n_star, r.n_star}.str();
    try {
      const auto res = execute_recipe(r);
      check.actual = res.params.str();
      check.match = true;
    } catch (const Error& e) {
      check.actual = e.what();
    }
  });
  return out;
}

std::string table_report(const std::vector<TableCheck>& rows) {
  std::string out = "row\texpected\tactual\tstatus\n";
  for (const auto& r : rows) {
    out += r.label + "\t" + r.expected + "\t" + r.actual + "\t" + (r.match ? "MATCH" : "MISMATCH") + "\n";
  }
  return out;
}

}  // namespace j4free
