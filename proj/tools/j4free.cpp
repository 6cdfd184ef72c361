// j4free: build, verify and export J4-free configurations.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "j4free/catalog.hpp"
#include "j4free/circulant.hpp"
#include "j4free/codes.hpp"
#include "j4free/error.hpp"
#include "j4free/extra.hpp"
#include "j4free/incidence.hpp"
#include "j4free/io.hpp"
#include "j4free/planes.hpp"
#include "j4free/recipes.hpp"
#include "j4free/search.hpp"
#include "j4free/singer.hpp"

namespace {

using namespace j4free;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_verification_error(Errc c) {
  switch (c) {
    case Errc::irregular_row:
    case Errc::irregular_column:
    case Errc::four_cycle_found:
    case Errc::not_block_circulant:
    case Errc::non_constant_row_sum:
    case Errc::non_constant_column_sum:
    case Errc::non_constant_point_degree:
    case Errc::not_a_configuration:
    case Errc::internal_consistency:
      return true;
    default:
      return false;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("write failed for " + path);
}

ordered_json params_json(const ConfigParams& p) {
  return {{"m1", p.m1}, {"m2", p.m2}, {"n1", p.n1}, {"n2", p.n2}};
}

// Re-verifies m from scratch, writes it and its certificate. Returns the exit code.
int emit(const Matrix01& m, const std::string& construction, const std::string& format, const std::string& out) {
  const auto fmt = parse_format(format);
  const ConfigParams params = check_configuration(m);
  const auto girth = bipartite_girth(m);
  const std::string text = write_matrix(m, fmt);
  if (!(read_matrix(text, fmt) == m)) {
    std::cerr << "error: " << format << " output does not read back to the same matrix\n";
    return kVerifyFailed;
  }
  ordered_json cert;
  cert["construction"] = construction;
  cert["params"] = params_json(params);
  cert["j4_free"] = true;
  cert["girth"] = girth ? ordered_json(*girth) : ordered_json(nullptr);
  cert["format"] = format;
  const std::string cert_text = cert.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    std::cerr << cert_text;
  } else {
    write_file(out, text);
    write_file(out + ".cert.json", cert_text);
    std::cout << cert_text;
  }
  return kOk;
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw UsageError("bad number '" + item + "' in list");
    }
  }
  return out;
}

Matrix01 parse_bit_rows(const std::string& s) {
  std::vector<std::string> rows;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) rows.push_back(item);
  if (rows.empty() || rows[0].empty()) throw UsageError("empty parity-check matrix");
  Matrix01 m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw UsageError("ragged parity-check matrix");
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] != '0' && rows[i][j] != '1') throw UsageError("parity-check rows must be 0/1 strings");
      m.set(i, j, rows[i][j] == '1');
    }
  }
  return m;
}

Matrix01 load_matrix(const std::string& path, const std::string& format) {
  const auto text = read_file(path);
  return read_matrix(text, format.empty() ? sniff_format(text) : parse_format(format));
}

struct ConstructOptions {
  std::string kind;
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::string point_set;
  std::string structure = "projective";
  std::string family;
  std::size_t d = 0;
  std::size_t c = 0;
  std::size_t c2 = 0;
  std::size_t delta = 0;
  std::uint32_t v = 1;
  std::uint32_t h = 0;
  std::uint32_t s = 0;
  bool p_on_line = false;
  std::size_t nstar = 0;
  std::size_t m2 = 0;
  std::string format = "alist";
  std::string out;
};

int run_construct(const ConstructOptions& o) {
  auto need_q = [&] {
    if (o.q == 0) throw UsageError("--q is required for " + o.kind);
  };
  if (o.kind == "pg2" || o.kind == "antiflag") {
    need_q();
    const auto config = o.kind == "pg2" ? pg2_singer(o.q) : antiflag_singer(o.q);
    if (o.d != 0) {
      const auto bc = assemble_block_circulant(orbit_decompose(config, o.d));
      return emit(bc.materialize(), o.kind + ":q=" + std::to_string(o.q) + ":d=" + std::to_string(o.d), o.format, o.out);
    }
    return emit(config.incidence(), o.kind + ":q=" + std::to_string(o.q), o.format, o.out);
  }
  if (o.kind == "construction-a") {
    need_q();
    if (o.point_set.empty()) throw UsageError("--set is required for construction-a");
    const auto plane = pg2_coords(o.q);
    const auto pts = special_point_set(plane, parse_point_set_kind(o.point_set));
    const auto cs = construction_a(plane, pts, o.n);
    return emit(cs.structure.to_matrix(), cs.structure.label, o.format, o.out);
  }
  if (o.kind == "construction-b") {
    need_q();
    if (o.family.empty()) throw UsageError("--family is required for construction-b");
    FamilyParams p;
    p.structure = parse_structure(o.structure);
    p.q = o.q;
    if (o.d != 0) p.d = o.d;
    p.c = o.c;
    p.c2 = o.c2;
    p.delta = o.delta;
    const auto plans = family_recipes(parse_family(o.family), p);
    const auto& plan = plans.front();
    const auto res = execute_plan(plan);
    if (res.params != plan.predicted) {
      std::cerr << "error: measured " << res.params.str() << " differs from predicted " << plan.predicted.str() << "\n";
      return kVerifyFailed;
    }
    return emit(res.matrix, o.family + ":" + o.structure + ":q=" + std::to_string(o.q) + ":d=" + std::to_string(plan.d) +
                                ":" + plan.description,
                o.format, o.out);
  }
  if (o.kind == "parabola") {
    need_q();
    const auto cs = parabola_product_complement(o.q, o.v);
    return emit(cs.structure.to_matrix(), cs.structure.label, o.format, o.out);
  }
  if (o.kind == "subspace") {
    need_q();
    const auto cs = subspace_configuration(o.h, o.s, o.q);
    return emit(cs.structure.to_matrix(), cs.structure.label, o.format, o.out);
  }
  if (o.kind == "qcancel") {
    need_q();
    const auto cs = q_cancellation(o.q, o.s, o.p_on_line);
    return emit(cs.structure.to_matrix(), cs.structure.label, o.format, o.out);
  }
  if (o.kind == "recipe") {
    if (o.nstar == 0) throw UsageError("--nstar is required for recipe");
    const auto r = find_recipe(o.nstar, o.m2 == 0 ? std::nullopt : std::optional<std::size_t>(o.m2));
    if (!r) throw UsageError("no recipe for n*=" + std::to_string(o.nstar));
    const auto res = execute_recipe(*r);
    return emit(res.matrix, "recipe:" + r->label(), o.format, o.out);
  }
  throw UsageError("unknown construction '" + o.kind + "'");
}

int run_verify(const std::string& in, const std::string& format, bool weights_only, std::size_t d) {
  const auto m = load_matrix(in, format);
  ordered_json report;
  report["rows"] = m.rows();
  report["cols"] = m.cols();
  int code = kOk;
  try {
    report["params"] = params_json(check_configuration(m));
    report["j4_free"] = true;
  } catch (const Error& e) {
    report["j4_free"] = is_j4_free(m);
    report["error"] = e.what();
    code = kVerifyFailed;
  }
  if (!weights_only) {
    const auto g = bipartite_girth(m);
    report["girth"] = g ? ordered_json(*g) : ordered_json(nullptr);
  }
  if (d != 0) {
    try {
      report["weight_matrix"] = weight_matrix(m, d);
    } catch (const Error& e) {
      report["weight_matrix_error"] = e.what();
      code = kVerifyFailed;
    }
  }
  std::cout << report.dump(2) << "\n";
  return code;
}

int run_search(std::uint32_t q, const std::string& structure, bool json, unsigned threads) {
  const auto rows = search_profiles(q, parse_structure(structure), threads);
  std::cout << (json ? profiles_to_json(rows) : profiles_to_tsv(rows));
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.identities_ok && r.predictors_failed.empty();
  return ok ? kOk : kVerifyFailed;
}

int run_tables(const std::string& which, std::uint32_t qmin, std::uint32_t qmax, std::size_t nstar,
               const std::string& out, unsigned threads) {
  std::vector<TableCheck> rows;
  if (which == "I" || which == "1") {
    rows = check_profile_table(StructureKind::projective, qmin, qmax, threads);
  } else if (which == "II" || which == "2") {
    rows = check_profile_table(StructureKind::antiflag, qmin, qmax, threads);
  } else if (which == "III" || which == "3") {
    rows = check_recipe_table(nstar == 0 ? std::nullopt : std::optional<std::size_t>(nstar), threads);
  } else {
    throw UsageError("--which must be I, II or III");
  }
  const auto report = table_report(rows);
  if (out.empty()) {
    std::cout << report;
  } else {
    write_file(out, report);
  }
  std::size_t mismatches = 0;
  for (const auto& r : rows) mismatches += r.match ? 0 : 1;
  std::cerr << rows.size() << " rows, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kOk : kVerifyFailed;
}

struct SkeletonOptions {
  std::string in;
  std::string in_format;
  std::size_t circulant = 0;
  std::string shifts;
  std::string h1;
  std::string h2;
  std::string k_list;
  std::string format = "alist";
  std::string out;
};

int run_skeleton(const SkeletonOptions& o) {
  Skeleton s;
  ConfigParams params;
  if (o.circulant != 0) {
    const auto c = circulant_from_shifts(o.circulant, parse_list(o.shifts));
    if (!circulant_is_j4_free(c)) {
      std::cerr << "error: circulant is not J4-free\n";
      return kVerifyFailed;
    }
    s = qc_skeleton(c);
    params = {c.d, c.d, c.weight(), c.weight()};
  } else {
    if (o.in.empty()) throw UsageError("either --in or --circulant is required");
    const auto m = load_matrix(o.in, o.in_format);
    s = skeleton(m);
    params = check_configuration(m);
  }
  Matrix01 result = s.matrix;
  std::string what = "skeleton";
  if (!o.h1.empty() || !o.h2.empty()) {
    ConstituentSpec first = ConstituentSpec::single_parity(params.n1);
    ConstituentSpec second = ConstituentSpec::single_parity(params.n2);
    if (!o.h1.empty()) first = {params.n1, parse_bit_rows(o.h1)};
    if (!o.h2.empty()) second = {params.n2, parse_bit_rows(o.h2)};
    result = expand_parity_check(s, first, second);
    what = "parity-check";
  }
  const auto fmt = parse_format(o.format);
  const std::string text = o.format == "json" && what == "skeleton" ? skeleton_to_json(s) : write_matrix(result, fmt);
  ordered_json info;
  info["kind"] = what;
  info["config"] = params_json(params);
  info["rows"] = result.rows();
  info["cols"] = result.cols();
  const auto girth = bipartite_girth(s.matrix);
  info["tanner_girth"] = girth ? ordered_json(*girth) : ordered_json(nullptr);
  if (!o.k_list.empty()) {
    auto ks = parse_list(o.k_list);
    if (ks.size() == 2) {
      std::vector<std::size_t> full(params.m1, ks[0]);
      full.insert(full.end(), params.m2, ks[1]);
      ks = std::move(full);
    }
    const auto b = bg_code_bounds(params, ks);
    info["N"] = b.n;
    info["K_upper"] = b.k_upper;
    info["K_upper_nonpositive"] = b.nonpositive;
  }
  if (o.out.empty()) {
    std::cout << text;
    std::cerr << info.dump(2) << "\n";
  } else {
    write_file(o.out, text);
    std::cout << info.dump(2) << "\n";
  }
  return kOk;
}

int run_catalog(std::size_t nstar, bool execute, const std::string& format, const std::string& out) {
  std::vector<Recipe> recipes;
  for (const auto& r : recipe_fixtures()) {
    if (nstar == 0 || r.n_star == nstar) recipes.push_back(r);
  }
  if (!execute) {
    std::cout << "n_star\tm2\tcode\tq\tc\tdelta\n";
    for (const auto& r : recipes) {
      std::cout << r.n_star << '\t' << r.m2 << '\t' << static_cast<char>(r.code) << '\t' << r.q << '\t'
                << (r.c == 0 ? std::string() : std::to_string(r.c)) << '\t' << r.delta << '\n';
    }
    return kOk;
  }
  if (recipes.size() != 1) throw UsageError("--execute needs exactly one matching recipe; narrow with --nstar");
  const auto res = execute_recipe(recipes.front());
  return emit(res.matrix, "recipe:" + recipes.front().label(), format, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and certify J4-free biregular 01-matrices"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Reserved; all constructions are deterministic");

  const std::vector<std::string> formats{"alist", "json", "pbm", "tsv"};

  ConstructOptions co;
  auto* construct = app.add_subcommand("construct", "Build a configuration and write it with a certificate");
  construct->add_option("kind", co.kind, "pg2|antiflag|construction-a|construction-b|parabola|subspace|qcancel|recipe")
      ->required()
      ->check(CLI::IsMember({"pg2", "antiflag", "construction-a", "construction-b", "parabola", "subspace", "qcancel",
                             "recipe"}));
  construct->add_option("--q", co.q, "Field order");
  construct->add_option("--d", co.d, "Subgroup order (orbit-ordered output for pg2/antiflag)");
  construct->add_option("--n", co.n, "Line intersection size for construction-a");
  construct->add_option("--set", co.point_set, "Point set: hyperoval|internal|external|hermitian");
  construct->add_option("--structure", co.structure, "projective|antiflag")->check(CLI::IsMember({"projective", "antiflag"}));
  construct->add_option("--family", co.family, "Construction B family");
  construct->add_option("--c", co.c, "Block count");
  construct->add_option("--c2", co.c2, "Second block count for uniform_cxc");
  construct->add_option("--delta", co.delta, "Weight reduction");
  construct->add_option("--v", co.v, "Number of parabolas");
  construct->add_option("--dim", co.h, "Projective dimension h for subspace");
  construct->add_option("--s", co.s, "Subspace dimension or deletion count");
  construct->add_flag("--p-on-line", co.p_on_line, "Put P on l for qcancel");
  construct->add_option("--nstar", co.nstar, "Target row weight for recipe");
  construct->add_option("--m2", co.m2, "Target size for recipe");
  construct->add_option("--format", co.format, "Output format")->check(CLI::IsMember(formats));
  construct->add_option("--out", co.out, "Output path; the certificate goes to <out>.cert.json");

  std::string v_in, v_format;
  bool v_skip_girth = false;
  std::size_t v_d = 0;
  auto* verify = app.add_subcommand("verify", "Check a matrix file");
  verify->add_option("--in", v_in, "Matrix file")->required();
  verify->add_option("--format", v_format, "Input format (sniffed when omitted)")->check(CLI::IsMember(formats));
  verify->add_flag("--no-girth", v_skip_girth, "Skip the girth computation");
  verify->add_option("--d", v_d, "Also report the d x d block weight matrix");

  std::uint32_t s_q = 0;
  std::string s_structure = "projective";
  bool s_json = false;
  unsigned s_threads = 0;
  auto* search = app.add_subcommand("search", "Intersection profiles of every subgroup order");
  search->add_option("--q", s_q, "Field order")->required();
  search->add_option("--structure", s_structure, "projective|antiflag")->check(CLI::IsMember({"projective", "antiflag"}));
  search->add_flag("--json", s_json, "JSON instead of TSV");
  search->add_option("--threads", s_threads, "Worker threads (0 = all cores)");

  std::string t_which;
  std::uint32_t t_qmin = 0, t_qmax = 32;
  std::size_t t_nstar = 0;
  std::string t_out;
  unsigned t_threads = 0;
  auto* tables = app.add_subcommand("tables", "Regenerate the reference tables and compare");
  tables->add_option("--which", t_which, "I (projective profiles), II (anti-flag profiles) or III (recipes)")->required();
  tables->add_option("--qmin", t_qmin, "Smallest q");
  tables->add_option("--qmax", t_qmax, "Largest q");
  tables->add_option("--nstar", t_nstar, "Only recipes with this n*");
  tables->add_option("--out", t_out, "Report path");
  tables->add_option("--threads", t_threads, "Worker threads (0 = all cores)");

  SkeletonOptions so;
  auto* skel = app.add_subcommand("skeleton", "Skeleton or expanded parity-check matrix of a configuration");
  skel->add_option("--in", so.in, "Configuration matrix file");
  skel->add_option("--in-format", so.in_format, "Input format")->check(CLI::IsMember(formats));
  skel->add_option("--circulant", so.circulant, "Order d of a circulant given by --shifts (QC form)");
  skel->add_option("--shifts", so.shifts, "1-based shifts, comma separated");
  skel->add_option("--h1", so.h1, "Parity-check rows of the first constituent, e.g. 110,011");
  skel->add_option("--h2", so.h2, "Parity-check rows of the second constituent");
  skel->add_option("--k", so.k_list, "Constituent dimensions: k1,k2 or one per vertex");
  skel->add_option("--format", so.format, "Output format")->check(CLI::IsMember(formats));
  skel->add_option("--out", so.out, "Output path");

  std::size_t c_nstar = 0;
  bool c_execute = false;
  std::string c_format = "alist", c_out;
  auto* catalog = app.add_subcommand("catalog", "List or execute recipes for new symmetric configurations");
  catalog->add_option("--nstar", c_nstar, "Filter by n*");
  catalog->add_flag("--execute", c_execute, "Build the single matching recipe");
  catalog->add_option("--format", c_format, "Output format")->check(CLI::IsMember(formats));
  catalog->add_option("--out", c_out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return run_construct(co);
    if (*verify) return run_verify(v_in, v_format, v_skip_girth, v_d);
    if (*search) return run_search(s_q, s_structure, s_json, s_threads);
    if (*tables) return run_tables(t_which, t_qmin, t_qmax, t_nstar, t_out, t_threads);
    if (*skel) return run_skeleton(so);
    if (*catalog) return run_catalog(c_nstar, c_execute, c_format, c_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_verification_error(e.code()) ? kVerifyFailed : kUsage;
  }
  return kUsage;
}
