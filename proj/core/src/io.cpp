#include "j4free/io.hpp"

#include <algorithm>
#include <sstream>

#include "j4free/error.hpp"
#include "json.hpp"

namespace j4free {
namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::parse_error, what); }

std::size_t next_number(std::istringstream& in, const char* what) {
  long long v = 0;
  if (!(in >> v) || v < 0) parse_fail(std::string("expected ") + what);
  return static_cast<std::size_t>(v);
}

void append_list(std::string& out, const std::vector<std::size_t>& items, std::size_t pad, bool one_based) {
  for (std::size_t i = 0; i < pad; ++i) {
    if (i > 0) out += ' ';
    out += i < items.size() ? std::to_string(items[i] + (one_based ? 1 : 0)) : "0";
  }
  out += '\n';
}

}  // namespace

std::string to_alist(const Matrix01& m) {
  const auto rows = m.row_supports();
  const auto cols = m.col_supports();
  std::size_t max_col = 0, max_row = 0;
  for (const auto& c : cols) max_col = std::max(max_col, c.size());
  for (const auto& r : rows) max_row = std::max(max_row, r.size());
  std::string out = std::to_string(m.cols()) + " " + std::to_string(m.rows()) + "\n";
  out += std::to_string(max_col) + " " + std::to_string(max_row) + "\n";
  std::vector<std::size_t> cw, rw;
  for (const auto& c : cols) cw.push_back(c.size());
  for (const auto& r : rows) rw.push_back(r.size());
  append_list(out, cw, cw.size(), false);
  append_list(out, rw, rw.size(), false);
  for (const auto& c : cols) append_list(out, c, max_col, true);
  for (const auto& r : rows) append_list(out, r, max_row, true);
  return out;
}

Matrix01 from_alist(std::string_view text) {
  std::istringstream in{std::string(text)};
  const auto n = next_number(in, "column count");
  const auto m = next_number(in, "row count");
  const auto max_col = next_number(in, "max column weight");
  const auto max_row = next_number(in, "max row weight");
  std::vector<std::size_t> cw(n), rw(m);
  for (auto& w : cw) w = next_number(in, "column weight");
  for (auto& w : rw) w = next_number(in, "row weight");
  Matrix01 out(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < max_col; ++k) {
      const auto r = next_number(in, "column entry");
      if (r == 0) continue;
      if (r > m) parse_fail("row index out of range");
      out.set(r - 1, j);
    }
  }
  Matrix01 check(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < max_row; ++k) {
      const auto c = next_number(in, "row entry");
      if (c == 0) continue;
      if (c > n) parse_fail("column index out of range");
      check.set(i, c - 1);
    }
  }
  if (!(check == out)) parse_fail("row and column lists disagree");
  for (std::size_t i = 0; i < m; ++i) {
    if (out.row_weight(i) != rw[i]) parse_fail("row weight mismatch");
  }
  if (out.col_weights() != cw) parse_fail("column weight mismatch");
  return out;
}

std::string to_pbm(const Matrix01& m) {
  std::string out = "P1\n" + std::to_string(m.cols()) + " " + std::to_string(m.rows()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += m.get(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

Matrix01 from_pbm(std::string_view text) {
  std::string cleaned;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) {
    cleaned += line.substr(0, line.find('#'));
    cleaned += '\n';
  }
  std::istringstream in(cleaned);
  std::string magic;
  if (!(in >> magic) || magic != "P1") parse_fail("missing P1 header");
  const auto cols = next_number(in, "width");
  const auto rows = next_number(in, "height");
  Matrix01 out(rows, cols);
  std::size_t filled = 0;
  char ch = 0;
  while (filled < rows * cols && in >> ch) {
    if (ch != '0' && ch != '1') parse_fail("unexpected pixel character");
    if (ch == '1') out.set(filled / cols, filled % cols);
    ++filled;
  }
  if (filled != rows * cols) parse_fail("truncated pixel data");
  return out;
}

std::string to_json(const Matrix01& m) {
  nlohmann::ordered_json j;
  j["m1"] = m.rows();
  j["m2"] = m.cols();
  const auto rows = m.row_supports();
  const auto cw = m.col_weights();
  const bool row_regular = !rows.empty() && std::all_of(rows.begin(), rows.end(), [&](const auto& r) {
    return r.size() == rows[0].size();
  });
  const bool col_regular = !cw.empty() && std::all_of(cw.begin(), cw.end(), [&](auto w) { return w == cw[0]; });
  j["n1"] = row_regular ? nlohmann::ordered_json(rows[0].size()) : nlohmann::ordered_json(nullptr);
  j["n2"] = col_regular ? nlohmann::ordered_json(cw[0]) : nlohmann::ordered_json(nullptr);
  j["rows"] = rows;
  return j.dump() + "\n";
}

Matrix01 from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto m1 = j.at("m1").get<std::size_t>();
    const auto m2 = j.at("m2").get<std::size_t>();
    const auto rows = j.at("rows").get<std::vector<std::vector<std::size_t>>>();
    if (rows.size() != m1) parse_fail("rows length differs from m1");
    return Matrix01::from_rows(m1, m2, rows);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    parse_fail(e.what());
  }
}

std::string to_tsv(const Matrix01& m) {
  std::string out = std::to_string(m.rows()) + "\t" + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto s = m.row_support(i);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k > 0) out += '\t';
      out += std::to_string(s[k]);
    }
    out += '\n';
  }
  return out;
}

Matrix01 from_tsv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) parse_fail("empty input");
  std::istringstream head(line);
  const auto rows = next_number(head, "row count");
  const auto cols = next_number(head, "column count");
  Matrix01 out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!std::getline(in, line)) parse_fail("truncated rows");
    std::istringstream row(line);
    long long c = 0;
    while (row >> c) {
      if (c < 0 || static_cast<std::size_t>(c) >= cols) parse_fail("column index out of range");
      out.set(i, static_cast<std::size_t>(c));
    }
  }
  return out;
}

MatrixFormat parse_format(std::string_view name) {
  if (name == "alist") return MatrixFormat::alist;
  if (name == "json") return MatrixFormat::json;
  if (name == "pbm") return MatrixFormat::pbm;
  if (name == "tsv") return MatrixFormat::tsv;
  throw Error(Errc::invalid_argument, "unknown format '" + std::string(name) + "'");
}

std::string write_matrix(const Matrix01& m, MatrixFormat f) {
  switch (f) {
    case MatrixFormat::alist: return to_alist(m);
    case MatrixFormat::json: return to_json(m);
    case MatrixFormat::pbm: return to_pbm(m);
    case MatrixFormat::tsv: return to_tsv(m);
  }
  return {};
}

Matrix01 read_matrix(std::string_view text, MatrixFormat f) {
  switch (f) {
    case MatrixFormat::alist: return from_alist(text);
    case MatrixFormat::json: return from_json(text);
    case MatrixFormat::pbm: return from_pbm(text);
    case MatrixFormat::tsv: return from_tsv(text);
  }
  parse_fail("unknown format");
}

MatrixFormat sniff_format(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string_view::npos) parse_fail("empty input");
  if (text[pos] == '{') return MatrixFormat::json;
  if (text.substr(pos, 2) == "P1") return MatrixFormat::pbm;
  const auto eol = text.find('\n', pos);
  const auto first = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
  return first.find('\t') != std::string_view::npos ? MatrixFormat::tsv : MatrixFormat::alist;
}

}  // namespace j4free
