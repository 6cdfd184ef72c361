#pragma once

#include <string>
#include <string_view>

#include "j4free/matrix.hpp"

namespace j4free {

/// MacKay alist text: "cols rows", max column/row weights, the column and row
/// weight lists, then 1-based unit lists per column and per row, each padded
/// with zeros to the maximum weight. Single spaces, LF line endings.
std::string to_alist(const Matrix01& m);
Matrix01 from_alist(std::string_view text);

/// Plain PBM (P1), one matrix row per line.
std::string to_pbm(const Matrix01& m);
Matrix01 from_pbm(std::string_view text);

/// JSON {"m1","m2","n1","n2","rows"} with 0-based column lists; n1/n2 are
/// null when the matrix is not row/column regular.
std::string to_json(const Matrix01& m);
Matrix01 from_json(std::string_view text);

/// "rows cols" header, then one line per row of tab-separated 0-based columns.
std::string to_tsv(const Matrix01& m);
Matrix01 from_tsv(std::string_view text);

enum class MatrixFormat { alist, json, pbm, tsv };

MatrixFormat parse_format(std::string_view name);
std::string write_matrix(const Matrix01& m, MatrixFormat f);
Matrix01 read_matrix(std::string_view text, MatrixFormat f);

/// Guesses the format from the leading bytes of text.
MatrixFormat sniff_format(std::string_view text);

}  // namespace j4free
