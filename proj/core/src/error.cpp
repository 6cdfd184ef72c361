#include "j4free/error.hpp"

namespace j4free {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_prime: return "NotPrime";
    case Errc::not_prime_power: return "NotPrimePower";
    case Errc::no_irreducible_polynomial: return "NoIrreduciblePolynomialFound";
    case Errc::table_overflow: return "TableOverflow";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::parity_mismatch: return "ParityMismatch";
    case Errc::irregular_row: return "IrregularRow";
    case Errc::irregular_column: return "IrregularColumn";
    case Errc::four_cycle_found: return "FourCycleFound";
    case Errc::not_block_circulant: return "NotBlockCirculant";
    case Errc::shift_out_of_range: return "ShiftOutOfRange";
    case Errc::not_a_subset: return "NotASubset";
    case Errc::subset_out_of_parent: return "SubsetOutOfParent";
    case Errc::empty_grid: return "EmptyGrid";
    case Errc::not_a_divisor: return "NotADivisor";
    case Errc::non_constant_row_sum: return "NonConstantRowSum";
    case Errc::non_constant_column_sum: return "NonConstantColumnSum";
    case Errc::param_out_of_range: return "ParamOutOfRange";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::empty_line_class: return "EmptyLineClass";
    case Errc::non_constant_point_degree: return "NonConstantPointDegree";
    case Errc::odd_q: return "OddQ";
    case Errc::dimension_out_of_range: return "DimensionOutOfRange";
    case Errc::too_many_deletions: return "TooManyDeletions";
    case Errc::not_a_configuration: return "NotAConfiguration";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::bad_dimension: return "BadDimension";
    case Errc::parse_error: return "ParseError";
    case Errc::internal_consistency: return "InternalConsistency";
  }
  return "Unknown";
}

}  // namespace j4free
