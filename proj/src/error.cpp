#include "sspart/error.hpp"

namespace sspart {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::closure_violation: return "ClosureViolation";
    case ErrorKind::invalid_fset: return "InvalidFSet";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::cell_not_in_partition: return "CellNotInPartition";
    case ErrorKind::invalid_move: return "InvalidMove";
    case ErrorKind::empty_input: return "EmptyInput";
    case ErrorKind::not_strongly_stable: return "NotStronglyStable";
    case ErrorKind::not_totally_symmetric: return "NotTotallySymmetric";
    case ErrorKind::not_symmetric: return "NotSymmetric";
    case ErrorKind::not_artinian: return "NotArtinian";
    case ErrorKind::not_weakly_increasing: return "NotWeaklyIncreasing";
    case ErrorKind::missing_pure_power: return "MissingPurePower";
    case ErrorKind::unsupported_dimension: return "UnsupportedDimension";
    case ErrorKind::non_integer_product: return "NonIntegerProduct";
    case ErrorKind::inexact_division: return "InexactDivision";
    case ErrorKind::resource_limit: return "ResourceLimit";
  }
  return "UnknownError";
}

}  // namespace sspart
