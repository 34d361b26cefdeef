#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sspart {

enum class ErrorKind {
  // malformed input
  parse,
  dimension_mismatch,
  closure_violation,
  invalid_fset,
  invalid_argument,
  // semantic precondition failures
  cell_not_in_partition,
  invalid_move,
  empty_input,
  not_strongly_stable,
  not_totally_symmetric,
  not_symmetric,
  not_artinian,
  not_weakly_increasing,
  missing_pure_power,
  unsupported_dimension,
  // arithmetic self-checks
  non_integer_product,
  inexact_division,
  // enumeration guard
  resource_limit,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind drives the CLI exit code.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace sspart
