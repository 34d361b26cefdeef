#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sspart/error.hpp"

namespace sspart::cli {

/// 1 for malformed input, 2 for a failed semantic precondition (including
/// the arithmetic self-checks), 3 for an exhausted enumeration budget.
int exit_code(ErrorKind kind) noexcept;

/// Runs one subcommand. args excludes the program name. Input documents are
/// read from the file named on the command line, or from in.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace sspart::cli
