#pragma once

#include <string>

#include "sspart/partition.hpp"

namespace sspart {

enum class RenderStyle { ferrers, matrix };

/// ASCII pictures, one newline-terminated line per row.
///
/// ferrers (d = 2): one row of '#' per value of the second coordinate, the
/// row for 0 at the bottom, each as long as the number of cells at that
/// height.
///
/// matrix (d = 3): plane-partition matrix notation. Row j lists, for
/// i = 0, 1, ..., the number of cells starting with (i, j), dropping the
/// trailing zeros.
///
/// Throws unsupported_dimension when the style does not fit the dimension.
std::string render(const Partition& p, RenderStyle style);

}  // namespace sspart
