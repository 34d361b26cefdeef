#include "sspart/render.hpp"

#include <map>
#include <vector>

#include "sspart/error.hpp"

namespace sspart {

namespace {

std::string ferrers(const Partition& p) {
  std::vector<std::size_t> rows;
  for (const Cell& c : p.cells()) {
    if (rows.size() <= c[1]) rows.resize(c[1] + 1);
    ++rows[c[1]];
  }
  std::string out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    out += std::string(*it, '#');
    out += '\n';
  }
  return out;
}

std::string matrix(const Partition& p) {
  // heights[j][i]: number of cells (i, j, *)
  std::vector<std::vector<std::size_t>> heights;
  for (const Cell& c : p.cells()) {
    if (heights.size() <= c[1]) heights.resize(c[1] + 1);
    auto& row = heights[c[1]];
    if (row.size() <= c[0]) row.resize(c[0] + 1);
    ++row[c[0]];
  }
  std::string out;
  for (const auto& row : heights) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render(const Partition& p, RenderStyle style) {
  switch (style) {
    case RenderStyle::ferrers:
      if (p.dim() != 2) {
        throw Error(ErrorKind::unsupported_dimension,
                    "ferrers rendering needs dimension 2, got " +
                        std::to_string(p.dim()));
      }
      return ferrers(p);
    case RenderStyle::matrix:
      if (p.dim() != 3) {
        throw Error(ErrorKind::unsupported_dimension,
                    "matrix rendering needs dimension 3, got " +
                        std::to_string(p.dim()));
      }
      return matrix(p);
  }
  return {};
}

}  // namespace sspart
