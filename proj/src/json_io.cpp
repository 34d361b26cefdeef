#include "sspart/json_io.hpp"

#include <limits>

#include "sspart/error.hpp"

namespace sspart::io {

namespace {

constexpr std::uint64_t max_safe_integer = (std::uint64_t{1} << 53) - 1;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorKind::parse, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) {
    throw Error(ErrorKind::parse, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::uint64_t read_unsigned(const Json& j, const char* what) {
  if (!j.is_number_integer() || (j.is_number_integer() && j.get<long long>() < 0)) {
    throw Error(ErrorKind::parse,
                std::string(what) + " must be a nonnegative integer, got " +
                    j.dump());
  }
  return j.get<std::uint64_t>();
}

std::size_t read_dim(const Json& j) {
  auto d = read_unsigned(field(j, "dim"), "dim");
  if (d == 0) throw Error(ErrorKind::parse, "dim must be positive");
  return static_cast<std::size_t>(d);
}

std::vector<ExponentVector> read_vectors(const Json& j, const char* key) {
  const Json& list = field(j, key);
  if (!list.is_array()) {
    throw Error(ErrorKind::parse, std::string("\"") + key + "\" must be an array");
  }
  std::vector<ExponentVector> out;
  out.reserve(list.size());
  for (const Json& entry : list) {
    if (!entry.is_array()) {
      throw Error(ErrorKind::parse, "expected an array of integers, got " +
                                        entry.dump());
    }
    std::vector<exponent_t> coords;
    for (const Json& a : entry) {
      auto value = read_unsigned(a, "coordinate");
      if (value > std::numeric_limits<exponent_t>::max()) {
        throw Error(ErrorKind::parse, "coordinate too large: " + a.dump());
      }
      coords.push_back(static_cast<exponent_t>(value));
    }
    out.emplace_back(std::move(coords));
  }
  return out;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

Json to_json(const ExponentVector& v) {
  Json out = Json::array();
  for (exponent_t a : v) out.push_back(a);
  return out;
}

Json to_json(std::span<const Monomial> monomials) {
  Json out = Json::array();
  for (const Monomial& m : monomials) out.push_back(to_json(m));
  return out;
}

Json to_json(const Partition& p) {
  Json out;
  out["dim"] = p.dim();
  out["cells"] = to_json(p.cells());
  return out;
}

Json to_json(const MonomialIdeal& ideal) {
  Json out;
  out["dim"] = ideal.dim();
  out["gens"] = to_json(ideal.gens());
  return out;
}

Json to_json(const FSet& s) {
  Json out;
  out["dim"] = s.dim();
  out["side"] = s.side();
  out["elements"] = to_json(s.elements());
  return out;
}

Json to_json(const BigInt& value) {
  if (value >= 0 && value <= max_safe_integer) {
    return Json(static_cast<std::uint64_t>(value));
  }
  return Json(value.str());
}

Json to_json(const QPolynomial& p) {
  Json out = Json::array();
  for (const BigInt& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Partition partition_from_json(const Json& j) {
  const std::size_t dim = read_dim(j);
  return Partition::from_cells(dim, read_vectors(j, "cells"));
}

std::vector<Monomial> monomials_from_json(const Json& j, std::size_t& dim) {
  dim = read_dim(j);
  return read_vectors(j, "gens");
}

MonomialIdeal ideal_from_json(const Json& j) {
  std::size_t dim = 0;
  auto gens = monomials_from_json(j, dim);
  return MonomialIdeal(dim, std::move(gens));
}

FSet fset_from_json(const Json& j) {
  const std::size_t dim = read_dim(j);
  auto side = read_unsigned(field(j, "side"), "side");
  if (side > std::numeric_limits<exponent_t>::max()) {
    throw Error(ErrorKind::parse, "side too large");
  }
  return FSet(dim, static_cast<exponent_t>(side), read_vectors(j, "elements"));
}

std::string pretty(const Monomial& m, bool aliases) {
  static constexpr const char* names[] = {"x", "y", "z"};
  const bool use_aliases = aliases && m.dim() <= 3;
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += use_aliases ? std::string(names[i]) : "x" + std::to_string(i + 1);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string pretty(const MonomialIdeal& ideal, bool aliases) {
  std::string out = "(";
  bool first = true;
  for (const Monomial& g : ideal.gens()) {
    if (!first) out += ", ";
    first = false;
    out += pretty(g, aliases);
  }
  return out + ")";
}

}  // namespace sspart::io
