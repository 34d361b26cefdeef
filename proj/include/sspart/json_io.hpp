#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sspart/bijection.hpp"
#include "sspart/monomial_ideal.hpp"
#include "sspart/partition.hpp"
#include "sspart/qpolynomial.hpp"

namespace sspart::io {

using Json = nlohmann::ordered_json;

// Wire formats:
//   partition  {"dim": d, "cells": [[a1,...,ad], ...]}   cells sorted
//   ideal      {"dim": d, "gens":  [[e1,...,ed], ...]}   minimal, sorted
//   F-set      {"dim": d, "side": n, "elements": [[...], ...]}
// Readers throw Error(parse) on malformed JSON or wrong shapes, and let the
// domain constructors report semantic problems (closure, minimality, ...).

Json parse(const std::string& text);

Json to_json(const ExponentVector& v);
Json to_json(const Partition& p);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const FSet& s);
Json to_json(std::span<const Monomial> monomials);

/// Small integers as JSON numbers, anything above 2^53 - 1 as a decimal
/// string.
Json to_json(const BigInt& value);
Json to_json(const QPolynomial& p);

Partition partition_from_json(const Json& j);
MonomialIdeal ideal_from_json(const Json& j);
FSet fset_from_json(const Json& j);

/// The "gens" list of an ideal-shaped object, as given (not minimalized).
/// Returns the dimension through dim.
std::vector<Monomial> monomials_from_json(const Json& j, std::size_t& dim);

/// "x^3*y" style; variables are x, y, z when aliases is set and d <= 3,
/// otherwise x1, ..., xd. The unit monomial prints as "1".
std::string pretty(const Monomial& m, bool aliases = true);
std::string pretty(const MonomialIdeal& ideal, bool aliases = true);

}  // namespace sspart::io
