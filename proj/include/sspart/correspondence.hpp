#pragma once

#include "sspart/monomial_ideal.hpp"
#include "sspart/partition.hpp"

namespace sspart {

// The complement bijection between Artinian monomial ideals and
// d-dimensional partitions: a cell alpha lies in the partition iff x^alpha
// lies outside the ideal. The unit ideal and the empty partition correspond.

/// Throws not_artinian.
Partition ideal_to_partition(const MonomialIdeal& ideal);

MonomialIdeal partition_to_ideal(const Partition& p);

}  // namespace sspart
