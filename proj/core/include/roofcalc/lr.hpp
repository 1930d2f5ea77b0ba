#pragma once

#include <functional>
#include <map>

#include "roofcalc/bigint.hpp"
#include "roofcalc/weights.hpp"

namespace roofcalc {

/// Formal sum of irreducible GL(r) representations with positive
/// multiplicities, keyed in lexicographically descending order.
struct SchurSum {
  int rank = 0;
  std::map<Weight, BigInt, std::greater<>> terms;

  BigInt multiplicity(const Weight& w) const;
  BigInt total_multiplicity() const;
};

using DoubleSum = std::map<DoubleWeight, BigInt, std::greater<>>;

/// S_lambda (x) S_mu for GL(r) via Littlewood-Richardson tableaux. Weights
/// with negative entries are handled by shifting both factors by det^c.
SchurSum lr_product(const Weight& lambda, const Weight& mu, int rank);

/// Blockwise product (rank k above the bar, rank n-k below).
DoubleSum lr_double_product(const DoubleWeight& a, const DoubleWeight& b);

/// Drops the calling thread's memo table. Results never depend on it.
void clear_lr_cache();

}  // namespace roofcalc
