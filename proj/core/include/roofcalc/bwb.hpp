#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "roofcalc/bigint.hpp"
#include "roofcalc/weights.hpp"

namespace roofcalc {

class BundleExpr;

struct BottCohomology {
  int degree = 0;
  Weight gl_weight;
  BigInt dimension;
};

/// Outcome of Borel-Weil-Bott for one irreducible bundle: either acyclic or
/// a single GL(n) representation in a single degree.
struct BottResult {
  std::optional<BottCohomology> cohomology;

  bool acyclic() const noexcept { return !cohomology.has_value(); }
};

/// Borel-Weil-Bott on G(k, n). rho = (n-1, ..., 1, 0); a repeated entry in
/// (lambda|delta) + rho means acyclic, otherwise the degree is the number of
/// inversions against the strictly decreasing order and the GL(n) weight is
/// sort(s) - rho. Dominant (globally generated) labels land in degree 0.
BottResult bott(const DoubleWeight& w);

/// Weyl dimension formula for GL(n).
BigInt gl_dimension(const Weight& mu);

/// Per-degree GL(n) content of the cohomology of a completely reducible
/// bundle.
struct CohomologyTable {
  int max_degree = 0;
  std::map<int, std::map<Weight, BigInt, std::greater<>>> weights;

  BigInt dimension(int degree) const;
  std::vector<BigInt> dimensions() const;
  BigInt euler_characteristic() const;
  bool concentrated_in_degree_zero() const;
};

CohomologyTable bundle_cohomology(const BundleExpr& expr);

/// Dimensions h^0..h^{dim G} only; the hot path of the Hodge pipeline.
std::vector<BigInt> cohomology_dimensions(const BundleExpr& expr);

}  // namespace roofcalc
