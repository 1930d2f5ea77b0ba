#include "roofcalc/bwb.hpp"

#include <algorithm>

#include "roofcalc/bundles.hpp"

namespace roofcalc {

BottResult bott(const DoubleWeight& w) {
  std::vector<int> s = w.concatenated();
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) s[i] += n - 1 - i;

  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (s[i] == s[j]) return {};
      if (s[i] < s[j]) ++inversions;
    }
  }
  std::sort(s.begin(), s.end(), std::greater<>());
  for (int i = 0; i < n; ++i) s[i] -= n - 1 - i;
  Weight gl(std::move(s));
  BigInt dim = gl_dimension(gl);
  return {BottCohomology{inversions, std::move(gl), std::move(dim)}};
}

BigInt gl_dimension(const Weight& mu) {
  const int n = mu.rank();
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= mu[i] - mu[j] + j - i;
      den *= j - i;
    }
  }
  return num / den;
}

BigInt CohomologyTable::dimension(int degree) const {
  auto it = weights.find(degree);
  if (it == weights.end()) return 0;
  BigInt total = 0;
  for (const auto& [w, m] : it->second) total += m * gl_dimension(w);
  return total;
}

std::vector<BigInt> CohomologyTable::dimensions() const {
  std::vector<BigInt> out(static_cast<std::size_t>(max_degree + 1));
  for (int d = 0; d <= max_degree; ++d) out[d] = dimension(d);
  return out;
}

BigInt CohomologyTable::euler_characteristic() const {
  BigInt chi = 0;
  for (int d = 0; d <= max_degree; ++d) {
    if (d % 2 == 0) chi += dimension(d);
    else chi -= dimension(d);
  }
  return chi;
}

bool CohomologyTable::concentrated_in_degree_zero() const {
  return std::all_of(weights.begin(), weights.end(),
                     [](const auto& entry) { return entry.first == 0; });
}

CohomologyTable bundle_cohomology(const BundleExpr& expr) {
  CohomologyTable table;
  table.max_degree = expr.ambient().dim();
  for (const auto& [w, mult] : expr.terms()) {
    BottResult r = bott(w);
    if (r.acyclic()) continue;
    table.weights[r.cohomology->degree][r.cohomology->gl_weight] += mult;
  }
  return table;
}

std::vector<BigInt> cohomology_dimensions(const BundleExpr& expr) {
  std::vector<BigInt> out(static_cast<std::size_t>(expr.ambient().dim() + 1));
  for (const auto& [w, mult] : expr.terms()) {
    BottResult r = bott(w);
    if (r.acyclic()) continue;
    out[r.cohomology->degree] += mult * r.cohomology->dimension;
  }
  return out;
}

}  // namespace roofcalc
