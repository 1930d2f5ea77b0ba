#include "roofcalc/lr.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "roofcalc/errors.hpp"

namespace roofcalc {

namespace {

using Counts = std::map<std::vector<int>, std::int64_t>;

// Enumerates LR tableaux of shape nu / lambda and content mu, one
// horizontal strip per label. `shape` has exactly `rank` rows, so shapes with
// more rows are never produced.
class LrEnumerator {
 public:
  LrEnumerator(const std::vector<int>& lambda, const std::vector<int>& mu)
      : mu_(mu), shape_(lambda), rows_(lambda.size()) {
    prev_.assign(rows_, 0);
  }

  Counts run() {
    next_label(0);
    return std::move(out_);
  }

 private:
  void next_label(std::size_t label) {
    if (label == mu_.size() || mu_[label] == 0) {
      ++out_[shape_];
      return;
    }
    const std::vector<int> old_shape = shape_;
    const std::vector<int> old_prev = prev_;
    std::vector<int> strip(rows_, 0);
    place(label, 0, mu_[label], 0, 0, old_shape, old_prev, strip);
    shape_ = old_shape;
    prev_ = old_prev;
  }

  // `placed` counts boxes of this label in rows < row; `prev_above` counts
  // boxes of the previous label in rows < row.
  void place(std::size_t label, std::size_t row, int left, int placed,
             int prev_above, const std::vector<int>& old_shape,
             const std::vector<int>& old_prev, std::vector<int>& strip) {
    if (row == rows_) {
      if (left != 0) return;
      for (std::size_t r = 0; r < rows_; ++r) {
        shape_[r] = old_shape[r] + strip[r];
        prev_[r] = strip[r];
      }
      next_label(label + 1);
      return;
    }
    const int cap = row == 0 ? left : old_shape[row - 1] - old_shape[row];
    const int limit = std::min(cap, left);
    for (int a = 0; a <= limit; ++a) {
      if (label > 0 && placed + a > prev_above) break;
      strip[row] = a;
      place(label, row + 1, left - a, placed + a, prev_above + old_prev[row],
            old_shape, old_prev, strip);
    }
    strip[row] = 0;
  }

  const std::vector<int>& mu_;
  std::vector<int> shape_;
  std::vector<int> prev_;
  std::size_t rows_;
  Counts out_;
};

using CacheKey = std::pair<std::vector<int>, std::vector<int>>;

std::map<CacheKey, Counts>& lr_cache() {
  thread_local std::map<CacheKey, Counts> cache;
  return cache;
}

const Counts& lr_partitions(const std::vector<int>& lambda,
                            const std::vector<int>& mu) {
  // c^nu_{lambda mu} is symmetric; enumerate with the smaller content.
  const long long a = std::accumulate(lambda.begin(), lambda.end(), 0LL);
  const long long b = std::accumulate(mu.begin(), mu.end(), 0LL);
  CacheKey key = (b <= a) ? CacheKey{lambda, mu} : CacheKey{mu, lambda};
  auto& cache = lr_cache();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Counts counts = LrEnumerator(key.first, key.second).run();
  return cache.emplace(std::move(key), std::move(counts)).first->second;
}

}  // namespace

BigInt SchurSum::multiplicity(const Weight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? BigInt(0) : it->second;
}

BigInt SchurSum::total_multiplicity() const {
  BigInt total = 0;
  for (const auto& [w, m] : terms) total += m;
  return total;
}

SchurSum lr_product(const Weight& lambda, const Weight& mu, int rank) {
  if (lambda.rank() != rank || mu.rank() != rank) {
    throw Error(ErrorKind::IncompatibleRank,
                "lr_product: ranks " + std::to_string(lambda.rank()) + ", " +
                    std::to_string(mu.rank()) + " for GL(" +
                    std::to_string(rank) + ")");
  }
  if (!lambda.is_dominant() || !mu.is_dominant()) {
    throw Error(ErrorKind::InvalidWeight,
                "lr_product needs dominant weights: " + lambda.str() + ", " +
                    mu.str());
  }
  const int shift = std::max(0, -std::min(lambda.min_entry(), mu.min_entry()));
  const Counts& counts =
      lr_partitions(lambda.shifted(shift).vec(), mu.shifted(shift).vec());
  SchurSum out{rank, {}};
  for (const auto& [nu, c] : counts) {
    out.terms.emplace(Weight(nu).shifted(-2 * shift), BigInt(c));
  }
  return out;
}

DoubleSum lr_double_product(const DoubleWeight& a, const DoubleWeight& b) {
  if (a.ambient() != b.ambient()) {
    throw Error(ErrorKind::IncompatibleAmbient,
                "lr_double_product: " + a.ambient().str() + " vs " +
                    b.ambient().str());
  }
  const SchurSum upper = lr_product(a.upper(), b.upper(), a.k());
  const SchurSum lower = lr_product(a.lower(), b.lower(), a.n() - a.k());
  DoubleSum out;
  for (const auto& [u, cu] : upper.terms) {
    for (const auto& [l, cl] : lower.terms) {
      out[DoubleWeight(u, l)] += cu * cl;
    }
  }
  return out;
}

void clear_lr_cache() { lr_cache().clear(); }

}  // namespace roofcalc
