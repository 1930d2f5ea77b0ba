#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace roofcalc {

/// A GL(r) weight: a dense integer sequence of length r >= 1.
///
/// Entries may be negative (twisted duals). Dominance (non-increasing
/// entries) is only required where the weight labels a Schur functor, and is
/// checked at those call sites rather than here.
class Weight {
 public:
  explicit Weight(std::vector<int> entries);
  Weight(std::initializer_list<int> entries);

  static Weight zero(int rank);
  static Weight constant(int rank, int value);

  int rank() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const noexcept { return entries_; }
  const std::vector<int>& vec() const noexcept { return entries_; }

  int first() const { return entries_.front(); }
  int last() const { return entries_.back(); }
  int min_entry() const;
  long long total() const;

  bool is_dominant() const;
  bool is_partition() const;
  bool is_zero() const;
  bool is_constant() const;

  /// Adds `c` to every entry (tensoring by det^c).
  Weight shifted(int c) const;
  /// (-w_r, ..., -w_1): the weight of the dual representation.
  Weight dual() const;

  std::string str() const;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

 private:
  std::vector<int> entries_;
};

struct Ambient {
  int k = 1;
  int n = 2;

  int dim() const noexcept { return k * (n - k); }
  int quotient_rank() const noexcept { return n - k; }
  std::string str() const;

  auto operator<=>(const Ambient&) const = default;
  bool operator==(const Ambient&) const = default;
};

/// Label (lambda|delta) of the irreducible homogeneous bundle
/// S_lambda U^vee (x) S_delta Q^vee on G(k, n), with k = rank(lambda) and
/// n - k = rank(delta). Both blocks are dominant.
class DoubleWeight {
 public:
  DoubleWeight(Weight upper, Weight lower);

  const Weight& upper() const noexcept { return upper_; }
  const Weight& lower() const noexcept { return lower_; }
  int k() const noexcept { return upper_.rank(); }
  int n() const noexcept { return upper_.rank() + lower_.rank(); }
  Ambient ambient() const noexcept { return {k(), n()}; }

  /// (lambda_1, ..., lambda_k, delta_1, ..., delta_{n-k}).
  std::vector<int> concatenated() const;
  /// True when the concatenation is non-increasing, i.e. the bundle is
  /// globally generated.
  bool fully_ordered() const;

  /// Tensor by O(t) = (det U^vee)^t.
  DoubleWeight twisted(int t) const;
  DoubleWeight dual() const;

  std::string str() const;

  auto operator<=>(const DoubleWeight&) const = default;
  bool operator==(const DoubleWeight&) const = default;

 private:
  Weight upper_;
  Weight lower_;
};

struct BoxSet {
  int rows = 0;
  int cap = 0;
  std::vector<Weight> members;
};

/// All weights b >= w_1 >= ... >= w_a >= 0, lexicographically descending.
BoxSet enumerate_box(int rows, int cap);

/// Moves the top entry of the lower block into the upper block:
/// (lambda | delta_1, delta_2, ...) -> (lambda, delta_1 | delta_2, ...).
DoubleWeight bar_move(const DoubleWeight& w);

struct DualSchur {
  Weight bar;
  int twist = 0;
};

/// (S_lambda Q^vee)^vee = S_{bar lambda} Q^vee (lambda_1) with
/// bar lambda = (l_1 - l_r, l_1 - l_{r-1}, ..., l_1 - l_2, 0).
DualSchur dual_schur_q(const Weight& lambda);

/// ASCII double tableau: upper diagram, a bar, lower diagram. Throws
/// Error(UnsupportedRender) when an entry is negative.
std::string render_diagram(const DoubleWeight& w);
/// render_diagram, falling back to the numeric form for negative entries.
std::string render_or_numeric(const DoubleWeight& w);

long long binomial(int n, int k);

}  // namespace roofcalc
