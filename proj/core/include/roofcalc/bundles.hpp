#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "roofcalc/bigint.hpp"
#include "roofcalc/lr.hpp"
#include "roofcalc/weights.hpp"

namespace roofcalc {

enum class Block { Upper, Lower };

enum class AtomKind { U, Udual, Q, Qdual, Line, Schur };

/// Recognized building blocks of the expression grammar. For Schur atoms
/// `dual_side` selects S_lambda U / S_lambda Q instead of the U^vee / Q^vee
/// versions.
struct BundleAtomTag {
  AtomKind kind = AtomKind::Line;
  Block block = Block::Upper;
  std::optional<Weight> lambda;
  bool dual_side = false;
  int twist = 0;
};

/// Completely reducible homogeneous bundle on G(k, n): a canonical
/// non-negative integer combination of irreducible S_lambda U^vee (x)
/// S_delta Q^vee, with O(t) folded into the upper block as lambda + t.
class BundleExpr {
 public:
  using Terms = std::map<DoubleWeight, BigInt, std::greater<>>;

  explicit BundleExpr(Ambient ambient);
  BundleExpr(Ambient ambient, Terms terms);

  static BundleExpr zero(Ambient ambient) { return BundleExpr(ambient); }
  static BundleExpr trivial(Ambient ambient) { return line(ambient, 0); }
  static BundleExpr line(Ambient ambient, int t);
  static BundleExpr irreducible(const DoubleWeight& w, BigInt mult = 1);
  static BundleExpr atom(Ambient ambient, const BundleAtomTag& tag);
  static BundleExpr atom(Ambient ambient, AtomKind kind);

  static BundleExpr U(Ambient a) { return atom(a, AtomKind::U); }
  static BundleExpr Udual(Ambient a) { return atom(a, AtomKind::Udual); }
  static BundleExpr Q(Ambient a) { return atom(a, AtomKind::Q); }
  static BundleExpr Qdual(Ambient a) { return atom(a, AtomKind::Qdual); }

  const Ambient& ambient() const noexcept { return ambient_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  void add(const DoubleWeight& w, const BigInt& mult);

  BigInt rank() const;
  bool globally_generated() const;
  /// Every summand globally generated with a strict gap across the bar
  /// (last upper entry > first lower entry).
  bool ample() const;

  std::string str() const;

  bool operator==(const BundleExpr&) const = default;

 private:
  void require_ambient(const DoubleWeight& w) const;

  Ambient ambient_;
  Terms terms_;
};

BundleExpr operator+(const BundleExpr& a, const BundleExpr& b);
BundleExpr tensor(const BundleExpr& a, const BundleExpr& b);
BundleExpr operator*(const BundleExpr& a, const BundleExpr& b);
BundleExpr dual(const BundleExpr& a);
BundleExpr twist(const BundleExpr& a, int t);

/// Sym^m / Wedge^m of a direct sum of twisted single-box atoms (and line
/// bundles). Anything else throws Error(PlethysmRequired).
BundleExpr sym_power(const BundleExpr& a, int m);
BundleExpr wedge_power(const BundleExpr& a, int m);

/// Omega^t of G(k, n) by the Cauchy formula for U (x) Q^vee:
/// sum over mu |- t inside the k x (n-k) box of S_mu U (x) S_{mu'} Q^vee.
BundleExpr cotangent_power(int k, int n, int t);

BigInt rank(const BundleExpr& a);

/// Partitions of `total` with at most `rows` parts, each at most `cap`.
std::vector<std::vector<int>> partitions_in_box(int total, int rows, int cap);
std::vector<int> conjugate(const std::vector<int>& mu, int length);

}  // namespace roofcalc
