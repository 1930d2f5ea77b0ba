#pragma once

#include <map>
#include <string>
#include <utility>

#include "roofcalc/bigint.hpp"
#include "roofcalc/hodge.hpp"

namespace roofcalc {

/// Hodge-Deligne polynomial sum e_{p,q} u^p v^q, kept without zero
/// coefficients.
class EPoly {
 public:
  using Coeffs = std::map<std::pair<int, int>, BigInt>;

  EPoly() = default;
  static EPoly one() { return monomial(0, 0, 1); }
  static EPoly monomial(int p, int q, BigInt c);
  /// The class of the affine line, uv.
  static EPoly lefschetz() { return monomial(1, 1, 1); }

  const Coeffs& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(int p, int q) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// E(1, 1): the topological Euler characteristic.
  BigInt euler_characteristic() const;
  EPoly swapped() const;
  /// Multiplies by (uv)^k.
  EPoly times_lefschetz(int k) const;
  std::string str() const;

  EPoly& operator+=(const EPoly& o);
  EPoly& operator-=(const EPoly& o);
  friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
  friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
  friend EPoly operator*(const EPoly& a, const EPoly& b);
  bool operator==(const EPoly&) const = default;

 private:
  void add(int p, int q, const BigInt& c);
  Coeffs coeffs_;
};

EPoly epoly_grassmannian(int k, int n);
EPoly epoly_projective(int m);
/// F(k, k+1, n) as a P^k-bundle over G(k+1, n).
EPoly epoly_flag(int k, int n);
/// Coefficients (-1)^{p+q} h^{p,q}; throws Ambiguity for inexact entries.
EPoly epoly_of_diamond(const HodgeDiamond& h);

struct LeqCheck {
  EPoly residual;
  bool pass = false;
};

/// (uv)^k E(Y2) - (uv)^{n-k-1} E(Y1) + E(G(k+1,n)) E(P^{k-1})
///   - E(G(k,n)) E(P^{n-k-2}).
LeqCheck verify_lemma_leq(int k, int n, const HodgeDiamond& y1,
                          const HodgeDiamond& y2);

/// b_2(Y2) from the Poincare polynomial of F(k, k+1, n) minus the
/// ambient contributions b_{2i}(G(k+1, n)), i = 2..k+1. Throws
/// ExcludedCase unless (k+1)(n-k-2) > 2.
long long derive_b2(int k, int n);

}  // namespace roofcalc
