#pragma once

#include <string>
#include <vector>

#include "roofcalc/bigint.hpp"
#include "roofcalc/bundles.hpp"
#include "roofcalc/weights.hpp"

namespace roofcalc {

struct Collection {
  Ambient ambient;
  std::vector<DoubleWeight> members;
};

/// S_lambda Q^vee(k) for lambda in Box(n-k, k), in Box order.
Collection kapranov_collection(int k, int n);
/// Memberwise bar move onto G(k+1, n).
Collection bar_moved_collection(const Collection& c);

enum class TiltingSide { Minus, Plus };

const char* to_string(TiltingSide side);

struct VanishingFailure {
  Weight lambda;
  Weight lambda_prime;
  int m = 0;
  DoubleWeight summand;
  BigInt multiplicity;
  int degree = 0;
  Weight gl_weight;
  BigInt dimension;
};

struct VanishingReport {
  TiltingSide side = TiltingSide::Minus;
  int n = 0;
  int m_max = 0;
  int box_cap = 1;
  long long checked_pairs = 0;
  long long checked_triples = 0;
  long long checked_summands = 0;
  /// Pairs whose every summand at m = m_max is globally generated, so that
  /// all larger m stay in degree 0.
  long long certified_pairs = 0;
  std::vector<VanishingFailure> failures;
  /// Minus side only: disagreements between the first-principles bundle and
  /// the folded form (upper 2m + lambda_1, lower from LR).
  std::vector<std::string> twist_discrepancies;

  bool pass() const { return failures.empty() && twist_discrepancies.empty(); }
};

/// The bundle whose cohomology is the m-th piece of Ext(E_lambda,
/// E_lambda'). Minus: (S_lambda Q^vee(1))^vee (x) S_lambda' Q^vee(1) (x)
/// Sym^m(Q^vee(2)) on G(1, n). Plus: the bar-moved members on G(2, n)
/// with Sym^m(U(2)).
BundleExpr tilting_term(TiltingSide side, int n, const Weight& lambda,
                        const Weight& lambda_prime, int m);

/// Positive-degree summands of tilting_term.
std::vector<VanishingFailure> evaluate_triple(TiltingSide side, int n,
                                              const Weight& lambda,
                                              const Weight& lambda_prime, int m);

/// All lambda, lambda' in Box(n-1, box_cap) and 0 <= m <= m_max. Vanishing
/// is expected for box_cap = 1; other caps serve as negative controls.
VanishingReport check_tilting_minus(int n, int m_max, int box_cap = 1,
                                    int threads = 0);
VanishingReport check_tilting_plus(int n, int m_max, int threads = 0);

}  // namespace roofcalc
