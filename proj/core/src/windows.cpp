#include "roofcalc/windows.hpp"

#include <map>
#include <utility>

#include "roofcalc/bwb.hpp"
#include "roofcalc/errors.hpp"
#include "roofcalc/lr.hpp"
#include "roofcalc/parallel.hpp"

namespace roofcalc {

namespace {

DoubleWeight window_member(TiltingSide side, int n, const Weight& lambda) {
  if (lambda.rank() != n - 1) {
    throw Error(ErrorKind::IncompatibleRank,
                "window weight " + lambda.str() + " needs " +
                    std::to_string(n - 1) + " entries");
  }
  DoubleWeight w(Weight{1}, lambda);
  return side == TiltingSide::Minus ? w : bar_move(w);
}

using Spectrum = std::map<std::pair<int, Weight>, BigInt>;

Spectrum spectrum(const BundleExpr& e, int shift) {
  Spectrum out;
  for (const auto& [w, mult] : e.terms()) {
    const BottResult r = bott(w);
    if (r.acyclic()) continue;
    out[{r.cohomology->degree, r.cohomology->gl_weight.shifted(shift)}] += mult;
  }
  return out;
}

// Upper block 2m + lambda_1, lower block lambda-bar (x) lambda' (x) (m, 0..).
BundleExpr folded_minus(int n, const Weight& lambda, const Weight& lambda_prime,
                        int m) {
  const Ambient amb{1, n};
  const DualSchur bar = dual_schur_q(lambda);
  std::vector<int> sym(static_cast<std::size_t>(n - 1), 0);
  sym.front() = m;
  BundleExpr out(amb);
  for (const auto& [d1, c1] : lr_product(bar.bar, lambda_prime, n - 1).terms) {
    for (const auto& [d2, c2] : lr_product(d1, Weight(sym), n - 1).terms) {
      out.add(DoubleWeight(Weight{2 * m + bar.twist}, d2), c1 * c2);
    }
  }
  return out;
}

struct PairOutcome {
  long long triples = 0;
  long long summands = 0;
  bool certified = false;
  std::vector<VanishingFailure> failures;
  std::vector<std::string> discrepancies;
};

PairOutcome check_pair(TiltingSide side, int n, int m_max, const Weight& lambda,
                       const Weight& lambda_prime) {
  PairOutcome out;
  for (int m = 0; m <= m_max; ++m) {
    const BundleExpr term = tilting_term(side, n, lambda, lambda_prime, m);
    ++out.triples;
    out.summands += static_cast<long long>(term.term_count());
    for (auto& f : evaluate_triple(side, n, lambda, lambda_prime, m)) {
      out.failures.push_back(std::move(f));
    }
    if (side == TiltingSide::Minus) {
      // The first-principles label differs from the folded one by the
      // global character det^{-lambda_1}.
      const BundleExpr folded = folded_minus(n, lambda, lambda_prime, m);
      if (spectrum(term, lambda[0]) != spectrum(folded, 0)) {
        out.discrepancies.push_back("lambda=" + lambda.str() + " lambda'=" +
                                    lambda_prime.str() + " m=" +
                                    std::to_string(m));
      }
    }
    if (m == m_max) out.certified = term.globally_generated();
  }
  return out;
}

VanishingReport run(TiltingSide side, int n, int m_max, int cap, int threads) {
  const BoxSet box = enumerate_box(n - 1, cap);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < box.members.size(); ++i) {
    for (std::size_t j = 0; j < box.members.size(); ++j) pairs.emplace_back(i, j);
  }
  auto outcomes = parallel_map<PairOutcome>(pairs.size(), threads, [&](std::size_t i) {
    return check_pair(side, n, m_max, box.members[pairs[i].first],
                      box.members[pairs[i].second]);
  });
  VanishingReport rep;
  rep.side = side;
  rep.n = n;
  rep.m_max = m_max;
  rep.box_cap = cap;
  rep.checked_pairs = static_cast<long long>(pairs.size());
  for (auto& o : outcomes) {
    rep.checked_triples += o.triples;
    rep.checked_summands += o.summands;
    if (o.certified) ++rep.certified_pairs;
    for (auto& f : o.failures) rep.failures.push_back(std::move(f));
    for (auto& s : o.discrepancies) rep.twist_discrepancies.push_back(std::move(s));
  }
  return rep;
}

}  // namespace

const char* to_string(TiltingSide side) {
  return side == TiltingSide::Minus ? "minus" : "plus";
}

Collection kapranov_collection(int k, int n) {
  if (k < 1 || k >= n) {
    throw Error(ErrorKind::InvalidRank,
                "kapranov_collection needs 1 <= k < n");
  }
  Collection c{Ambient{k, n}, {}};
  for (const auto& lambda : enumerate_box(n - k, k).members) {
    c.members.emplace_back(Weight::constant(k, k), lambda);
  }
  return c;
}

Collection bar_moved_collection(const Collection& c) {
  Collection out{Ambient{c.ambient.k + 1, c.ambient.n}, {}};
  for (const auto& w : c.members) out.members.push_back(bar_move(w));
  return out;
}

BundleExpr tilting_term(TiltingSide side, int n, const Weight& lambda,
                        const Weight& lambda_prime, int m) {
  const DoubleWeight a = window_member(side, n, lambda);
  const DoubleWeight b = window_member(side, n, lambda_prime);
  const Ambient amb = a.ambient();
  const BundleExpr pushforward =
      side == TiltingSide::Minus
          ? sym_power(twist(BundleExpr::Qdual(amb), 2), m)
          : sym_power(twist(BundleExpr::U(amb), 2), m);
  return tensor(tensor(dual(BundleExpr::irreducible(a)),
                       BundleExpr::irreducible(b)),
                pushforward);
}

std::vector<VanishingFailure> evaluate_triple(TiltingSide side, int n,
                                              const Weight& lambda,
                                              const Weight& lambda_prime,
                                              int m) {
  std::vector<VanishingFailure> out;
  const BundleExpr term = tilting_term(side, n, lambda, lambda_prime, m);
  for (const auto& [w, mult] : term.terms()) {
    const BottResult r = bott(w);
    if (r.acyclic() || r.cohomology->degree == 0) continue;
    out.push_back(VanishingFailure{lambda, lambda_prime, m, w, mult,
                                   r.cohomology->degree, r.cohomology->gl_weight,
                                   r.cohomology->dimension});
  }
  return out;
}

VanishingReport check_tilting_minus(int n, int m_max, int box_cap,
                                    int threads) {
  if (n < 3 || m_max < 0 || box_cap < 0) {
    throw Error(ErrorKind::Precondition,
                "check_tilting_minus needs n >= 3, m_max >= 0, box_cap >= 0");
  }
  return run(TiltingSide::Minus, n, m_max, box_cap, threads);
}

VanishingReport check_tilting_plus(int n, int m_max, int threads) {
  if (n < 4 || m_max < 0) {
    throw Error(ErrorKind::Precondition,
                "check_tilting_plus needs n >= 4 and m_max >= 0");
  }
  return run(TiltingSide::Plus, n, m_max, 1, threads);
}

}  // namespace roofcalc
