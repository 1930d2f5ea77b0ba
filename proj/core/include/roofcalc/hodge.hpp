#pragma once

#include <string>
#include <vector>

#include "roofcalc/bigint.hpp"
#include "roofcalc/bundles.hpp"
#include "roofcalc/weights.hpp"

namespace roofcalc {

/// Which step pinned down (or last narrowed) an entry.
enum class Provenance { Ambient, Chase, Lefschetz, Symmetry, Euler };

const char* to_string(Provenance p);

/// h^{p,q} known to lie in [lo, hi].
struct HodgeEntry {
  BigInt lo = 0;
  BigInt hi = 0;
  Provenance source = Provenance::Chase;

  bool exact() const { return lo == hi; }
  bool operator==(const HodgeEntry&) const = default;
};

/// Hodge numbers of a smooth projective variety of dimension `dim`.
/// dim = -1 encodes the empty variety.
struct HodgeDiamond {
  int dim = -1;
  /// grid[p][q], 0 <= p, q <= dim.
  std::vector<std::vector<HodgeEntry>> grid;
  /// chi(Omega^p), always exact.
  std::vector<BigInt> euler_columns;
  std::vector<std::string> assumptions;

  HodgeDiamond() = default;
  explicit HodgeDiamond(int dim);

  /// Zero outside the square.
  HodgeEntry entry(int p, int q) const;
  HodgeEntry& at(int p, int q);
  /// Exact value; throws Error(Ambiguity) for an interval entry.
  BigInt value(int p, int q) const;

  bool exact() const;
  bool middle_row_exact() const;
  /// h^{p, dim - p} for p = 0..dim.
  std::vector<BigInt> middle_row() const;
  /// h^{p,p} for p = 0..dim.
  std::vector<BigInt> diagonal() const;

  /// Hodge and Serre symmetry among exact entries.
  bool symmetric() const;
  /// Each exact column alternates to its Euler characteristic, and the
  /// interval columns contain it.
  bool euler_consistent() const;
  BigInt euler_characteristic() const;
};

/// X = Z(s) for a general section s of a globally generated bundle.
struct ZeroLocusSpec {
  Ambient ambient;
  BundleExpr bundle;
  int dim = 0;
};

/// Validates `bundle` (non-zero, globally generated, rank <= dim G).
ZeroLocusSpec zero_locus(const BundleExpr& bundle);

struct HodgeOptions {
  /// Sharpen the raw spectral-sequence intervals with Lefschetz (ample
  /// bundles), Hodge/Serre symmetry and the exact Euler columns.
  bool refine = true;
  int threads = 0;
};

HodgeDiamond ambient_diamond(int k, int n);

HodgeDiamond hodge_numbers(const ZeroLocusSpec& spec,
                           const HodgeOptions& options = {});

/// Degree of a zero-dimensional X, as chi(O_X) from the Koszul complex.
BigInt point_count(const ZeroLocusSpec& spec);

/// Middle row of y minus the ambient restriction. Throws Ambiguity when the
/// middle row is inexact and InjectivityViolation when a component goes
/// negative.
std::vector<BigInt> v_cohomology(const HodgeDiamond& y,
                                 const HodgeDiamond& ambient);

struct PairInvariants {
  int k = 0;
  int n = 0;
  int d1 = 0;
  int d2 = 0;
  int canonical_twist_1 = 0;
  int canonical_twist_2 = 0;
  bool cy = false;
};

/// Y1 = Z(Q^vee(2)) in G(k,n), Y2 = Z(U(2)) in G(k+1,n). Needs k >= 1 and
/// n >= 2k + 1.
PairInvariants pair_invariants(int k, int n);

struct PairDiamonds {
  PairInvariants invariants;
  ZeroLocusSpec y1;
  ZeroLocusSpec y2;
  HodgeDiamond h1;
  HodgeDiamond h2;
};

PairDiamonds compute_pair(int k, int n, const HodgeOptions& options = {});

struct PairTheoremReport {
  int k = 0;
  int n = 0;
  int shift = 0;
  std::vector<BigInt> v1;
  std::vector<BigInt> v2;
  BigInt v_dim1 = 0;
  BigInt v_dim2 = 0;
  /// Smallest p with h^{p, d2-p}(Y2) != 0, or -1.
  int colevel = -1;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
};

PairTheoremReport check_pair_theorem(const PairDiamonds& pair);
PairTheoremReport check_pair_theorem(int k, int n,
                                     const HodgeOptions& options = {});

}  // namespace roofcalc
