#include "roofcalc/hodge.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "roofcalc/bwb.hpp"
#include "roofcalc/errors.hpp"
#include "roofcalc/parallel.hpp"

namespace roofcalc {

namespace {

BigInt sign(int e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); }

int to_int(const BigInt& v, const char* what) {
  if (v > 1'000'000 || v < -1'000'000) {
    throw Error(ErrorKind::Precondition, std::string(what) + " out of range");
  }
  return v.convert_to<int>();
}

BigInt box_partitions(int total, int rows, int cap) {
  return BigInt(partitions_in_box(total, rows, cap).size());
}

// One E_1 entry of a first-quadrant-style spectral sequence with
// d_r : (col, row) -> (col + r, row - r + 1).
struct SsEntry {
  int col = 0;
  int row = 0;
  BigInt lo = 0;
  BigInt hi = 0;
};

bool linked(const SsEntry& e, const SsEntry& f) {
  const int dc = f.col - e.col;
  const int dr = e.row - f.row;
  if (dc >= 1) return dr == dc - 1;
  if (dc <= -1) return -dr == -dc - 1;
  return false;
}

struct Interval {
  BigInt lo = 0;
  BigInt hi = 0;
};

// Bounds on the abutment in each total degree. An entry survives in full
// unless some potential differential connects it to another nonzero entry;
// then it can lose at most the sum of what it is connected to.
std::map<int, Interval> abut(const std::vector<SsEntry>& entries) {
  std::map<int, Interval> out;
  for (const auto& e : entries) {
    if (e.hi == 0) continue;
    BigInt reach = 0;
    for (const auto& f : entries) {
      if (f.hi != 0 && linked(e, f)) reach += f.hi;
    }
    Interval& slot = out[e.col + e.row];
    slot.hi += e.hi;
    if (e.lo > reach) slot.lo += e.lo - reach;
  }
  return out;
}

// Intersects the entry with [lo, hi]; returns true on a strict narrowing.
bool narrow(HodgeEntry& e, BigInt lo, BigInt hi, Provenance why, int p,
            int q) {
  if (lo < 0) lo = 0;
  const BigInt new_lo = std::max(e.lo, lo);
  const BigInt new_hi = std::min(e.hi, hi);
  if (new_lo > new_hi) {
    throw Error(ErrorKind::Inconsistent,
                "h^{" + std::to_string(p) + "," + std::to_string(q) +
                    "}: [" + to_string(e.lo) + "," + to_string(e.hi) +
                    "] does not meet [" + to_string(lo) + "," + to_string(hi) +
                    "] from " + to_string(why));
  }
  if (new_lo == e.lo && new_hi == e.hi) return false;
  e.lo = new_lo;
  e.hi = new_hi;
  e.source = why;
  return true;
}

BigInt ambient_h(Ambient amb, int p, int q) {
  if (p != q || p < 0) return 0;
  return box_partitions(p, amb.k, amb.n - amb.k);
}

void refine(HodgeDiamond& h, const ZeroLocusSpec& spec) {
  const int d = h.dim;
  if (spec.bundle.ample()) {
    // Lefschetz for zero loci of ample bundles: H^i(G) = H^i(X) below the
    // middle degree, and Serre duality above it.
    for (int p = 0; p <= d; ++p) {
      for (int q = 0; q <= d; ++q) {
        if (p + q == d) continue;
        const BigInt v = p + q < d ? ambient_h(spec.ambient, p, q)
                                   : ambient_h(spec.ambient, d - p, d - q);
        narrow(h.at(p, q), v, v, Provenance::Lefschetz, p, q);
      }
    }
    h.assumptions.push_back(
        "Lefschetz hyperplane theorem (bundle is ample)");
  }
  h.assumptions.push_back("Hodge symmetry and Serre duality");

  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p <= d; ++p) {
      for (int q = 0; q <= d; ++q) {
        const int orbit[4][2] = {{p, q}, {q, p}, {d - p, d - q}, {d - q, d - p}};
        BigInt lo = h.at(p, q).lo;
        BigInt hi = h.at(p, q).hi;
        for (const auto& o : orbit) {
          lo = std::max(lo, h.at(o[0], o[1]).lo);
          hi = std::min(hi, h.at(o[0], o[1]).hi);
        }
        for (const auto& o : orbit) {
          changed |= narrow(h.at(o[0], o[1]), lo, hi, Provenance::Symmetry,
                            o[0], o[1]);
        }
      }
    }
    for (int p = 0; p <= d; ++p) {
      for (int q0 = 0; q0 <= d; ++q0) {
        // (-1)^q0 h^{p,q0} = chi_p - sum_{q != q0} (-1)^q h^{p,q}
        BigInt smin = 0;
        BigInt smax = 0;
        for (int q = 0; q <= d; ++q) {
          if (q == q0) continue;
          const auto& e = h.at(p, q);
          if (q % 2 == 0) {
            smin += e.lo;
            smax += e.hi;
          } else {
            smin -= e.hi;
            smax -= e.lo;
          }
        }
        const BigInt& chi = h.euler_columns[p];
        if (q0 % 2 == 0) {
          changed |= narrow(h.at(p, q0), chi - smax, chi - smin,
                            Provenance::Euler, p, q0);
        } else {
          changed |= narrow(h.at(p, q0), smin - chi, smax - chi,
                            Provenance::Euler, p, q0);
        }
      }
    }
  }
}

}  // namespace

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Ambient: return "ambient";
    case Provenance::Chase: return "chase";
    case Provenance::Lefschetz: return "lefschetz";
    case Provenance::Symmetry: return "symmetry";
    case Provenance::Euler: return "euler";
  }
  return "?";
}

HodgeDiamond::HodgeDiamond(int d) : dim(d) {
  if (d < -1) throw Error(ErrorKind::Precondition, "negative dimension");
  const auto size = static_cast<std::size_t>(d + 1);
  grid.assign(size, std::vector<HodgeEntry>(size));
  euler_columns.assign(size, 0);
}

HodgeEntry HodgeDiamond::entry(int p, int q) const {
  if (p < 0 || q < 0 || p > dim || q > dim) {
    return HodgeEntry{0, 0, Provenance::Ambient};
  }
  return grid[p][q];
}

HodgeEntry& HodgeDiamond::at(int p, int q) {
  if (p < 0 || q < 0 || p > dim || q > dim) {
    throw Error(ErrorKind::Precondition,
                "h^{" + std::to_string(p) + "," + std::to_string(q) +
                    "} outside a diamond of dimension " + std::to_string(dim));
  }
  return grid[p][q];
}

BigInt HodgeDiamond::value(int p, int q) const {
  const HodgeEntry e = entry(p, q);
  if (!e.exact()) {
    throw Error(ErrorKind::Ambiguity,
                "h^{" + std::to_string(p) + "," + std::to_string(q) +
                    "} is only known to lie in [" + to_string(e.lo) + "," +
                    to_string(e.hi) + "]");
  }
  return e.lo;
}

bool HodgeDiamond::exact() const {
  for (const auto& row : grid) {
    for (const auto& e : row) {
      if (!e.exact()) return false;
    }
  }
  return true;
}

bool HodgeDiamond::middle_row_exact() const {
  for (int p = 0; p <= dim; ++p) {
    if (!grid[p][dim - p].exact()) return false;
  }
  return true;
}

std::vector<BigInt> HodgeDiamond::middle_row() const {
  std::vector<BigInt> out;
  for (int p = 0; p <= dim; ++p) out.push_back(value(p, dim - p));
  return out;
}

std::vector<BigInt> HodgeDiamond::diagonal() const {
  std::vector<BigInt> out;
  for (int p = 0; p <= dim; ++p) out.push_back(value(p, p));
  return out;
}

bool HodgeDiamond::symmetric() const {
  for (int p = 0; p <= dim; ++p) {
    for (int q = 0; q <= dim; ++q) {
      const auto& e = grid[p][q];
      if (!e.exact()) continue;
      const auto& t = grid[q][p];
      const auto& s = grid[dim - p][dim - q];
      if (t.exact() && t.lo != e.lo) return false;
      if (s.exact() && s.lo != e.lo) return false;
    }
  }
  return true;
}

bool HodgeDiamond::euler_consistent() const {
  for (int p = 0; p <= dim; ++p) {
    BigInt lo = 0;
    BigInt hi = 0;
    for (int q = 0; q <= dim; ++q) {
      const auto& e = grid[p][q];
      if (q % 2 == 0) {
        lo += e.lo;
        hi += e.hi;
      } else {
        lo -= e.hi;
        hi -= e.lo;
      }
    }
    if (euler_columns[p] < lo || euler_columns[p] > hi) return false;
  }
  return true;
}

BigInt HodgeDiamond::euler_characteristic() const {
  BigInt chi = 0;
  for (int p = 0; p <= dim; ++p) chi += sign(p) * euler_columns[p];
  return chi;
}

ZeroLocusSpec zero_locus(const BundleExpr& bundle) {
  if (bundle.empty()) {
    throw Error(ErrorKind::Precondition, "zero locus of the zero bundle");
  }
  if (!bundle.globally_generated()) {
    throw Error(ErrorKind::NotGloballyGenerated,
                bundle.str() + " is not globally generated");
  }
  const Ambient amb = bundle.ambient();
  const int r = to_int(bundle.rank(), "rank");
  if (r > amb.dim()) {
    throw Error(ErrorKind::Precondition,
                "rank " + std::to_string(r) + " exceeds dim " + amb.str() +
                    " = " + std::to_string(amb.dim()));
  }
  return ZeroLocusSpec{amb, bundle, amb.dim() - r};
}

HodgeDiamond ambient_diamond(int k, int n) {
  const Ambient amb{k, n};
  if (k < 1 || k >= n) {
    throw Error(ErrorKind::InvalidRank, "ambient " + amb.str());
  }
  HodgeDiamond h(amb.dim());
  for (int p = 0; p <= h.dim; ++p) {
    for (int q = 0; q <= h.dim; ++q) h.grid[p][q].source = Provenance::Ambient;
    const BigInt v = ambient_h(amb, p, p);
    h.grid[p][p].lo = v;
    h.grid[p][p].hi = v;
    h.euler_columns[p] = sign(p) * v;
  }
  return h;
}

HodgeDiamond hodge_numbers(const ZeroLocusSpec& spec,
                           const HodgeOptions& options) {
  const Ambient amb = spec.ambient;
  const int d = spec.dim;
  const int dim_g = amb.dim();
  const BundleExpr fdual = dual(spec.bundle);
  const int r = dim_g - d;

  std::vector<BundleExpr> wedges;
  for (int s = 0; s <= r; ++s) wedges.push_back(wedge_power(fdual, s));
  std::vector<BundleExpr> syms;
  std::vector<BundleExpr> omegas;
  for (int m = 0; m <= d; ++m) {
    syms.push_back(sym_power(fdual, m));
    omegas.push_back(cotangent_power(amb.k, amb.n, m));
  }

  // cells[(a, t)][s] = h^*(G, Wedge^s F^vee (x) Sym^a F^vee (x) Omega^t_G)
  std::vector<std::pair<int, int>> jobs;
  for (int a = 0; a <= d; ++a) {
    for (int t = 0; a + t <= d; ++t) jobs.emplace_back(a, t);
  }
  using Column = std::vector<std::vector<BigInt>>;
  auto cells = parallel_map<Column>(jobs.size(), options.threads,
                                    [&](std::size_t i) {
    const auto [a, t] = jobs[i];
    const BundleExpr e = tensor(syms[a], omegas[t]);
    Column col;
    for (int s = 0; s <= r; ++s) {
      col.push_back(cohomology_dimensions(tensor(wedges[s], e)));
    }
    return col;
  });
  std::map<std::pair<int, int>, const Column*> cell;
  for (std::size_t i = 0; i < jobs.size(); ++i) cell[jobs[i]] = &cells[i];

  HodgeDiamond h(d);
  h.assumptions.push_back("section is general: X smooth of expected dimension");
  for (int j = 0; j <= d; ++j) {
    std::vector<SsEntry> conormal;
    BigInt chi_j = 0;
    for (int t = 0; t <= j; ++t) {
      const Column& col = *cell.at({j - t, t});
      std::vector<SsEntry> koszul;
      BigInt chi_t = 0;
      for (int s = 0; s <= r; ++s) {
        for (int q = 0; q <= dim_g; ++q) {
          const BigInt& v = col[s][q];
          if (v == 0) continue;
          koszul.push_back({-s, q, v, v});
          chi_t += sign(s + q) * v;
        }
      }
      chi_j += sign(j - t) * chi_t;
      for (const auto& [deg, iv] : abut(koszul)) {
        if (deg < 0 || deg > d) continue;
        conormal.push_back({t - j, deg, iv.lo, iv.hi});
      }
    }
    h.euler_columns[j] = chi_j;
    for (int q = 0; q <= d; ++q) {
      h.grid[j][q] = HodgeEntry{0, 0, Provenance::Chase};
    }
    for (const auto& [deg, iv] : abut(conormal)) {
      if (deg < 0 || deg > d) continue;
      h.grid[j][deg] = HodgeEntry{iv.lo, iv.hi, Provenance::Chase};
    }
  }
  if (options.refine) refine(h, spec);
  return h;
}

BigInt point_count(const ZeroLocusSpec& spec) {
  if (spec.dim != 0) {
    throw Error(ErrorKind::Precondition,
                "point_count needs a zero-dimensional locus, got dim " +
                    std::to_string(spec.dim));
  }
  const BundleExpr fdual = dual(spec.bundle);
  const int r = spec.ambient.dim();
  BigInt chi = 0;
  for (int s = 0; s <= r; ++s) {
    chi += sign(s) * bundle_cohomology(wedge_power(fdual, s)).euler_characteristic();
  }
  return chi;
}

std::vector<BigInt> v_cohomology(const HodgeDiamond& y,
                                 const HodgeDiamond& ambient) {
  if (y.dim < 0) throw Error(ErrorKind::Precondition, "empty variety");
  if (!y.middle_row_exact()) {
    throw Error(ErrorKind::Ambiguity, "middle row of the diamond is inexact");
  }
  std::vector<BigInt> out;
  for (int p = 0; p <= y.dim; ++p) {
    const int q = y.dim - p;
    const BigInt v = y.value(p, q) - ambient.value(p, q);
    if (v < 0) {
      throw Error(ErrorKind::InjectivityViolation,
                  "h^{" + std::to_string(p) + "," + std::to_string(q) +
                      "} is smaller than the ambient contribution");
    }
    out.push_back(v);
  }
  return out;
}

PairInvariants pair_invariants(int k, int n) {
  if (k < 1 || n < 2 * k + 1) {
    throw Error(ErrorKind::Precondition,
                "pair needs k >= 1 and n >= 2k+1, got k=" + std::to_string(k) +
                    ", n=" + std::to_string(n));
  }
  PairInvariants inv;
  inv.k = k;
  inv.n = n;
  inv.d1 = k * n - k * k - n + k;
  inv.d2 = k * n + n - k * k - 3 * k - 2;
  inv.canonical_twist_1 = n - 2 * k - 1;
  inv.canonical_twist_2 = -(n - 2 * k - 1);
  inv.cy = n == 2 * k + 1;
  return inv;
}

PairDiamonds compute_pair(int k, int n, const HodgeOptions& options) {
  const PairInvariants inv = pair_invariants(k, n);
  const Ambient a1{k, n};
  const Ambient a2{k + 1, n};
  ZeroLocusSpec y1 = zero_locus(twist(BundleExpr::Qdual(a1), 2));
  ZeroLocusSpec y2 = zero_locus(twist(BundleExpr::U(a2), 2));
  HodgeDiamond h1 = hodge_numbers(y1, options);
  HodgeDiamond h2 = hodge_numbers(y2, options);
  return PairDiamonds{inv, std::move(y1), std::move(y2), std::move(h1),
                      std::move(h2)};
}

PairTheoremReport check_pair_theorem(const PairDiamonds& pair) {
  const PairInvariants& inv = pair.invariants;
  PairTheoremReport rep;
  rep.k = inv.k;
  rep.n = inv.n;
  if ((inv.d2 - inv.d1) % 2 != 0) {
    throw Error(ErrorKind::Precondition, "odd dimension gap d2 - d1");
  }
  rep.shift = (inv.d2 - inv.d1) / 2;
  rep.v1 = v_cohomology(pair.h1, ambient_diamond(inv.k, inv.n));
  rep.v2 = v_cohomology(pair.h2, ambient_diamond(inv.k + 1, inv.n));
  for (const auto& v : rep.v1) rep.v_dim1 += v;
  for (const auto& v : rep.v2) rep.v_dim2 += v;

  for (int p = 0; p <= inv.d2; ++p) {
    const int p1 = p - rep.shift;
    const BigInt expected =
        p1 >= 0 && p1 <= inv.d1 ? rep.v1[p1] : BigInt(0);
    if (rep.v2[p] != expected) {
      rep.failures.push_back("v-row mismatch at p=" + std::to_string(p) +
                             ": Y2 has " + to_string(rep.v2[p]) +
                             ", shifted Y1 has " + to_string(expected));
    }
  }

  const auto mid2 = pair.h2.middle_row();
  for (int p = 0; p <= inv.d2; ++p) {
    if (mid2[p] != 0) {
      rep.colevel = p;
      break;
    }
  }
  const int expected_colevel = inv.n - 2 * inv.k - 1;
  if (rep.colevel != expected_colevel) {
    rep.failures.push_back("co-level of Y2 is " + std::to_string(rep.colevel) +
                           ", expected " + std::to_string(expected_colevel));
  }

  auto off_middle = [&rep](const HodgeDiamond& h, const char* name) {
    for (int p = 0; p <= h.dim; ++p) {
      for (int q = 0; q <= h.dim; ++q) {
        if (p == q || p + q == h.dim) continue;
        if (h.value(p, q) != 0) {
          rep.failures.push_back(std::string(name) + " has h^{" +
                                 std::to_string(p) + "," + std::to_string(q) +
                                 "} != 0 off the middle row");
        }
      }
    }
  };
  off_middle(pair.h1, "Y1");
  off_middle(pair.h2, "Y2");
  return rep;
}

PairTheoremReport check_pair_theorem(int k, int n,
                                     const HodgeOptions& options) {
  return check_pair_theorem(compute_pair(k, n, options));
}

}  // namespace roofcalc
