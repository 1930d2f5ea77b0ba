#include "published_suite.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "roofcalc/bundles.hpp"
#include "roofcalc/bwb.hpp"
#include "roofcalc/errors.hpp"
#include "roofcalc/hodge.hpp"
#include "roofcalc/lr.hpp"
#include "roofcalc/motive.hpp"
#include "roofcalc/roofs.hpp"
#include "roofcalc/windows.hpp"

namespace roofcalc::cli {

namespace {

// Middle row as printed, plus h^{p,p} off the middle for p < d/2 (the rest
// follows by symmetry); everything else vanishes.
struct Expected {
  int dim;
  std::vector<long long> middle;
  std::vector<long long> diagonal;
};

std::string diff(const HodgeDiamond& h, const Expected& e) {
  if (h.dim != e.dim) {
    return "dim " + std::to_string(h.dim) + " != " + std::to_string(e.dim);
  }
  for (int p = 0; p <= e.dim; ++p) {
    for (int q = 0; q <= e.dim; ++q) {
      long long want = 0;
      if (p + q == e.dim) {
        want = e.middle[static_cast<std::size_t>(p)];
      } else if (p == q) {
        want = e.diagonal[static_cast<std::size_t>(std::min(p, e.dim - p))];
      }
      const HodgeEntry x = h.entry(p, q);
      if (!x.exact() || x.lo != BigInt(want)) {
        std::ostringstream os;
        os << "h^{" << p << "," << q << "} = [" << x.lo << "," << x.hi
           << "], expected " << want;
        return os.str();
      }
    }
  }
  return {};
}

std::set<DoubleWeight> as_set(const Collection& c) {
  return {c.members.begin(), c.members.end()};
}

DoubleWeight dw(std::vector<int> a, std::vector<int> b) {
  return DoubleWeight(Weight(std::move(a)), Weight(std::move(b)));
}

class Suite {
 public:
  explicit Suite(int threads) : threads_(threads) {}

  void check(const std::string& name, const std::function<std::string()>& body) {
    SuiteCheck c{name, false, {}};
    try {
      c.detail = body();
      c.pass = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("threw: ") + e.what();
    }
    results_.push_back(std::move(c));
  }

  PairDiamonds& pair(int k, int n) {
    for (auto& [key, value] : pairs_) {
      if (key == std::make_pair(k, n)) return value;
    }
    HodgeOptions opts;
    opts.threads = threads_;
    pairs_.emplace_back(std::make_pair(k, n), compute_pair(k, n, opts));
    return pairs_.back().second;
  }

  std::vector<SuiteCheck> take() { return std::move(results_); }

  int threads() const { return threads_; }

 private:
  int threads_;
  std::vector<std::pair<std::pair<int, int>, PairDiamonds>> pairs_;
  std::vector<SuiteCheck> results_;
};

}  // namespace

std::vector<SuiteCheck> run_published_suite(int threads) {
  Suite s(threads);

  s.check("pair(1,6): Y1 is 21 points", [&] {
    const PairDiamonds& p = s.pair(1, 6);
    if (p.invariants.d1 != 0) return std::string("Y1 is not zero-dimensional");
    const BigInt pts = point_count(p.y1);
    return pts == 21 ? std::string() : "point count " + to_string(pts);
  });
  s.check("pair(1,6): Y2 diamond", [&] {
    return diff(s.pair(1, 6).h2, {6, {0, 0, 0, 22, 0, 0, 0}, {1, 1, 2}});
  });
  s.check("pair(2,6): Y1 diamond", [&] {
    return diff(s.pair(2, 6).h1, {4, {15, 672, 2271, 672, 15}, {1, 1}});
  });
  s.check("pair(2,6): Y2 diamond", [&] {
    return diff(s.pair(2, 6).h2, {6, {0, 15, 672, 2272, 672, 15, 0}, {1, 1, 2}});
  });
  const Expected cy{8, {1, 735, 41161, 395626, 825751, 395626, 41161, 735, 1},
                    {1, 1, 2, 3}};
  s.check("pair(3,7): Y1 diamond", [&] { return diff(s.pair(3, 7).h1, cy); });
  s.check("pair(3,7): Y2 diamond", [&] { return diff(s.pair(3, 7).h2, cy); });

  for (auto [k, n] : std::vector<std::pair<int, int>>{
           {1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 7}}) {
    s.check("pair(" + std::to_string(k) + "," + std::to_string(n) +
                "): middle v-cohomology and co-level",
            [&, k = k, n = n] {
              const PairTheoremReport r = check_pair_theorem(s.pair(k, n));
              std::string out;
              for (const auto& f : r.failures) out += (out.empty() ? "" : "; ") + f;
              return out;
            });
  }
  s.check("pair(1,6): v-cohomology has dimension 20 on both sides", [&] {
    const PairTheoremReport r = check_pair_theorem(s.pair(1, 6));
    return r.v_dim1 == 20 && r.v_dim2 == 20
               ? std::string()
               : to_string(r.v_dim1) + " vs " + to_string(r.v_dim2);
  });
  s.check("pair(2,6): central v-cohomology 2271 - 2 = 2272 - 3", [&] {
    const PairTheoremReport r = check_pair_theorem(s.pair(2, 6));
    if (r.v1.size() != 5 || r.v2.size() != 7) return std::string("wrong middle rows");
    return r.v1[2] == 2269 && r.v2[3] == 2269
               ? std::string()
               : to_string(r.v1[2]) + " vs " + to_string(r.v2[3]);
  });

  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 6}, {2, 6}, {2, 5}, {3, 7}}) {
    s.check("E-polynomial identity at (" + std::to_string(k) + "," +
                std::to_string(n) + ")",
            [&, k = k, n = n] {
              const PairDiamonds& p = s.pair(k, n);
              const LeqCheck c = verify_lemma_leq(k, n, p.h1, p.h2);
              return c.pass ? std::string() : "residual " + c.residual.str();
            });
  }

  s.check("b2(Y2) = 1 wherever defined, n <= 8", [] {
    std::string out;
    for (int k = 1; 2 * k + 1 <= 8; ++k) {
      for (int n = 2 * k + 1; n <= 8; ++n) {
        if ((k + 1) * (n - k - 2) <= 2) continue;
        const long long b = derive_b2(k, n);
        if (b != 1) {
          out += "(" + std::to_string(k) + "," + std::to_string(n) + ")=" +
                 std::to_string(b) + " ";
        }
      }
    }
    return out;
  });
  s.check("b2 excluded case is (1,4)", [] {
    try {
      derive_b2(1, 4);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ExcludedCase) return std::string();
      throw;
    }
    return std::string("no error at (1,4)");
  });

  s.check("classification: F4 {2,3} and G2 {1,2} once, no E types", [] {
    const auto records = classify(8);
    int f4 = 0, g2 = 0;
    std::string out;
    for (const auto& r : records) {
      if (r.group_type == "F4") {
        if (r.marking == std::make_pair(2, 3)) ++f4; else out += "extra F4 ";
      }
      if (r.group_type == "G2") {
        if (r.marking == std::make_pair(1, 2)) ++g2; else out += "extra G2 ";
      }
      if (r.group_type.front() == 'E') out += "unexpected " + r.group_type + " ";
    }
    if (f4 != 1) out += "F4 count " + std::to_string(f4) + " ";
    if (g2 != 1) out += "G2 count " + std::to_string(g2) + " ";
    return out;
  });
  s.check("classification: every table family occurs", [] {
    const auto records = classify(8);
    std::string out;
    for (const char* prefix : {"A_{n-1}xA_{m-1}", "A^M_{n-1}", "A^G_{k,n-1}",
                               "B_{(n-1)/2}", "C_{k,n/2-1}", "D_n", "F_4", "G_2"}) {
      const bool found = std::any_of(records.begin(), records.end(), [&](const auto& r) {
        return r.table_row.rfind(prefix, 0) == 0;
      });
      if (!found) out += std::string("missing ") + prefix + " ";
    }
    return out;
  });

  s.check("Kapranov collection on G(2,5)", [] {
    const std::set<DoubleWeight> want = {
        dw({2, 2}, {0, 0, 0}), dw({2, 2}, {1, 0, 0}), dw({2, 2}, {2, 0, 0}),
        dw({2, 2}, {1, 1, 0}), dw({2, 2}, {2, 1, 0}), dw({2, 2}, {2, 2, 0}),
        dw({2, 2}, {1, 1, 1}), dw({2, 2}, {2, 1, 1}), dw({2, 2}, {2, 2, 1}),
        dw({2, 2}, {2, 2, 2})};
    const Collection c = kapranov_collection(2, 5);
    if (c.members.size() != want.size()) return std::string("size mismatch");
    return as_set(c) == want ? std::string() : std::string("members differ");
  });
  s.check("bar-moved Kapranov collection on G(3,5)", [] {
    const std::set<DoubleWeight> want = {
        dw({2, 2, 0}, {0, 0}), dw({2, 2, 1}, {0, 0}), dw({2, 2, 2}, {0, 0}),
        dw({2, 2, 1}, {1, 0}), dw({2, 2, 2}, {1, 0}), dw({2, 2, 2}, {2, 0}),
        dw({2, 2, 1}, {1, 1}), dw({2, 2, 2}, {1, 1}), dw({2, 2, 2}, {2, 1}),
        dw({2, 2, 2}, {2, 2})};
    const Collection c = bar_moved_collection(kapranov_collection(2, 5));
    return as_set(c) == want ? std::string() : std::string("members differ");
  });

  s.check("U (x) U^vee on G(2,6) has only H^0 = C", [] {
    const Ambient g{2, 6};
    const CohomologyTable t =
        bundle_cohomology(tensor(BundleExpr::U(g), BundleExpr::Udual(g)));
    const auto dims = t.dimensions();
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (dims[i] != (i == 0 ? 1 : 0)) return "h^" + std::to_string(i) + " = " + to_string(dims[i]);
    }
    return std::string();
  });
  s.check("ambient: h^4 G(2,6) = 2, h^6 G(3,6) = 3, h^0 P^5 = 1", [] {
    std::string out;
    if (ambient_diamond(2, 6).value(2, 2) != 2) out += "G(2,6) ";
    if (ambient_diamond(3, 6).value(3, 3) != 3) out += "G(3,6) ";
    if (ambient_diamond(1, 6).value(0, 0) != 1) out += "P^5 ";
    return out;
  });

  for (int n = 4; n <= 8; ++n) {
    s.check("partially tilting, minus side, n=" + std::to_string(n), [&, n] {
      const VanishingReport r = check_tilting_minus(n, 8, 1, s.threads());
      return r.pass() ? std::string()
                      : std::to_string(r.failures.size()) + " failures, " +
                            std::to_string(r.twist_discrepancies.size()) +
                            " twist discrepancies";
    });
    s.check("partially tilting, plus side, n=" + std::to_string(n), [&, n] {
      const VanishingReport r = check_tilting_plus(n, 8, s.threads());
      return r.pass() ? std::string()
                      : std::to_string(r.failures.size()) + " failures";
    });
  }

  return s.take();
}

}  // namespace roofcalc::cli
