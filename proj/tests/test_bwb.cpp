#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "roofcalc/bundles.hpp"
#include "roofcalc/bwb.hpp"

using namespace roofcalc;

namespace {

Weight sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return Weight(std::move(v));
}

DoubleWeight random_weight(std::mt19937& rng, int k, int n) {
  std::uniform_int_distribution<int> entry(-4, 4);
  std::vector<int> a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(n - k));
  for (int& x : a) x = entry(rng);
  for (int& x : b) x = entry(rng);
  return DoubleWeight(sorted_desc(a), sorted_desc(b));
}

long long ssyt_dimension(const Weight& mu) {
  const Weight shifted = mu.shifted(-mu.last());
  return oracle::ssyt_count(shifted.vec(), mu.rank());
}

}  // namespace

TEST(Bott, LineBundleOnProjectiveSpace) {
  const BottResult r = bott(DoubleWeight({1}, {0, 0, 0, 0}));
  ASSERT_FALSE(r.acyclic());
  EXPECT_EQ(r.cohomology->degree, 0);
  EXPECT_EQ(r.cohomology->gl_weight, (Weight{1, 0, 0, 0, 0}));
  EXPECT_EQ(r.cohomology->dimension, 5);
}

TEST(Bott, RepeatedEntryIsAcyclic) {
  EXPECT_TRUE(bott(DoubleWeight({0}, {1, 0, 0, 0})).acyclic());
}

TEST(Bott, CanonicalBundleOfG25) {
  // O(-5) = omega; H^6 is one-dimensional.
  const BottResult r = bott(DoubleWeight({-5, -5}, {0, 0, 0}));
  ASSERT_FALSE(r.acyclic());
  EXPECT_EQ(r.cohomology->degree, 6);
  EXPECT_EQ(r.cohomology->gl_weight, Weight::constant(5, -2));
  EXPECT_EQ(r.cohomology->dimension, 1);
}

TEST(Bott, GlDimension) {
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    v[0] = 1;
    EXPECT_EQ(gl_dimension(Weight(v)), n);
  }
  EXPECT_EQ(gl_dimension(Weight{1, 1, 0, 0, 0}), 10);
  EXPECT_EQ(gl_dimension(Weight{2, 2, 0, 0, 0}), 50);
}

// Weyl's formula against counting tableaux, |mu| <= 8, n <= 6.
TEST(Bott, WeylDimensionMatchesSsytCount) {
  for (int n = 1; n <= 6; ++n) {
    for (int size = 0; size <= 8; ++size) {
      for (const auto& mu : enumerate_box(n, size).members) {
        if (mu.total() != size) continue;
        EXPECT_EQ(gl_dimension(mu), oracle::ssyt_count(mu.vec(), n)) << mu.str();
      }
    }
  }
}

TEST(Bott, DimensionInvariantUnderDeterminantTwist) {
  EXPECT_EQ(gl_dimension(Weight{2, 1, 0}), gl_dimension(Weight{-1, -2, -3}));
}

TEST(Bott, BundleCohomologyTrivial) {
  const CohomologyTable t = bundle_cohomology(BundleExpr::trivial(Ambient{2, 5}));
  EXPECT_TRUE(t.concentrated_in_degree_zero());
  EXPECT_EQ(t.dimension(0), 1);
  ASSERT_EQ(t.weights.at(0).size(), 1u);
  EXPECT_EQ(t.weights.at(0).begin()->first, Weight::zero(5));
}

TEST(Bott, TautologicalIsExceptional) {
  for (int n = 4; n <= 8; ++n) {
    const Ambient g{2, n};
    const CohomologyTable t = bundle_cohomology(tensor(BundleExpr::U(g), BundleExpr::Udual(g)));
    const auto dims = t.dimensions();
    EXPECT_EQ(dims[0], 1) << n;
    for (std::size_t i = 1; i < dims.size(); ++i) EXPECT_EQ(dims[i], 0) << n << " h^" << i;
  }
}

TEST(Bott, CotangentOfG25) {
  const auto dims = cohomology_dimensions(cotangent_power(2, 5, 1));
  for (std::size_t i = 0; i < dims.size(); ++i) EXPECT_EQ(dims[i], i == 1 ? 1 : 0) << i;
}

// sum_t (-1)^t chi(Omega^t) is the topological Euler characteristic C(n,k).
TEST(Bott, AlternatingEulerOfOmegaIsBinomial) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      BigInt total = 0;
      for (int t = 0; t <= k * (n - k); ++t) {
        const BigInt chi = bundle_cohomology(cotangent_power(k, n, t)).euler_characteristic();
        total += (t % 2 == 0) ? chi : BigInt(-chi);
      }
      EXPECT_EQ(total, binomial(n, k)) << k << "," << n;
    }
  }
}

// H^i(E) = H^{d-i}(E^vee (x) omega)^vee with omega = O(-n); the GL(n)
// weights agree up to a determinant twist.
TEST(Bott, SerreDualityOnRandomWeights) {
  std::mt19937 rng(20261015);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> pick_n(2, 7);
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_k(1, n - 1);
    const int k = pick_k(rng);
    const DoubleWeight w = random_weight(rng, k, n);
    const BottResult a = bott(w);
    const BottResult b = bott(w.dual().twisted(-n));
    ASSERT_EQ(a.acyclic(), b.acyclic()) << w.str();
    ++checked;
    if (a.acyclic()) continue;
    EXPECT_EQ(a.cohomology->degree + b.cohomology->degree, k * (n - k)) << w.str();
    EXPECT_EQ(a.cohomology->dimension, b.cohomology->dimension) << w.str();
    const Weight dual = a.cohomology->gl_weight.dual();
    const Weight& other = b.cohomology->gl_weight;
    std::vector<int> diff(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) diff[static_cast<std::size_t>(i)] = other[static_cast<std::size_t>(i)] - dual[static_cast<std::size_t>(i)];
    EXPECT_TRUE(Weight(diff).is_constant()) << w.str();
  }
  EXPECT_EQ(checked, 200);
}

TEST(Bott, ResultDimensionMatchesSsytCount) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const int k = 1 + trial % (n - 1);
    const BottResult r = bott(random_weight(rng, k, n));
    if (r.acyclic()) continue;
    EXPECT_EQ(r.cohomology->dimension, ssyt_dimension(r.cohomology->gl_weight));
  }
}

TEST(Bott, DominantLandsInDegreeZero) {
  for (const auto& lower : enumerate_box(3, 2).members) {
    const DoubleWeight w({2, 2}, lower);
    const BottResult r = bott(w);
    ASSERT_FALSE(r.acyclic());
    EXPECT_EQ(r.cohomology->degree, 0);
    EXPECT_EQ(r.cohomology->gl_weight, Weight(w.concatenated()));
  }
}
