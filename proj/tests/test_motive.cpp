#include <gtest/gtest.h>

#include "oracles.hpp"
#include "roofcalc/errors.hpp"
#include "roofcalc/motive.hpp"

using namespace roofcalc;

TEST(Motive, ProjectiveLine) {
  EXPECT_EQ(epoly_projective(1), EPoly::one() + EPoly::lefschetz());
}

TEST(Motive, GrassmannianMatchesCells) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const EPoly e = epoly_grassmannian(k, n);
      const auto cells = oracle::grassmannian_cells(k, n);
      for (std::size_t p = 0; p < cells.size(); ++p) {
        EXPECT_EQ(e.coeff(static_cast<int>(p), static_cast<int>(p)), cells[p]);
      }
      EXPECT_EQ(e.euler_characteristic(), binomial(n, k));
    }
  }
  const EPoly g25 = epoly_grassmannian(2, 5);
  const std::vector<int> want = {1, 1, 2, 2, 2, 1, 1};
  for (std::size_t p = 0; p < want.size(); ++p) {
    EXPECT_EQ(g25.coeff(static_cast<int>(p), static_cast<int>(p)), want[p]);
  }
}

TEST(Motive, FlagEulerCharacteristic) {
  // F(k, k+1, n) has n! / (k! 1! (n-k-1)!) torus fixed points.
  for (int n = 3; n <= 8; ++n) {
    for (int k = 1; k + 1 < n; ++k) {
      EXPECT_EQ(epoly_flag(k, n).euler_characteristic(), binomial(n, k + 1) * (k + 1));
    }
  }
}

TEST(Motive, Arithmetic) {
  const EPoly a = EPoly::monomial(1, 0, 2) + EPoly::one();
  EXPECT_EQ(a - a, EPoly());
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a * EPoly::one(), a);
  EXPECT_EQ(a.times_lefschetz(2), a * EPoly::lefschetz() * EPoly::lefschetz());
  EXPECT_EQ(a.swapped().coeff(0, 1), 2);
}

TEST(Motive, LeqIdentityHoldsOnComputedPairs) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 6}, {2, 6}, {2, 5}, {3, 7}, {1, 5}}) {
    const PairDiamonds p = compute_pair(k, n);
    const LeqCheck c = verify_lemma_leq(k, n, p.h1, p.h2);
    EXPECT_TRUE(c.pass) << k << "," << n << ": " << c.residual.str();
    EXPECT_TRUE(c.residual.is_zero());
  }
}

TEST(Motive, LeqNegativeControl) {
  const LeqCheck c = verify_lemma_leq(1, 6, HodgeDiamond(), HodgeDiamond());
  EXPECT_FALSE(c.pass);
  EXPECT_FALSE(c.residual.is_zero());
}

TEST(Motive, InexactDiamondIsAmbiguous) {
  HodgeDiamond h(1);
  h.at(1, 0) = HodgeEntry{0, 2, Provenance::Chase};
  try {
    epoly_of_diamond(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Ambiguity);
  }
}

TEST(Motive, DeriveB2) {
  EXPECT_EQ(derive_b2(1, 6), 1);
  EXPECT_EQ(derive_b2(2, 6), 1);
  try {
    derive_b2(1, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExcludedCase);
  }
}
