#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "roofcalc/errors.hpp"
#include "roofcalc/weights.hpp"

using namespace roofcalc;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no roofcalc::Error thrown";
  return ErrorKind::Mismatch;
}

}  // namespace

TEST(Weights, BoxFourByOne) {
  const BoxSet box = enumerate_box(4, 1);
  ASSERT_EQ(box.members.size(), 5u);
  EXPECT_EQ(box.members.front(), (Weight{1, 1, 1, 1}));
  EXPECT_EQ(box.members.back(), (Weight{0, 0, 0, 0}));
}

TEST(Weights, BoxThreeByTwoIsKapranovLowerBlocks) {
  const BoxSet box = enumerate_box(3, 2);
  const std::set<Weight> got(box.members.begin(), box.members.end());
  const std::set<Weight> want = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {1, 1, 0}, {2, 1, 0},
                                 {2, 2, 0}, {1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2}};
  EXPECT_EQ(got, want);
}

TEST(Weights, BoxCountMatchesBruteForce) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      // Brute force over all (b+1)^a tuples, keep the non-increasing ones.
      std::size_t count = 0;
      std::vector<int> t(static_cast<std::size_t>(a), 0);
      std::function<void(int)> rec = [&](int i) {
        if (i == a) {
          count += std::is_sorted(t.begin(), t.end(), std::greater<>()) ? 1 : 0;
          return;
        }
        for (int v = 0; v <= b; ++v) {
          t[static_cast<std::size_t>(i)] = v;
          rec(i + 1);
        }
      };
      rec(0);
      EXPECT_EQ(enumerate_box(a, b).members.size(), count) << a << "x" << b;
    }
  }
  EXPECT_EQ(enumerate_box(2, 3).members.size(), 10u);
}

TEST(Weights, BoxRejectsZeroRows) {
  EXPECT_EQ(kind_of([] { enumerate_box(0, 1); }), ErrorKind::InvalidRank);
}

TEST(Weights, BarMove) {
  EXPECT_EQ(bar_move(DoubleWeight({1}, {1, 0, 0, 0})), DoubleWeight({1, 1}, {0, 0, 0}));
  EXPECT_EQ(bar_move(DoubleWeight({1}, {0, 0, 0, 0})), DoubleWeight({1, 0}, {0, 0, 0}));
  EXPECT_EQ(bar_move(DoubleWeight({0}, {0, 0, 0})), DoubleWeight({0, 0}, {0, 0}));
}

TEST(Weights, BarMoveErrors) {
  EXPECT_EQ(kind_of([] { bar_move(DoubleWeight({0, 0}, {1, 0, 0})); }),
            ErrorKind::NotGloballyGenerated);
  EXPECT_EQ(kind_of([] { bar_move(DoubleWeight({1, 1}, {0})); }), ErrorKind::InvalidRank);
}

TEST(Weights, DualSchurExamples) {
  const DualSchur a = dual_schur_q(Weight{1, 1, 0});
  EXPECT_EQ(a.bar, (Weight{1, 0, 0}));
  EXPECT_EQ(a.twist, 1);
  const DualSchur b = dual_schur_q(Weight{0, 0, 0});
  EXPECT_EQ(b.bar, (Weight{0, 0, 0}));
  EXPECT_EQ(b.twist, 0);
  const DualSchur c = dual_schur_q(Weight{2, 1, 1});
  EXPECT_EQ(c.bar, (Weight{1, 1, 0}));
  EXPECT_EQ(c.twist, 2);
}

// S_lambda (x) S_bar contains det^{lambda_1} exactly once, which pins bar down
// as the dual up to that twist.
TEST(Weights, DualSchurPairsToDeterminant) {
  for (const auto& lambda : enumerate_box(3, 3).members) {
    const DualSchur d = dual_schur_q(lambda);
    const auto prod = oracle::lr_oracle(lambda.vec(), d.bar.vec(), 3);
    const std::vector<int> det(3, d.twist);
    ASSERT_TRUE(prod.count(det)) << lambda.str();
    EXPECT_EQ(prod.at(det), 1) << lambda.str();
    long long constant_terms = 0;
    for (const auto& [w, c] : prod) {
      if (w.front() == w.back()) constant_terms += c;
    }
    EXPECT_EQ(constant_terms, 1) << lambda.str();
  }
}

TEST(Weights, RenderDiagram) {
  EXPECT_EQ(render_diagram(DoubleWeight({3, 2, 2, 1}, {2, 0})),
            "[][][]\n[][]\n[][]\n[]\n------\n[][]\n\n");
  EXPECT_EQ(render_diagram(DoubleWeight({0}, {0})), "(empty)\n");
  EXPECT_EQ(render_diagram(DoubleWeight({1, 1}, {0, 0, 0})), "[]\n[]\n--\n\n\n\n");
}

TEST(Weights, RenderNegativeFallsBack) {
  const DoubleWeight w({0, -1}, {0});
  EXPECT_EQ(kind_of([&] { render_diagram(w); }), ErrorKind::UnsupportedRender);
  EXPECT_EQ(render_or_numeric(w), "(0,-1|0)\n");
}

TEST(Weights, InvalidDoubleWeight) {
  EXPECT_EQ(kind_of([] { DoubleWeight({0, 1}, {0}); }), ErrorKind::InvalidWeight);
  EXPECT_EQ(kind_of([] { Weight(std::vector<int>{}); }), ErrorKind::InvalidRank);
}

TEST(Weights, DualAndTwist) {
  const DoubleWeight w({2, 1}, {3, 0, -1});
  EXPECT_EQ(w.dual(), DoubleWeight({-1, -2}, {1, 0, -3}));
  EXPECT_EQ(w.dual().dual(), w);
  EXPECT_EQ(w.twisted(3), DoubleWeight({5, 4}, {3, 0, -1}));
  EXPECT_EQ(w.str(), "(2,1|3,0,-1)");
}
