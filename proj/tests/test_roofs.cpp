#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "report.hpp"
#include "roofcalc/errors.hpp"
#include "roofcalc/roofs.hpp"

using namespace roofcalc;

namespace {

MarkedDynkin marked(char type, int rank, std::set<int> marks) {
  MarkedDynkin d = MarkedDynkin::simple(type, rank);
  d.set_marked(std::move(marks));
  return d;
}

}  // namespace

TEST(Roofs, EraseAndComponent) {
  const MarkedDynkin a4 = marked('A', 4, {1, 2});
  const MarkedDynkin x = erase_and_component(a4, {2}, {1});
  EXPECT_EQ(x.nodes(), (std::set<int>{1}));
  EXPECT_EQ(x.marked(), (std::set<int>{1}));
  EXPECT_EQ(is_projective_space_fiber(x), 1);

  const MarkedDynkin y = erase_and_component(a4, {1}, {2});
  EXPECT_EQ(y.nodes(), (std::set<int>{2, 3, 4}));
  EXPECT_EQ(y.marked(), (std::set<int>{2}));
  EXPECT_EQ(is_projective_space_fiber(y), 3);

  const MarkedDynkin same = erase_and_component(a4, {}, {1, 2});
  EXPECT_EQ(same.nodes(), a4.nodes());
  EXPECT_EQ(same.marked(), a4.marked());
}

TEST(Roofs, EraseStraddlingComponents) {
  const MarkedDynkin a4 = marked('A', 4, {1, 3});
  try {
    erase_and_component(a4, {2}, {1, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedContraction);
  }
}

TEST(Roofs, ProjectiveSpaceFibers) {
  EXPECT_EQ(is_projective_space_fiber(marked('A', 3, {1})), 3);
  EXPECT_EQ(is_projective_space_fiber(marked('A', 3, {3})), 3);
  EXPECT_FALSE(is_projective_space_fiber(marked('A', 3, {2})).has_value());
  EXPECT_EQ(is_projective_space_fiber(marked('C', 2, {1})), 3);
  EXPECT_EQ(is_projective_space_fiber(marked('C', 3, {1})), 5);
  EXPECT_FALSE(is_projective_space_fiber(marked('C', 3, {3})).has_value());
  for (int node = 1; node <= 4; ++node) {
    EXPECT_FALSE(is_projective_space_fiber(marked('D', 4, {node})).has_value()) << node;
  }
  EXPECT_EQ(is_projective_space_fiber(marked('A', 1, {1})), 1);
}

TEST(Roofs, BondsFollowBourbaki) {
  const MarkedDynkin f4 = MarkedDynkin::simple('F', 4);
  EXPECT_EQ(f4.bond(2, 3), 2);
  EXPECT_TRUE(f4.is_long(1));
  EXPECT_FALSE(f4.is_long(4));
  const MarkedDynkin e6 = MarkedDynkin::simple('E', 6);
  EXPECT_EQ(e6.bond(2, 4), 1);
  EXPECT_EQ(e6.bond(1, 3), 1);
  EXPECT_EQ(e6.bond(1, 2), 0);
  const MarkedDynkin g2 = MarkedDynkin::simple('G', 2);
  EXPECT_EQ(g2.bond(1, 2), 3);
  EXPECT_FALSE(g2.is_long(1));
}

TEST(Roofs, TypeAFlagRecords) {
  const auto records = classify(5);
  for (int k = 1; k <= 4; ++k) {
    const auto it = std::find_if(records.begin(), records.end(), [&](const RoofRecord& r) {
      return r.group_type == "A5" && r.marking == std::make_pair(k, k + 1);
    });
    ASSERT_NE(it, records.end()) << k;
    EXPECT_EQ(it->base1, "G(" + std::to_string(k) + ",6)");
    EXPECT_EQ(it->base2, "G(" + std::to_string(k + 1) + ",6)");
    EXPECT_EQ(std::min(it->rank1, it->rank2), std::min(k, 5 - k));
    EXPECT_EQ(std::max(it->rank1, it->rank2), std::max(k, 5 - k));
    EXPECT_EQ(it->rank1 + it->rank2, 5);
  }
}

TEST(Roofs, ExceptionalRecords) {
  const auto records = classify(8);
  int g2 = 0;
  int f4 = 0;
  for (const auto& r : records) {
    ASSERT_NE(r.group_type.front(), 'E') << r.group_type;
    if (r.group_type == "G2") {
      ++g2;
      EXPECT_EQ(r.marking, std::make_pair(1, 2));
      EXPECT_EQ(r.rank1, 1);
      EXPECT_EQ(r.rank2, 1);
    }
    if (r.group_type == "F4") {
      ++f4;
      EXPECT_EQ(r.marking, std::make_pair(2, 3));
    }
  }
  EXPECT_EQ(g2, 1);
  EXPECT_EQ(f4, 1);
}

TEST(Roofs, RankTwoHasOnlyG2AmongExceptional) {
  const auto records = classify(2);
  for (const auto& r : records) {
    if (r.group_type.front() >= 'E') EXPECT_EQ(r.group_type, "G2");
  }
}

TEST(Roofs, EveryRecordPassesTheCriterion) {
  for (const auto& r : classify(8)) {
    EXPECT_EQ(r.is_equal_rank_roof, r.rank1 == r.rank2) << r.group_type;
    EXPECT_GE(r.rank1, 1);
    EXPECT_GE(r.rank2, 1);
  }
}

// Regenerate with ROOFCALC_UPDATE_GOLDEN=1.
TEST(Roofs, GoldenMaxRankEight) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : classify(8)) records.push_back(roofcalc::cli::to_json(r));
  const std::string path = std::string(ROOFCALC_GOLDEN_DIR) + "/roofs_max8.json";
  if (std::getenv("ROOFCALC_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path) << records.dump(2) << '\n';
  }
  std::ifstream in(path);
  ASSERT_TRUE(in) << path;
  const nlohmann::json golden = nlohmann::json::parse(in);
  EXPECT_EQ(records, golden);
}
