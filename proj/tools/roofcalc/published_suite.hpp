#pragma once

#include <string>
#include <vector>

namespace roofcalc::cli {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The published numbers, recomputed. Output order is fixed and does not
/// depend on the thread count.
std::vector<SuiteCheck> run_published_suite(int threads);

}  // namespace roofcalc::cli
