#include "roofcalc/parallel.hpp"

namespace roofcalc {

namespace {

std::atomic<int>& configured() {
  static std::atomic<int> threads{0};
  return threads;
}

}  // namespace

int default_threads() {
  const int t = configured().load();
  if (t > 0) return t;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_default_threads(int threads) { configured().store(std::max(0, threads)); }

}  // namespace roofcalc
