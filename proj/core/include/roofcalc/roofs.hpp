#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace roofcalc {

struct DynkinFactor {
  char type = 'A';  // A..G; E is split by rank
  int rank = 1;

  std::string str() const;  // "A5", "E6", "G2"
};

/// Dynkin diagram (simple or a product of simple factors) with Bourbaki
/// node numbering per factor and global node ids 1..N, plus a marked subset.
/// Subdiagrams produced by erasure keep the original ids.
class MarkedDynkin {
 public:
  static MarkedDynkin simple(char type, int rank);
  static MarkedDynkin product(const MarkedDynkin& a, const MarkedDynkin& b);

  const std::vector<DynkinFactor>& factors() const noexcept { return factors_; }
  const std::set<int>& nodes() const noexcept { return nodes_; }
  const std::set<int>& marked() const noexcept { return marked_; }
  void set_marked(std::set<int> marked);

  /// Bond multiplicity between two nodes (0 when not adjacent).
  int bond(int a, int b) const;
  bool is_long(int node) const;
  std::vector<int> neighbours(int node) const;

  /// (factor index, Bourbaki index inside the factor).
  std::pair<int, int> local(int node) const;

  std::string name() const;  // "A5", "A2xA3"
  std::string str() const;   // name plus marking, e.g. "A5{2,3}"

 private:
  friend MarkedDynkin erase_and_component(const MarkedDynkin&,
                                          const std::set<int>&,
                                          const std::set<int>&);

  std::vector<DynkinFactor> factors_;
  std::vector<int> offsets_;
  std::set<int> nodes_;
  std::set<int> marked_;
  std::map<std::pair<int, int>, int> bonds_;
  std::set<int> short_nodes_;
};

/// Connected component of d minus `erased` containing `keep`, marked by
/// `keep`. Throws MalformedContraction when `keep` straddles components.
MarkedDynkin erase_and_component(const MarkedDynkin& d,
                                 const std::set<int>& erased,
                                 const std::set<int>& keep);

/// Some(r) when the single-marked diagram is P^r: a simply laced chain
/// marked at an end (P^r) or a C-chain marked at its short end (P^{2r-1}).
std::optional<int> is_projective_space_fiber(const MarkedDynkin& d);

struct RoofRecord {
  std::string group_type;
  std::string roof_label;
  std::string base1;
  std::string base2;
  int rank1 = 0;
  int rank2 = 0;
  bool is_equal_rank_roof = false;
  std::pair<int, int> marking;
  /// Table row template, empty for criterion-valid cases the table omits.
  std::string table_row;
  std::string note;
};

/// All 2-markings of simple diagrams of rank <= max_rank and cross
/// markings of A_a x A_b (a <= b, a + b <= max_rank) whose two contractions
/// both have projective-space fibers.
std::vector<RoofRecord> classify(int max_rank);

}  // namespace roofcalc
