#include "roofcalc/roofs.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "roofcalc/errors.hpp"

namespace roofcalc {

namespace {

std::string fmt(const char* name, std::initializer_list<std::pair<const char*, int>> params) {
  std::ostringstream os;
  os << name << " (";
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) os << ",";
    first = false;
    os << key << "=" << value;
  }
  os << ")";
  return os.str();
}

// G/P for the maximal parabolic of one node.
std::string base_name(const MarkedDynkin& d, int node) {
  const auto [f, i] = d.local(node);
  const DynkinFactor& fac = d.factors()[f];
  if (fac.type == 'A') {
    return "G(" + std::to_string(i) + "," + std::to_string(fac.rank + 1) + ")";
  }
  return fac.str() + "/P" + std::to_string(i);
}

struct Label {
  std::string label;
  std::string row;
  std::string note;
};

Label label_simple(const DynkinFactor& f, int a, int b) {
  const int r = f.rank;
  switch (f.type) {
    case 'A':
      if (b == a + 1) {
        return {fmt("A^G_{k,n-1}", {{"k", a}, {"n", r + 1}}), "A^G_{k,n-1}", ""};
      }
      if (a == 1 && b == r) {
        return {fmt("A^M_{n-1}", {{"n", r + 1}}), "A^M_{n-1}", ""};
      }
      break;
    case 'B':
      if (a == r - 1 && b == r) {
        return {fmt("B_{(n-1)/2}", {{"n", 2 * r + 1}}), "B_{(n-1)/2}", ""};
      }
      break;
    case 'C':
      if (b == a + 1) {
        return {fmt("C_{k,n/2-1}", {{"k", b}, {"n", 2 * r}}), "C_{k,n/2-1}", ""};
      }
      break;
    case 'D':
      if (a == r - 1 && b == r) {
        return {fmt("D_n", {{"n", 2 * r}}), "D_n", ""};
      }
      if (r == 4 && a == 1 && (b == 3 || b == 4)) {
        return {fmt("D_n", {{"n", 8}}), "D_n", "triality image of the {3,4} marking"};
      }
      break;
    case 'F':
      if (a == 2 && b == 3) return {"F_4", "F_4", ""};
      break;
    case 'G':
      if (a == 1 && b == 2) return {"G_2", "G_2", ""};
      break;
    default:
      break;
  }
  return {f.str() + " {" + std::to_string(a) + "," + std::to_string(b) + "}", "",
          "passes the fiber criterion but is not a row of the table"};
}

}  // namespace

std::string DynkinFactor::str() const {
  return std::string(1, type) + std::to_string(rank);
}

MarkedDynkin MarkedDynkin::simple(char type, int r) {
  auto bad = [&] {
    return Error(ErrorKind::InvalidRank, "no Dynkin diagram " +
                                             std::string(1, type) +
                                             std::to_string(r));
  };
  switch (type) {
    case 'A': if (r < 1) throw bad(); break;
    case 'B': case 'C': if (r < 2) throw bad(); break;
    case 'D': if (r < 4) throw bad(); break;
    case 'E': if (r < 6 || r > 8) throw bad(); break;
    case 'F': if (r != 4) throw bad(); break;
    case 'G': if (r != 2) throw bad(); break;
    default: throw bad();
  }
  MarkedDynkin d;
  d.factors_ = {DynkinFactor{type, r}};
  d.offsets_ = {0};
  for (int i = 1; i <= r; ++i) d.nodes_.insert(i);
  auto edge = [&d](int a, int b, int m) {
    d.bonds_[{std::min(a, b), std::max(a, b)}] = m;
  };
  switch (type) {
    case 'A':
      for (int i = 1; i < r; ++i) edge(i, i + 1, 1);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i < r - 1; ++i) edge(i, i + 1, 1);
      edge(r - 1, r, 2);
      if (type == 'B') d.short_nodes_ = {r};
      else for (int i = 1; i < r; ++i) d.short_nodes_.insert(i);
      break;
    case 'D':
      for (int i = 1; i <= r - 2; ++i) edge(i, i + 1, 1);
      edge(r - 2, r, 1);
      break;
    case 'E':
      edge(1, 3, 1);
      edge(2, 4, 1);
      for (int i = 3; i < r; ++i) edge(i, i + 1, 1);
      break;
    case 'F':
      edge(1, 2, 1);
      edge(2, 3, 2);
      edge(3, 4, 1);
      d.short_nodes_ = {3, 4};
      break;
    case 'G':
      edge(1, 2, 3);
      d.short_nodes_ = {1};
      break;
  }
  return d;
}

MarkedDynkin MarkedDynkin::product(const MarkedDynkin& a, const MarkedDynkin& b) {
  MarkedDynkin d = a;
  const int shift = a.nodes_.empty() ? 0 : *a.nodes_.rbegin();
  for (std::size_t i = 0; i < b.factors_.size(); ++i) {
    d.factors_.push_back(b.factors_[i]);
    d.offsets_.push_back(b.offsets_[i] + shift);
  }
  for (int n : b.nodes_) d.nodes_.insert(n + shift);
  for (int n : b.marked_) d.marked_.insert(n + shift);
  for (int n : b.short_nodes_) d.short_nodes_.insert(n + shift);
  for (const auto& [e, m] : b.bonds_) {
    d.bonds_[{e.first + shift, e.second + shift}] = m;
  }
  return d;
}

void MarkedDynkin::set_marked(std::set<int> marked) {
  for (int m : marked) {
    if (!nodes_.count(m)) {
      throw Error(ErrorKind::Precondition,
                  "marked node " + std::to_string(m) + " not in " + name());
    }
  }
  marked_ = std::move(marked);
}

int MarkedDynkin::bond(int a, int b) const {
  auto it = bonds_.find({std::min(a, b), std::max(a, b)});
  return it == bonds_.end() ? 0 : it->second;
}

bool MarkedDynkin::is_long(int node) const { return !short_nodes_.count(node); }

std::vector<int> MarkedDynkin::neighbours(int node) const {
  std::vector<int> out;
  for (const auto& [e, m] : bonds_) {
    if (e.first == node) out.push_back(e.second);
    if (e.second == node) out.push_back(e.first);
  }
  return out;
}

std::pair<int, int> MarkedDynkin::local(int node) const {
  for (int f = static_cast<int>(factors_.size()) - 1; f >= 0; --f) {
    if (node > offsets_[f]) return {f, node - offsets_[f]};
  }
  throw Error(ErrorKind::Precondition, "node " + std::to_string(node));
}

std::string MarkedDynkin::name() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "x";
    out += f.str();
  }
  return out;
}

std::string MarkedDynkin::str() const {
  std::string out = name() + "{";
  bool first = true;
  for (int m : marked_) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(m);
  }
  return out + "}";
}

MarkedDynkin erase_and_component(const MarkedDynkin& d,
                                 const std::set<int>& erased,
                                 const std::set<int>& keep) {
  if (keep.empty()) {
    throw Error(ErrorKind::Precondition, "nothing to keep");
  }
  for (int k : keep) {
    if (erased.count(k) || !d.nodes().count(k)) {
      throw Error(ErrorKind::Precondition,
                  "kept node " + std::to_string(k) + " is erased or absent");
    }
  }
  std::set<int> component{*keep.begin()};
  std::deque<int> frontier{*keep.begin()};
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop_front();
    for (int w : d.neighbours(v)) {
      if (erased.count(w) || component.count(w)) continue;
      component.insert(w);
      frontier.push_back(w);
    }
  }
  for (int k : keep) {
    if (!component.count(k)) {
      throw Error(ErrorKind::MalformedContraction,
                  "kept nodes lie in different components of " + d.name());
    }
  }
  MarkedDynkin out;
  out.factors_ = d.factors_;
  out.offsets_ = d.offsets_;
  out.nodes_ = component;
  out.marked_ = keep;
  for (const auto& [e, m] : d.bonds_) {
    if (component.count(e.first) && component.count(e.second)) out.bonds_[e] = m;
  }
  for (int s : d.short_nodes_) {
    if (component.count(s)) out.short_nodes_.insert(s);
  }
  return out;
}

std::optional<int> is_projective_space_fiber(const MarkedDynkin& d) {
  if (d.marked().size() != 1) {
    throw Error(ErrorKind::Precondition,
                "fiber recognition needs exactly one marked node");
  }
  const int n = static_cast<int>(d.nodes().size());
  const int m = *d.marked().begin();
  if (n == 1) return 1;

  // Must be a chain marked at an end.
  std::vector<int> ends;
  int edges = 0;
  for (int v : d.nodes()) {
    const auto nb = d.neighbours(v);
    if (nb.size() > 2) return std::nullopt;
    if (nb.size() == 1) ends.push_back(v);
    edges += static_cast<int>(nb.size());
  }
  if (edges / 2 != n - 1 || ends.size() != 2) return std::nullopt;
  if (d.neighbours(m).size() != 1) return std::nullopt;

  std::vector<int> chain{m};
  while (static_cast<int>(chain.size()) < n) {
    for (int w : d.neighbours(chain.back())) {
      if (chain.size() < 2 || w != chain[chain.size() - 2]) {
        chain.push_back(w);
        break;
      }
    }
  }
  int multiple = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (d.bond(chain[i], chain[i + 1]) > 1) ++multiple;
  }
  if (multiple == 0) return n;
  // C-chain: the only multiple bond is a double bond at the far end, the
  // far end node is long and everything else short.
  if (multiple != 1 || d.bond(chain[n - 2], chain[n - 1]) != 2) {
    return std::nullopt;
  }
  if (!d.is_long(chain[n - 1])) return std::nullopt;
  for (int i = 0; i + 1 < n; ++i) {
    if (d.is_long(chain[i])) return std::nullopt;
  }
  return 2 * n - 1;
}

std::vector<RoofRecord> classify(int max_rank) {
  if (max_rank < 2) {
    throw Error(ErrorKind::Precondition, "classify needs max_rank >= 2");
  }
  std::vector<MarkedDynkin> simple;
  for (int r = 2; r <= max_rank; ++r) simple.push_back(MarkedDynkin::simple('A', r));
  for (int r = 2; r <= max_rank; ++r) simple.push_back(MarkedDynkin::simple('B', r));
  // C2 = B2, so C starts at rank 3.
  for (int r = 3; r <= max_rank; ++r) simple.push_back(MarkedDynkin::simple('C', r));
  for (int r = 4; r <= max_rank; ++r) simple.push_back(MarkedDynkin::simple('D', r));
  for (int r = 6; r <= std::min(8, max_rank); ++r) {
    simple.push_back(MarkedDynkin::simple('E', r));
  }
  if (max_rank >= 4) simple.push_back(MarkedDynkin::simple('F', 4));
  simple.push_back(MarkedDynkin::simple('G', 2));

  std::vector<RoofRecord> out;
  auto test = [&out](const MarkedDynkin& d, int a, int b, const Label& label) {
    const auto f1 = is_projective_space_fiber(erase_and_component(d, {a}, {b}));
    if (!f1) return;
    const auto f2 = is_projective_space_fiber(erase_and_component(d, {b}, {a}));
    if (!f2) return;
    RoofRecord rec;
    rec.group_type = d.name();
    rec.roof_label = label.label;
    rec.base1 = base_name(d, a);
    rec.base2 = base_name(d, b);
    rec.rank1 = *f1;
    rec.rank2 = *f2;
    rec.is_equal_rank_roof = *f1 == *f2;
    rec.marking = {a, b};
    rec.table_row = label.row;
    rec.note = label.note;
    out.push_back(std::move(rec));
  };

  for (const auto& d : simple) {
    const DynkinFactor& f = d.factors().front();
    for (int a = 1; a <= f.rank; ++a) {
      for (int b = a + 1; b <= f.rank; ++b) test(d, a, b, label_simple(f, a, b));
    }
  }
  for (int a = 1; a <= max_rank; ++a) {
    for (int b = a; a + b <= max_rank; ++b) {
      const MarkedDynkin d = MarkedDynkin::product(MarkedDynkin::simple('A', a),
                                                   MarkedDynkin::simple('A', b));
      const Label label{fmt("A_{n-1}xA_{m-1}", {{"n", a + 1}, {"m", b + 1}}),
                        "A_{n-1}xA_{m-1}", ""};
      for (int i = 1; i <= a; ++i) {
        for (int j = 1; j <= b; ++j) test(d, i, a + j, label);
      }
    }
  }
  return out;
}

}  // namespace roofcalc
