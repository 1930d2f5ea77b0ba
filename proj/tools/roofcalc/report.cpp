#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#ifndef ROOFCALC_VERSION
#define ROOFCALC_VERSION "0.0.0"
#endif

namespace roofcalc::cli {

const char* tool_version() { return ROOFCALC_VERSION; }

json to_json(const BigInt& v) { return to_string(v); }

json to_json(const Weight& w) { return w.vec(); }

json to_json(const DoubleWeight& w) {
  return {{"upper", w.upper().vec()}, {"lower", w.lower().vec()}, {"label", w.str()}};
}

json to_json(const BottResult& r) {
  if (r.acyclic()) return {{"acyclic", true}};
  return {{"acyclic", false},
          {"degree", r.cohomology->degree},
          {"glWeight", to_json(r.cohomology->gl_weight)},
          {"dimension", to_json(r.cohomology->dimension)}};
}

json to_json(const CohomologyTable& t) {
  json degrees = json::array();
  for (const auto& [deg, weights] : t.weights) {
    json ws = json::array();
    for (const auto& [w, m] : weights) {
      ws.push_back({{"weight", to_json(w)}, {"multiplicity", to_json(m)}});
    }
    degrees.push_back({{"degree", deg}, {"dimension", to_json(t.dimension(deg))},
                       {"weights", ws}});
  }
  return {{"maxDegree", t.max_degree}, {"degrees", degrees}};
}

json to_json(const SchurSum& s) {
  json terms = json::array();
  for (const auto& [w, m] : s.terms) {
    terms.push_back({{"weight", to_json(w)}, {"multiplicity", to_json(m)}});
  }
  return {{"rank", s.rank}, {"terms", terms}};
}

json to_json(const BundleExpr& e) {
  json terms = json::array();
  for (const auto& [w, m] : e.terms()) {
    terms.push_back({{"weight", to_json(w)}, {"multiplicity", to_json(m)}});
  }
  return {{"ambient", {{"k", e.ambient().k}, {"n", e.ambient().n}}},
          {"expression", e.str()},
          {"rank", to_json(e.rank())},
          {"terms", terms}};
}

json to_json(const HodgeDiamond& h) {
  json lo = json::array();
  json hi = json::array();
  json exact = json::array();
  json source = json::array();
  for (int p = 0; p <= h.dim; ++p) {
    json l = json::array(), u = json::array(), x = json::array(), s = json::array();
    for (int q = 0; q <= h.dim; ++q) {
      const HodgeEntry& e = h.grid[p][q];
      l.push_back(to_json(e.lo));
      u.push_back(to_json(e.hi));
      x.push_back(e.exact());
      s.push_back(to_string(e.source));
    }
    lo.push_back(l);
    hi.push_back(u);
    exact.push_back(x);
    source.push_back(s);
  }
  json euler = json::array();
  for (const auto& c : h.euler_columns) euler.push_back(to_json(c));
  return {{"dim", h.dim},
          {"h", lo},
          {"hi", hi},
          {"exact", exact},
          {"provenance", source},
          {"eulerColumns", euler},
          {"allExact", h.exact()},
          {"assumptions", h.assumptions}};
}

json to_json(const PairInvariants& inv) {
  return {{"k", inv.k},
          {"n", inv.n},
          {"d1", inv.d1},
          {"d2", inv.d2},
          {"canonicalTwist1", inv.canonical_twist_1},
          {"canonicalTwist2", inv.canonical_twist_2},
          {"cy", inv.cy}};
}

json to_json(const PairTheoremReport& r) {
  json v1 = json::array(), v2 = json::array();
  for (const auto& v : r.v1) v1.push_back(to_json(v));
  for (const auto& v : r.v2) v2.push_back(to_json(v));
  return {{"shift", r.shift},
          {"v1", v1},
          {"v2", v2},
          {"vDim1", to_json(r.v_dim1)},
          {"vDim2", to_json(r.v_dim2)},
          {"colevel", r.colevel},
          {"failures", r.failures},
          {"pass", r.pass()}};
}

json to_json(const LeqCheck& c) {
  return {{"residual", c.residual.str()}, {"pass", c.pass}};
}

json to_json(const RoofRecord& r) {
  return {{"groupType", r.group_type},
          {"roofLabel", r.roof_label},
          {"base1", r.base1},
          {"base2", r.base2},
          {"rank1", r.rank1},
          {"rank2", r.rank2},
          {"isEqualRankRoof", r.is_equal_rank_roof},
          {"marking", {r.marking.first, r.marking.second}},
          {"tableRow", r.table_row},
          {"note", r.note}};
}

json to_json(const VanishingReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"lambda", to_json(f.lambda)},
                        {"lambdaPrime", to_json(f.lambda_prime)},
                        {"m", f.m},
                        {"summand", to_json(f.summand)},
                        {"multiplicity", to_json(f.multiplicity)},
                        {"degree", f.degree},
                        {"glWeight", to_json(f.gl_weight)},
                        {"dimension", to_json(f.dimension)}});
  }
  return {{"side", to_string(r.side)},
          {"n", r.n},
          {"mMax", r.m_max},
          {"boxCap", r.box_cap},
          {"checkedPairs", r.checked_pairs},
          {"checkedTriples", r.checked_triples},
          {"checkedSummands", r.checked_summands},
          {"certifiedPairs", r.certified_pairs},
          {"failures", failures},
          {"twistDiscrepancies", r.twist_discrepancies},
          {"pass", r.pass()}};
}

json to_json(const Collection& c) {
  json members = json::array();
  for (const auto& w : c.members) members.push_back(to_json(w));
  return {{"ambient", {{"k", c.ambient.k}, {"n", c.ambient.n}}}, {"members", members}};
}

json run_report(const std::string& command, json inputs, json outputs,
                double seconds, bool exact) {
  return {{"schemaVersion", kSchemaVersion},
          {"tool", {{"name", "roofcalc"}, {"version", tool_version()}}},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"outputs", std::move(outputs)},
          {"timing", {{"seconds", seconds}}},
          {"exact", exact}};
}

std::string render_diamond(const HodgeDiamond& h) {
  if (h.dim < 0) return "(empty)\n";
  auto cell = [&h](int p, int q) {
    const HodgeEntry& e = h.grid[p][q];
    if (e.exact()) return to_string(e.lo);
    return "[" + to_string(e.lo) + "," + to_string(e.hi) + "]";
  };
  std::size_t width = 1;
  for (int p = 0; p <= h.dim; ++p) {
    for (int q = 0; q <= h.dim; ++q) width = std::max(width, cell(p, q).size());
  }
  const int d = h.dim;
  std::ostringstream os;
  for (int s = 0; s <= 2 * d; ++s) {
    const int count = std::min(s, 2 * d - s) + 1;
    os << std::string((d + 1 - count) * (width + 1) / 2 * 1, ' ');
    for (int p = std::min(s, d), i = 0; p >= std::max(0, s - d); --p, ++i) {
      if (i > 0) os << ' ';
      const std::string c = cell(p, s - p);
      os << std::string(width - c.size(), ' ') << c;
    }
    os << '\n';
  }
  return os.str();
}

std::string render_roof_table(const std::vector<RoofRecord>& records) {
  std::size_t w[5] = {5, 5, 5, 5, 5};
  for (const auto& r : records) {
    w[0] = std::max(w[0], r.group_type.size());
    w[1] = std::max(w[1], r.roof_label.size());
    w[2] = std::max(w[2], r.base1.size());
    w[3] = std::max(w[3], r.base2.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w[0])) << "group" << "  "
     << std::setw(static_cast<int>(w[1])) << "roof" << "  "
     << std::setw(static_cast<int>(w[2])) << "base1" << "  "
     << std::setw(static_cast<int>(w[3])) << "base2" << "  fibers  note\n";
  for (const auto& r : records) {
    os << std::setw(static_cast<int>(w[0])) << r.group_type << "  "
       << std::setw(static_cast<int>(w[1])) << r.roof_label << "  "
       << std::setw(static_cast<int>(w[2])) << r.base1 << "  "
       << std::setw(static_cast<int>(w[3])) << r.base2 << "  "
       << "P" << r.rank1 << ",P" << r.rank2;
    if (!r.note.empty()) os << "  " << r.note;
    os << '\n';
  }
  return os.str();
}

}  // namespace roofcalc::cli
