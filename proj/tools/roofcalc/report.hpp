#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "roofcalc/bwb.hpp"
#include "roofcalc/hodge.hpp"
#include "roofcalc/lr.hpp"
#include "roofcalc/motive.hpp"
#include "roofcalc/roofs.hpp"
#include "roofcalc/windows.hpp"

namespace roofcalc::cli {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

const char* tool_version();

json to_json(const BigInt& v);
json to_json(const Weight& w);
json to_json(const DoubleWeight& w);
json to_json(const BottResult& r);
json to_json(const CohomologyTable& t);
json to_json(const SchurSum& s);
json to_json(const BundleExpr& e);
/// Dense row-major h[p][q] (lower bounds), hi, the exact mask and the
/// provenance of every entry.
json to_json(const HodgeDiamond& h);
json to_json(const PairInvariants& inv);
json to_json(const PairTheoremReport& r);
json to_json(const LeqCheck& c);
json to_json(const RoofRecord& r);
json to_json(const VanishingReport& r);
json to_json(const Collection& c);

/// The envelope every command emits.
json run_report(const std::string& command, json inputs, json outputs,
                double seconds, bool exact);

/// Hodge diamond as a centred triangle, one row per p + q.
std::string render_diamond(const HodgeDiamond& h);
std::string render_roof_table(const std::vector<RoofRecord>& records);

}  // namespace roofcalc::cli
