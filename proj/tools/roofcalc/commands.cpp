#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "parser.hpp"
#include "published_suite.hpp"
#include "report.hpp"
#include "roofcalc/parallel.hpp"

namespace roofcalc::cli {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
      return kParse;
    case ErrorKind::Ambiguity:
      return kAmbiguity;
    case ErrorKind::Mismatch:
    case ErrorKind::Inconsistent:
    case ErrorKind::InjectivityViolation:
      return kMismatch;
    case ErrorKind::InvalidRank:
    case ErrorKind::InvalidWeight:
    case ErrorKind::NotGloballyGenerated:
    case ErrorKind::IncompatibleRank:
    case ErrorKind::IncompatibleAmbient:
    case ErrorKind::PlethysmRequired:
    case ErrorKind::Precondition:
    case ErrorKind::ExcludedCase:
    case ErrorKind::MalformedContraction:
    case ErrorKind::UnsupportedRender:
      return kPrecondition;
  }
  return kPrecondition;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Result {
  std::string text;
  int code = kOk;
};

std::optional<int> threads_from_env() {
  const char* env = std::getenv("ROOFCALC_THREADS");
  if (env == nullptr || *env == '\0') return std::nullopt;
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(env).size() || value < 1) {
    throw Error(ErrorKind::Parse,
                std::string("ROOFCALC_THREADS must be a positive integer, got '") +
                    env + "'");
  }
  return value;
}

json ambient_json(int k, int n) { return {{"k", k}, {"n", n}}; }

Result cmd_bott(int k, int n, const std::string& weight) {
  const auto t0 = Clock::now();
  const DoubleWeight w = parse_double_weight(weight);
  if (w.k() != k || w.n() != n) {
    throw Error(ErrorKind::IncompatibleRank,
                "weight " + w.str() + " does not live on G(" + std::to_string(k) +
                    "," + std::to_string(n) + ")");
  }
  const BottResult r = bott(w);
  return {dump(run_report("bott", {{"ambient", ambient_json(k, n)}, {"weight", weight}},
                          to_json(r), seconds_since(t0), true))};
}

Result cmd_hodge(int k, int n, const std::string& bundle, bool diamond, bool raw,
                 int threads) {
  const auto t0 = Clock::now();
  const BundleExpr e = parse_bundle(bundle, Ambient{k, n});
  const ZeroLocusSpec spec = zero_locus(e);
  HodgeOptions opts;
  opts.refine = !raw;
  opts.threads = threads;
  const HodgeDiamond h = hodge_numbers(spec, opts);
  Result r;
  if (diamond) {
    r.text = render_diamond(h);
  } else {
    json outputs = {{"bundle", to_json(e)}, {"diamond", to_json(h)}};
    if (spec.dim == 0) outputs["pointCount"] = to_json(point_count(spec));
    r.text = dump(run_report("hodge",
                             {{"ambient", ambient_json(k, n)}, {"bundle", bundle},
                              {"refine", !raw}},
                             outputs, seconds_since(t0), h.exact()));
  }
  if (!h.exact()) r.code = kAmbiguity;
  return r;
}

Result cmd_pair(int k, int n, int threads) {
  const auto t0 = Clock::now();
  HodgeOptions opts;
  opts.threads = threads;
  const PairDiamonds p = compute_pair(k, n, opts);
  const PairTheoremReport theorem = check_pair_theorem(p);
  const LeqCheck leq = verify_lemma_leq(k, n, p.h1, p.h2);
  auto side = [](const ZeroLocusSpec& spec, const HodgeDiamond& h) {
    json j = {{"bundle", to_json(spec.bundle)}, {"dim", spec.dim}, {"diamond", to_json(h)}};
    if (spec.dim == 0) j["pointCount"] = to_json(point_count(spec));
    return j;
  };
  json outputs = {{"invariants", to_json(p.invariants)},
                  {"y1", side(p.y1, p.h1)},
                  {"y2", side(p.y2, p.h2)},
                  {"theorem", to_json(theorem)},
                  {"epolyIdentity", to_json(leq)}};
  const bool exact = p.h1.exact() && p.h2.exact();
  Result r{dump(run_report("pair", {{"k", k}, {"n", n}}, outputs, seconds_since(t0), exact))};
  if (!exact) {
    r.code = kAmbiguity;
  } else if (!theorem.pass() || !leq.pass) {
    r.code = kMismatch;
  }
  return r;
}

Result cmd_roofs(int max_rank, bool as_json) {
  const auto t0 = Clock::now();
  const auto records = classify(max_rank);
  if (!as_json) return {render_roof_table(records)};
  json rows = json::array();
  for (const auto& rec : records) rows.push_back(to_json(rec));
  return {dump(run_report("roofs", {{"maxRank", max_rank}}, {{"records", rows}},
                          seconds_since(t0), true))};
}

Result cmd_windows(int n, int m_max, const std::string& side, int box_cap,
                   int threads) {
  const auto t0 = Clock::now();
  json reports = json::array();
  bool pass = true;
  if (side == "minus" || side == "both") {
    const VanishingReport r = check_tilting_minus(n, m_max, box_cap, threads);
    pass = pass && r.pass();
    reports.push_back(to_json(r));
  }
  if (side == "plus" || side == "both") {
    const VanishingReport r = check_tilting_plus(n, m_max, threads);
    pass = pass && r.pass();
    reports.push_back(to_json(r));
  }
  Result r{dump(run_report("windows",
                           {{"n", n}, {"mMax", m_max}, {"side", side}, {"boxCap", box_cap}},
                           {{"reports", reports}, {"pass", pass}}, seconds_since(t0), true))};
  if (!pass) r.code = kMismatch;
  return r;
}

Result cmd_lr(int rank, const std::string& a, const std::string& b) {
  const auto t0 = Clock::now();
  const Weight wa(parse_int_list(a));
  const Weight wb(parse_int_list(b));
  if (wa.rank() != rank || wb.rank() != rank) {
    throw Error(ErrorKind::IncompatibleRank,
                "both weights need " + std::to_string(rank) + " entries");
  }
  const SchurSum s = lr_product(wa, wb, rank);
  return {dump(run_report("lr", {{"rank", rank}, {"a", to_json(wa)}, {"b", to_json(wb)}},
                          to_json(s), seconds_since(t0), true))};
}

Result cmd_verify(const std::string& suite, bool as_json, int threads) {
  if (suite != "paper") {
    throw Error(ErrorKind::Precondition, "unknown suite '" + suite + "'");
  }
  const auto t0 = Clock::now();
  const auto checks = run_published_suite(threads);
  bool pass = true;
  for (const auto& c : checks) pass = pass && c.pass;
  Result r;
  if (as_json) {
    json rows = json::array();
    for (const auto& c : checks) {
      rows.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    // Timing is left out so the output is byte-stable.
    json rep = run_report("verify", {{"suite", suite}}, {{"checks", rows}, {"pass", pass}},
                          0.0, true);
    rep.erase("timing");
    r.text = dump(rep);
  } else {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.pass) os << ": " << c.detail;
      os << '\n';
    }
    os << (pass ? "all checks passed" : "some checks failed") << '\n';
    r.text = os.str();
  }
  (void)t0;
  if (!pass) r.code = kMismatch;
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Schur-functor, cohomology and Hodge-number calculator", "roofcalc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  std::string out_file;
  int k = 0, n = 0, rank = 0, max_rank = 0, m_max = 0, box_cap = 1;
  std::string weight, bundle, a, b, side = "both", suite;
  bool diamond = false, as_json = false, raw = false;

  auto with_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_file, "Write the output to FILE");
  };

  auto* bott_cmd = app.add_subcommand("bott", "Borel-Weil-Bott for one double weight");
  bott_cmd->add_option("--k", k)->required();
  bott_cmd->add_option("--n", n)->required();
  bott_cmd->add_option("--weight", weight, "e.g. \"1|0,0,0,0\"")->required();
  with_out(bott_cmd);

  auto* hodge_cmd = app.add_subcommand("hodge", "Hodge numbers of a zero locus");
  hodge_cmd->add_option("--k", k)->required();
  hodge_cmd->add_option("--n", n)->required();
  hodge_cmd->add_option("--bundle", bundle, "e.g. \"QD*O(2)\"")->required();
  auto* json_flag = hodge_cmd->add_flag("--json", as_json, "JSON report (default)");
  hodge_cmd->add_flag("--diamond", diamond, "Render the diamond as text")->excludes(json_flag);
  hodge_cmd->add_flag("--raw", raw, "Skip Lefschetz/symmetry/Euler refinement");
  with_out(hodge_cmd);

  auto* pair_cmd = app.add_subcommand("pair", "The zero-locus pair of F(k,k+1,n)");
  pair_cmd->add_option("--k", k)->required();
  pair_cmd->add_option("--n", n)->required();
  with_out(pair_cmd);

  auto* roofs_cmd = app.add_subcommand("roofs", "Classify roofs up to a rank");
  roofs_cmd->add_option("--max-rank", max_rank)->required();
  roofs_cmd->add_flag("--json", as_json);
  with_out(roofs_cmd);

  auto* windows_cmd = app.add_subcommand("windows", "Ext vanishing on both sides of the flip");
  windows_cmd->add_option("--n", n)->required();
  windows_cmd->add_option("--m-max", m_max)->required();
  windows_cmd->add_option("--side", side)->check(CLI::IsMember({"minus", "plus", "both"}));
  windows_cmd->add_option("--box-cap", box_cap, "Box cap on the minus side (1 is the real window)");
  with_out(windows_cmd);

  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson product");
  lr_cmd->add_option("--rank", rank)->required();
  lr_cmd->add_option("--a", a)->required();
  lr_cmd->add_option("--b", b)->required();
  with_out(lr_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Recompute the published numbers");
  verify_cmd->add_option("--suite", suite)->required();
  verify_cmd->add_flag("--json", as_json);
  with_out(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }

  Result result;
  try {
    int threads = 0;
    if (auto t = threads_from_env()) {
      threads = *t;
      set_default_threads(*t);
    }
    if (*bott_cmd) {
      result = cmd_bott(k, n, weight);
    } else if (*hodge_cmd) {
      result = cmd_hodge(k, n, bundle, diamond, raw, threads);
    } else if (*pair_cmd) {
      result = cmd_pair(k, n, threads);
    } else if (*roofs_cmd) {
      result = cmd_roofs(max_rank, as_json);
    } else if (*windows_cmd) {
      result = cmd_windows(n, m_max, side, box_cap, threads);
    } else if (*lr_cmd) {
      result = cmd_lr(rank, a, b);
    } else {
      result = cmd_verify(suite, as_json, threads);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  }

  if (out_file.empty()) {
    out << result.text;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!f || !(f << result.text)) {
      err << "error: cannot write " << out_file << '\n';
      return kUsage;
    }
  }
  return result.code;
}

}  // namespace roofcalc::cli
