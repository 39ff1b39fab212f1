// Batch frontend over the trasdim library. Every subcommand reads JSON
// documents (file paths or inline "{...}" literals), runs one operation and
// prints a single JSON report on standard output.
//
// Exit codes: 0 definitive report, 2 result not definitive at the stated
// limits (a solver verdict is unknown / the run is incomplete), 1 input or
// usage error.
//
// Reports are deterministic byte for byte given identical inputs and limits;
// timing is opt-in (--timing) because it breaks that guarantee.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trasdim/decompose.hpp"
#include "trasdim/families.hpp"
#include "trasdim/json_io.hpp"
#include "trasdim/metric_space.hpp"
#include "trasdim/ordinal.hpp"
#include "trasdim/profile.hpp"
#include "trasdim/set_family.hpp"
#include "trasdim/strategy.hpp"

namespace {

using nlohmann::json;
using namespace trasdim;

constexpr const char* kFormats = R"(Document formats (one example each):
  space   matrix          {"kind":"matrix","d":[[0,1],[1,0]]}        entries: number or "INF"
          graph           {"kind":"graph","n":3,"edges":[[0,1,1],[1,2,1]]}   shortest-path closure
          grid            {"kind":"grid","side":12,"dim":2,"norm":"linf"}    points [0..side]^dim
          disjoint union  {"kind":"disjoint_union","parts":[{...},{...}]}    cross distances "INF"
  family  explicit        {"kind":"explicit","ground":6,"members":[[1],[2,6]]}
          oracle          {"kind":"oracle","name":"card_le_min","ground":10}
                          builtin oracles: card_le_min; card_le_const_k (params {"k":...})
  rule    const           {"type":"const","c":2}
          affine          {"type":"affine","a":1,"b":0}
          lookup          {"type":"lookup","values":[2,2,3]}          x -> values[x-1]
  profile                 {"alpha0":2,"alphas":[{"type":"const","c":2}]}
  strategy uniform        {"m":1,"start":2,"rules":[{"type":"const","c":2}]}
           table          {"m":1,"start":1,"type":"table","truncation":6,
                           "entries":[{"prefix":[[1]],"demand":2}]}
  --scales / --sigma / --tuples   "2..6" expands a range, "2,3,5" lists values,
                                  both mix ("2..4,7"); --tuples separates tuples
                                  with ";" ("2,2;2,3").

Inputs are file paths, or inline documents when the value starts with "{".
The report's input_digest is a 64-bit FNV-1a over the raw input bytes (both
documents concatenated for two-input subcommands).

Exit codes: 0 definitive, 2 not definitive at the stated limits, 1 input error.)";

struct Common {
  std::string format = "json";
  bool timing = false;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Report format: json (default) or table")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_flag("--timing", c.timing,
                "Add a timing section to the JSON report (non-deterministic)");
  cmd->add_option("--seed", c.seed,
                  "Seed for randomized generators in the test suite; reports never depend on it");
}

std::string load_doc_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file \"" + arg + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_int_token(const std::string& tok, const char* flag) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(flag) + ": cannot parse \"" + tok + "\"");
  }
  if (pos != tok.size())
    throw std::invalid_argument(std::string(flag) + ": cannot parse \"" + tok + "\"");
  return v;
}

// Comma list with ".." ranges: "2..4,7" -> 2,3,4,7.
std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto dots = tok.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int_token(tok, flag));
      continue;
    }
    const int lo = parse_int_token(tok.substr(0, dots), flag);
    const int hi = parse_int_token(tok.substr(dots + 2), flag);
    if (lo > hi)
      throw std::invalid_argument(std::string(flag) + ": empty range \"" + tok + "\"");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument(std::string(flag) + ": no values given");
  return out;
}

std::vector<std::vector<int>> parse_tuples(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) out.push_back(parse_int_list(part, "--tuples"));
  if (out.empty()) throw std::invalid_argument("--tuples: no tuples given");
  return out;
}

json envelope(const std::string& op, const std::string& digest_bytes, json limits,
              json result) {
  json doc;
  doc["schema"] = "1";
  doc["op"] = op;
  doc["input_digest"] = fnv1a_hex(digest_bytes);
  doc["limits"] = std::move(limits);
  doc["result"] = std::move(result);
  return doc;
}

void flatten(const json& v, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object() && !v.empty()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    return;
  }
  rows.emplace_back(prefix, v.dump());
}

int emit(json report, const Common& c, std::chrono::steady_clock::time_point t0,
         int code) {
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  if (c.format == "table") {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", ms);
    rows.emplace_back("elapsed_ms", buf);
    std::size_t width = 0;
    for (const auto& [k, _] : rows) width = std::max(width, k.size());
    for (const auto& [k, val] : rows)
      std::cout << k << std::string(width - k.size() + 2, ' ') << val << "\n";
  } else {
    if (c.timing) report["timing"] = json{{"elapsed_ms", ms}};
    std::cout << report.dump(2) << "\n";
  }
  return code;
}

// Oracle families are evaluated by enumerating their ground set; keep the
// frontend from accidentally requesting 2^T work for large T.
void guard_oracle_cost(const SetFamily& f) {
  if (!f.is_explicit() && f.ground().truncation > 20)
    throw std::invalid_argument(
        "oracle family ground " + std::to_string(f.ground().truncation) +
        " is too large to enumerate here; use ground <= 20");
}

ApproxParams make_params(const std::vector<int>& scales, double bound,
                         std::uint64_t budget, bool no_warm_start) {
  ApproxParams p;
  p.scales = scales;
  p.bound = bound;
  p.node_budget = budget;
  p.warm_start = !no_warm_start;
  return p;
}

json solver_limits(const ApproxParams& p) {
  json limits;
  limits["scales"] = p.scales;
  limits["bound"] = number_to_json(p.bound);
  limits["node_budget"] = p.node_budget;
  limits["warm_start"] = p.warm_start;
  return limits;
}

json tuple_verdicts_to_json(const ProfileCheckReport& r) {
  json tuples = json::array();
  for (const auto& t : r.tuples) {
    json e;
    e["tuple"] = t.tuple;
    e["status"] = solve_status_to_json(t.status);
    tuples.push_back(std::move(e));
  }
  json result;
  result["complete"] = r.complete;
  result["all_passed"] = r.all_passed;
  result["tuples"] = std::move(tuples);
  return result;
}

json profile_f_to_json(const ProfileFReport& r) {
  json table = json::array();
  for (const auto& e : r.table) table.push_back(json{{"k", e.k}, {"f", e.f}});
  json result;
  result["complete"] = r.complete;
  result["n"] = r.n;
  result["table"] = std::move(table);
  result["monotone"] = r.monotone;
  result["violations"] = r.violations;
  result["profile"] = r.profile ? profile_to_json(*r.profile) : json();
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact toolkit for transfinite asymptotic dimension: ordinal ranks of set\n"
      "families, game-strategy certificates, and scale decompositions of finite\n"
      "metric spaces."};
  app.footer(kFormats);
  app.require_subcommand(1);

  int exit_code = 0;
  Common common;

  // ord ----------------------------------------------------------------
  auto* ord_cmd = app.add_subcommand(
      "ord", "Ordinal rank of a set family (exact at its ground truncation)");
  std::string ord_input;
  ord_cmd->add_option("--input", ord_input, "Family document")->required();
  add_common(ord_cmd, common);
  ord_cmd->callback([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string text = load_doc_text(ord_input);
    const SetFamily f = family_from_json(json::parse(text));
    guard_oracle_cost(f);
    const OrdResult r = ord_bounds(f);
    json result;
    result["value"] = ordinal_to_json(r.value);
    result["exact"] = r.exact;
    result["truncation"] = r.truncation;
    json limits;
    limits["truncation"] = f.ground().truncation;
    exit_code = emit(envelope("ord", text, std::move(limits), std::move(result)), common,
                     t0, 0);
  });

  // derive -------------------------------------------------------------
  auto* derive_cmd =
      app.add_subcommand("derive", "Derived family F^sigma (oracle results are "
                                   "enumerated into explicit form)");
  std::string derive_input, derive_sigma;
  derive_cmd->add_option("--input", derive_input, "Family document")->required();
  derive_cmd->add_option("--sigma", derive_sigma, "Labels to derive by, e.g. \"1,3\"")
      ->required();
  add_common(derive_cmd, common);
  derive_cmd->callback([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string text = load_doc_text(derive_input);
    const SetFamily f = family_from_json(json::parse(text));
    guard_oracle_cost(f);
    const FinSet sigma = FinSet::from_labels(parse_int_list(derive_sigma, "--sigma"));
    SetFamily d = derive(f, sigma);
    if (!d.is_explicit()) d = materialize(d);
    json result;
    result["sigma"] = sigma.labels();
    result["family"] = family_to_json(d);
    json limits;
    limits["truncation"] = f.ground().truncation;
    exit_code = emit(envelope("derive", text, std::move(limits), std::move(result)),
                     common, t0, 0);
  });

  // chain --------------------------------------------------------------
  auto* chain_cmd = app.add_subcommand(
      "chain", "Chain witness a_1..a_k with every prefix set in the family "
               "(inclusive families)");
  std::string chain_input;
  int chain_k = 0;
  chain_cmd->add_option("--input", chain_input, "Family document")->required();
  chain_cmd->add_option("--k", chain_k, "Chain length to search for")->required();
  add_common(chain_cmd, common);
  chain_cmd->callback([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string text = load_doc_text(chain_input);
    SetFamily f = family_from_json(json::parse(text));
    guard_oracle_cost(f);
    if (!f.is_explicit()) f = materialize(f);
    const ChainWitness w = chain_witness(f, chain_k);
    json result;
    result["found"] = w.found;
    result["labels"] = w.labels;
    json limits;
    limits["truncation"] = f.ground().truncation;
    exit_code = emit(envelope("chain", text, std::move(limits), std::move(result)),
                     common, t0, 0);
  });

  // components ----------------------------------------------------------
  auto* comp_cmd = app.add_subcommand(
      "components", "Scale-r-components of a space: blocks of the d<r graph");
  std::string comp_input;
  double comp_scale = 0;
  comp_cmd->add_option("--input", comp_input, "Space document")->required();
  comp_cmd->add_option("--scale", comp_scale, "Scale r > 0")->required();
  add_common(comp_cmd, common);
  comp_cmd->callback([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string text = load_doc_text(comp_input);
    const MetricSpace x = space_from_json(json::parse(text));
    std::vector<int> all(x.size());
    std::iota(all.begin(), all.end(), 0);
    const SubspacePartition p = scale_components(x, all, comp_scale);
    json result = partition_to_json(p);
    result["count"] = p.blocks.size();
    result["mesh"] = number_to_json(mesh(x, p.blocks));
    json limits;
    limits["points"] = x.size();
    limits["scale"] = number_to_json(comp_scale);
    exit_code = emit(envelope("components", text, std::move(limits), std::move(result)),
                     common, t0, 0);
  });

  // decompose -----------------------------------------------------------
  auto* dec_cmd = app.add_subcommand(
      "decompose", "Partition a space into one B-bounded r-disjoint class per slot");
  std::string dec_input, dec_scales;
  double dec_bound = 0;
  std::uint64_t dec_budget = DecomposeOptions{}.node_budget;
  bool dec_no_warm = false;
  dec_cmd->add_option("--input", dec_input, "Space document")->required();
  dec_cmd->add_option("--scales", dec_scales, "One scale per slot, e.g. \"2,2,5\"")
      ->required();
  dec_cmd->add_option("--bound", dec_bound, "Diameter bound B >= 0")->required();
  dec_cmd->add_option("--budget", dec_budget, "Search node budget (default 20000000)");
  dec_cmd->add_flag("--no-warm-start", dec_no_warm, "Skip the pattern warm starts");
  add_common(dec_cmd, common);
  dec_cmd->callback([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string text = load_doc_text(dec_input);
    const MetricSpace x = space_from_json(json::parse(text));
    const std::vector<int> scales = parse_int_list(dec_scales, "--scales");
    ScaleSlots slots;
    slots.scales.assign(scales.begin(), scales.end());
    DecomposeOptions opts;
    opts.node_budget = dec_budget;
    opts.warm_start = !dec_no_warm;
    const DecomposeResult r = decompose(x, slots, dec_bound, opts);
    json result;
    result["status"] = solve_status_to_json(r.status);
    result["witness"] = r.witness ? witness_to_json(*r.witness) : json();
    result["stats"] = solver_stats_to_json(r.stats);
    json limits;
    limits["scales"] = scales;
    limits["bound"] = number_to_json(dec_bound);
    limits["node_budget"] = dec_budget;
    limits["warm_start"] = !dec_no_warm;
    exit_code = emit(envelope("decompose", text, std::move(limits), std::move(result)),
                     common, t0, r.status == SolveStatus::Unknown ? 2 : 0);
  });

  // family ---------------------------------------------------------------
  auto* fam_cmd = app.add_subcommand(
      "family", "Infeasible-scale-subset family of a space over a scale window");
  std::string fam_input, fam_scales;
  double fam_bound = 0;
  std::uint64_t fam_budget = DecomposeOptions{}.node_budget;
  bool fam_no_warm = false;
  fam_cmd->add_option("--input", fam_input, "Space document")->required();
  fam_cmd->add_option("--scales", fam_scales, "Scale window, e.g. \"2..6\"")->required();
  fam_cmd->add_option("--bound", fam_bound, "Diameter bound B >= 0")->required();
  fam_cmd->add_option("--budget", fam_budget, "Search node budget per subset");
  fam_cmd->add_flag("--no-warm-start", fam_no_warm, "Skip the pattern warm starts");
  add_common(fam_cmd, common);
  fam_cmd->callback([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string text = load_doc_text(fam_input);
    const MetricSpace x = space_from_json(json::parse(text));
    const ApproxParams params = make_params(parse_int_list(fam_scales, "--scales"),
                                            fam_bound, fam_budget, fam_no_warm);
    const FamilyResult r = family_M(x, params);
    exit_code = emit(envelope("family", text, solver_limits(params),
                              family_result_to_json(r)),
                     common, t0, r.complete ? 0 : 2);
  });

  // trasdim ---------------------------------------------------------------
  auto* tra_cmd = app.add_subcommand(
      "trasdim", "Ordinal rank of the infeasible-subset family over a scale window");
  std::string tra_input, tra_scales;
  double tra_bound = 0;
  std::uint64_t tra_budget = DecomposeOptions{}.node_budget;
  bool tra_no_warm = false;
  tra_cmd->add_option("--input", tra_input, "Space document")->required();
  tra_cmd->add_option("--scales", tra_scales, "Scale window, e.g. \"2..6\"")->required();
  tra_cmd->add_option("--bound", tra_bound, "Diameter bound B >= 0")->required();
  tra_cmd->add_option("--budget", tra_budget, "Search node budget per subset");
  tra_cmd->add_flag("--no-warm-start", tra_no_warm, "Skip the pattern warm starts");
  add_common(tra_cmd, common);
  tra_cmd->callback([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string text = load_doc_text(tra_input);
    const MetricSpace x = space_from_json(json::parse(text));
    const ApproxParams params = make_params(parse_int_list(tra_scales, "--scales"),
                                            tra_bound, tra_budget, tra_no_warm);
    const TrasdimReport r = trasdim_ord(x, params);
    json result;
    result["value"] = r.ord ? json(*r.ord) : json();
    result["family"] = family_result_to_json(r.family);
    exit_code = emit(envelope("trasdim", text, solver_limits(params), std::move(result)),
                     common, t0, r.family.complete ? 0 : 2);
  });

  // derive-f ---------------------------------------------------------------
  auto* df_cmd = app.add_subcommand(
      "derive-f", "Tabulate f(k) = ord of the family derived by {k..k+n}, plus one");
  std::string df_input, df_scales;
  double df_bound = 0;
  int df_n = 0;
  std::uint64_t df_budget = DecomposeOptions{}.node_budget;
  bool df_no_warm = false;
  df_cmd->add_option("--input", df_input, "Space document")->required();
  df_cmd->add_option("--scales", df_scales, "Scale window, e.g. \"2..6\"")->required();
  df_cmd->add_option("--bound", df_bound, "Diameter bound B >= 0")->required();
  df_cmd->add_option("--n", df_n, "Window shift: derive by {k..k+n}")->required();
  df_cmd->add_option("--budget", df_budget, "Search node budget per subset");
  df_cmd->add_flag("--no-warm-start", df_no_warm, "Skip the pattern warm starts");
  add_common(df_cmd, common);
  df_cmd->callback([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string text = load_doc_text(df_input);
    const MetricSpace x = space_from_json(json::parse(text));
    const ApproxParams params = make_params(parse_int_list(df_scales, "--scales"),
                                            df_bound, df_budget, df_no_warm);
    const ProfileFReport r = derive_profile_f(x, df_n, params);
    json limits = solver_limits(params);
    limits["n"] = df_n;
    exit_code = emit(envelope("derive-f", text, std::move(limits), profile_f_to_json(r)),
                     common, t0, r.complete ? 0 : 2);
  });

  // profile-check ------------------------------------------------------------
  auto* pc_cmd = app.add_subcommand(
      "profile-check", "Decompose a space for scale tuples prescribed by a profile");
  std::string pc_input, pc_profile, pc_scales, pc_tuples;
  double pc_bound = 0;
  std::uint64_t pc_budget = DecomposeOptions{}.node_budget;
  bool pc_no_warm = false;
  pc_cmd->add_option("--input", pc_input, "Space document")->required();
  pc_cmd->add_option("--profile", pc_profile, "Profile document")->required();
  pc_cmd->add_option("--scales", pc_scales, "Scale window, e.g. \"2..6\"")->required();
  pc_cmd->add_option("--bound", pc_bound, "Diameter bound B >= 0")->required();
  pc_cmd->add_option("--tuples", pc_tuples,
                     "Tuples to check, e.g. \"2,2;2,3\"; default: every "
                     "non-decreasing in-window tuple of the profile's arity");
  pc_cmd->add_option("--budget", pc_budget, "Search node budget per tuple");
  pc_cmd->add_flag("--no-warm-start", pc_no_warm, "Skip the pattern warm starts");
  add_common(pc_cmd, common);
  pc_cmd->callback([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string text = load_doc_text(pc_input);
    const std::string profile_text = load_doc_text(pc_profile);
    const MetricSpace x = space_from_json(json::parse(text));
    const APDProfile profile = profile_from_json(json::parse(profile_text));
    const ApproxParams params = make_params(parse_int_list(pc_scales, "--scales"),
                                            pc_bound, pc_budget, pc_no_warm);
    std::vector<int> window = params.scales;
    std::sort(window.begin(), window.end());
    window.erase(std::unique(window.begin(), window.end()), window.end());
    const std::vector<std::vector<int>> tuples =
        pc_tuples.empty() ? all_nondecreasing_tuples(window, profile.arity())
                          : parse_tuples(pc_tuples);
    const ProfileCheckReport r = profile_check(x, profile, tuples, params);
    json limits = solver_limits(params);
    limits["profile"] = profile_to_json(profile);
    exit_code = emit(envelope("profile-check", text + profile_text, std::move(limits),
                              tuple_verdicts_to_json(r)),
                     common, t0, r.complete ? 0 : 2);
  });

  // strategy-check ------------------------------------------------------------
  auto* sc_cmd = app.add_subcommand(
      "strategy-check", "Play every disjoint tuple demanded by a strategy against a "
                        "family, hunting for a union that lands in it");
  std::string sc_input, sc_strategy;
  int sc_trunc = 0;
  bool sc_force = false;
  sc_cmd->add_option("--input", sc_input, "Family document")->required();
  sc_cmd->add_option("--strategy", sc_strategy, "Strategy document")->required();
  sc_cmd->add_option("--truncation", sc_trunc, "Ground truncation to play within")
      ->required();
  sc_cmd->add_flag("--force", sc_force,
                   "Run past the safety caps (truncation 16, 3 rounds)");
  add_common(sc_cmd, common);
  sc_cmd->callback([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string text = load_doc_text(sc_input);
    const std::string strategy_text = load_doc_text(sc_strategy);
    const SetFamily f = family_from_json(json::parse(text));
    const Strategy s = strategy_from_json(json::parse(strategy_text));
    CertificateOptions opts;
    opts.force = sc_force;
    const CertificateReport r = check_certificate(s, f, sc_trunc, opts);
    json limits;
    limits["truncation"] = sc_trunc;
    limits["rounds"] = s.rounds();
    exit_code = emit(envelope("strategy-check", text + strategy_text, std::move(limits),
                              certificate_report_to_json(r)),
                     common, t0, 0);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const json::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
