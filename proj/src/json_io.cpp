#include "trasdim/json_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace trasdim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

const json& member(const json& doc, const std::string& key, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(where, "missing field \"" + key + "\"");
  return *it;
}

int int_member(const json& doc, const std::string& key, const std::string& where) {
  const json& v = member(doc, key, where);
  if (!v.is_number_integer()) fail(where, "field \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::string string_member(const json& doc, const std::string& key, const std::string& where) {
  const json& v = member(doc, key, where);
  if (!v.is_string()) fail(where, "field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<int> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number_integer()) fail(where, "expected an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

json number_to_json(double v) {
  if (std::isinf(v) && v > 0) return json("INF");
  // 2^53: beyond it doubles skip integers, so keep the float form.
  if (std::floor(v) == v && std::abs(v) <= 9007199254740992.0)
    return json(static_cast<std::int64_t>(v));
  return json(v);
}

double number_from_json(const json& doc) {
  if (doc.is_string()) {
    if (doc.get<std::string>() == "INF") return kInf;
    fail("number", "the only string form is \"INF\", got \"" + doc.get<std::string>() + "\"");
  }
  if (!doc.is_number()) fail("number", "expected a number or \"INF\"");
  return doc.get<double>();
}

MetricSpace space_from_json(const json& doc) {
  const std::string kind = string_member(doc, "kind", "space");
  if (kind == "matrix") {
    const json& d = member(doc, "d", "space(matrix)");
    if (!d.is_array()) fail("space(matrix)", "\"d\" must be an array of rows");
    std::vector<std::vector<double>> m;
    m.reserve(d.size());
    for (const auto& row : d) {
      if (!row.is_array()) fail("space(matrix)", "each row of \"d\" must be an array");
      std::vector<double> r;
      r.reserve(row.size());
      for (const auto& e : row) r.push_back(number_from_json(e));
      m.push_back(std::move(r));
    }
    return MetricSpace::from_matrix(m);
  }
  if (kind == "graph") {
    const int n = int_member(doc, "n", "space(graph)");
    const json& edges = member(doc, "edges", "space(graph)");
    if (!edges.is_array()) fail("space(graph)", "\"edges\" must be an array");
    std::vector<std::tuple<int, int, double>> es;
    es.reserve(edges.size());
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        fail("space(graph)", "each edge must be [i, j, weight]");
      es.emplace_back(e[0].get<int>(), e[1].get<int>(), number_from_json(e[2]));
    }
    return MetricSpace::from_graph(n, es);
  }
  if (kind == "grid") {
    const int side = int_member(doc, "side", "space(grid)");
    const int dim = int_member(doc, "dim", "space(grid)");
    const std::string norm = string_member(doc, "norm", "space(grid)");
    if (norm == "l1") return MetricSpace::grid(side, dim, MetricSpace::Norm::L1);
    if (norm == "linf") return MetricSpace::grid(side, dim, MetricSpace::Norm::LInf);
    fail("space(grid)", "norm must be \"l1\" or \"linf\", got \"" + norm + "\"");
  }
  if (kind == "disjoint_union") {
    const json& parts = member(doc, "parts", "space(disjoint_union)");
    if (!parts.is_array() || parts.empty())
      fail("space(disjoint_union)", "\"parts\" must be a nonempty array of spaces");
    MetricSpace acc = space_from_json(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
      acc = MetricSpace::disjoint_union(acc, space_from_json(parts[i]));
    return acc;
  }
  fail("space", "unknown kind \"" + kind +
                    "\" (expected matrix, graph, grid or disjoint_union)");
}

SetFamily family_from_json(const json& doc) {
  const std::string kind = string_member(doc, "kind", "family");
  const int ground = int_member(doc, "ground", "family");
  if (kind == "explicit") {
    const json& members = member(doc, "members", "family(explicit)");
    if (!members.is_array()) fail("family(explicit)", "\"members\" must be an array of sets");
    std::vector<FinSet> sets;
    sets.reserve(members.size());
    for (const auto& m : members)
      sets.push_back(FinSet::from_labels(int_list(m, "family(explicit) member")));
    return SetFamily::explicit_family(GroundSet{ground}, std::move(sets));
  }
  if (kind == "oracle") {
    const std::string name = string_member(doc, "name", "family(oracle)");
    std::map<std::string, std::int64_t> params;
    if (doc.contains("params")) {
      const json& p = doc.at("params");
      if (!p.is_object()) fail("family(oracle)", "\"params\" must be an object");
      for (auto it = p.begin(); it != p.end(); ++it) {
        if (!it.value().is_number_integer())
          fail("family(oracle)", "param \"" + it.key() + "\" must be an integer");
        params[it.key()] = it.value().get<std::int64_t>();
      }
    }
    return builtin_oracle(name, params, ground);
  }
  fail("family", "unknown kind \"" + kind + "\" (expected explicit or oracle)");
}

json family_to_json(const SetFamily& f) {
  json doc;
  doc["ground"] = f.ground().truncation;
  if (f.is_explicit()) {
    doc["kind"] = "explicit";
    json members = json::array();
    for (std::uint64_t bits : f.member_bits())
      members.push_back(FinSet::from_bits(bits).labels());
    doc["members"] = std::move(members);
  } else {
    doc["kind"] = "oracle";
    doc["name"] = f.oracle_name();
    json params = json::object();
    for (const auto& [k, v] : f.oracle_params()) params[k] = v;
    doc["params"] = std::move(params);
  }
  return doc;
}

MonotoneFn rule_from_json(const json& doc) {
  const std::string type = string_member(doc, "type", "rule");
  if (type == "const") return MonotoneFn::constant(int_member(doc, "c", "rule(const)"));
  if (type == "affine")
    return MonotoneFn::affine(int_member(doc, "a", "rule(affine)"),
                              int_member(doc, "b", "rule(affine)"));
  if (type == "lookup")
    return MonotoneFn::lookup(int_list(member(doc, "values", "rule(lookup)"), "rule(lookup)"));
  fail("rule", "unknown type \"" + type + "\" (expected const, affine or lookup)");
}

json rule_to_json(const MonotoneFn& fn) {
  json doc;
  switch (fn.kind()) {
    case MonotoneFn::Kind::Const:
      doc["type"] = "const";
      doc["c"] = fn.const_value();
      break;
    case MonotoneFn::Kind::Affine:
      doc["type"] = "affine";
      doc["a"] = fn.affine_a();
      doc["b"] = fn.affine_b();
      break;
    case MonotoneFn::Kind::Lookup:
      doc["type"] = "lookup";
      doc["values"] = fn.lookup_values();
      break;
  }
  return doc;
}

Strategy strategy_from_json(const json& doc) {
  const int m = int_member(doc, "m", "strategy");
  const int start = int_member(doc, "start", "strategy");
  if (doc.contains("type")) {
    const std::string type = string_member(doc, "type", "strategy");
    if (type != "table") fail("strategy", "unknown type \"" + type + "\" (expected table)");
    Strategy::Table table;
    table.truncation = int_member(doc, "truncation", "strategy(table)");
    const json& entries = member(doc, "entries", "strategy(table)");
    if (!entries.is_array()) fail("strategy(table)", "\"entries\" must be an array");
    for (const auto& e : entries) {
      const json& prefix = member(e, "prefix", "strategy(table) entry");
      if (!prefix.is_array()) fail("strategy(table)", "\"prefix\" must be an array of sets");
      std::vector<std::uint64_t> key;
      key.reserve(prefix.size());
      for (const auto& s : prefix)
        key.push_back(FinSet::from_labels(int_list(s, "strategy(table) prefix set")).bits());
      const int demand = int_member(e, "demand", "strategy(table) entry");
      if (!table.next.emplace(std::move(key), demand).second)
        fail("strategy(table)", "duplicate prefix entry");
    }
    return Strategy(m, start, std::move(table));
  }
  const json& rules = member(doc, "rules", "strategy");
  if (!rules.is_array()) fail("strategy", "\"rules\" must be an array");
  Strategy::Uniform rep;
  rep.per_round.reserve(rules.size());
  for (const auto& r : rules) rep.per_round.push_back(rule_from_json(r));
  return Strategy(m, start, std::move(rep));
}

json strategy_to_json(const Strategy& s) {
  json doc;
  doc["m"] = s.rounds();
  doc["start"] = s.start();
  if (s.is_uniform()) {
    json rules = json::array();
    for (const auto& r : s.uniform().per_round) rules.push_back(rule_to_json(r));
    doc["rules"] = std::move(rules);
  } else {
    doc["type"] = "table";
    doc["truncation"] = s.table().truncation;
    json entries = json::array();
    for (const auto& [key, demand] : s.table().next) {
      json prefix = json::array();
      for (std::uint64_t bits : key) prefix.push_back(FinSet::from_bits(bits).labels());
      entries.push_back(json{{"prefix", std::move(prefix)}, {"demand", demand}});
    }
    doc["entries"] = std::move(entries);
  }
  return doc;
}

APDProfile profile_from_json(const json& doc) {
  APDProfile p;
  p.alpha0 = int_member(doc, "alpha0", "profile");
  if (p.alpha0 < 1) fail("profile", "\"alpha0\" must be >= 1");
  const json& alphas = member(doc, "alphas", "profile");
  if (!alphas.is_array()) fail("profile", "\"alphas\" must be an array of rules");
  p.alphas.reserve(alphas.size());
  for (const auto& a : alphas) p.alphas.push_back(rule_from_json(a));
  return p;
}

json profile_to_json(const APDProfile& p) {
  json doc;
  doc["alpha0"] = p.alpha0;
  json alphas = json::array();
  for (const auto& a : p.alphas) alphas.push_back(rule_to_json(a));
  doc["alphas"] = std::move(alphas);
  return doc;
}

json ordinal_to_json(const Ordinal& a) {
  if (a.is_nat()) return json(a.as_nat());
  return json(a.to_string());
}

json partition_to_json(const SubspacePartition& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks) blocks.push_back(b);
  json diameters = json::array();
  for (double d : p.diameters) diameters.push_back(number_to_json(d));
  return json{{"blocks", std::move(blocks)}, {"diameters", std::move(diameters)}};
}

json witness_to_json(const ColoringWitness& w) { return json{{"assignment", w.assignment}}; }

json solve_status_to_json(SolveStatus s) {
  switch (s) {
    case SolveStatus::Feasible:
      return json("feasible");
    case SolveStatus::Infeasible:
      return json("infeasible");
    case SolveStatus::Unknown:
      break;
  }
  return json("unknown");
}

json solver_stats_to_json(const SolverStats& s) {
  return json{{"nodes", s.nodes},
              {"node_budget", s.node_budget},
              {"budget_exhausted", s.budget_exhausted},
              {"warm_start_used", s.warm_start_used},
              {"mode", s.mode}};
}

json family_result_to_json(const FamilyResult& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back(json{{"sigma", v.sigma},
                            {"status", solve_status_to_json(v.status)},
                            {"inferred", v.inferred},
                            {"nodes", v.nodes}});
  }
  json doc{{"complete", r.complete},
           {"scales", r.scales},
           {"bound", number_to_json(r.bound)},
           {"verdicts", std::move(verdicts)}};
  doc["family"] = r.family ? family_to_json(*r.family) : json();
  return doc;
}

json certificate_report_to_json(const CertificateReport& r) {
  json doc;
  doc["status"] = r.status == CertificateStatus::Counterexample
                      ? "counterexample"
                      : "no_counterexample_at_truncation";
  if (r.counterexample) {
    json play = json::array();
    for (const FinSet& s : *r.counterexample) play.push_back(s.labels());
    doc["counterexample"] = std::move(play);
  } else {
    doc["counterexample"] = json();
  }
  doc["plays_examined"] = r.plays_examined;
  doc["vacuous_prefixes"] = r.vacuous_prefixes;
  doc["vacuous_only"] = r.vacuous_only;
  doc["truncation"] = r.truncation;
  return doc;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

}  // namespace trasdim
