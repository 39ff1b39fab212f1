#ifndef TRASDIM_JSON_IO_HPP
#define TRASDIM_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "trasdim/families.hpp"
#include "trasdim/metric_space.hpp"
#include "trasdim/ordinal.hpp"
#include "trasdim/profile.hpp"
#include "trasdim/set_family.hpp"
#include "trasdim/strategy.hpp"

namespace trasdim {

// Document formats (all validated with loud, field-naming errors):
//
//   space    {"kind":"matrix","d":[[0,1],[1,0]]}         entries: number|"INF"
//            {"kind":"graph","n":4,"edges":[[0,1,1],...]}
//            {"kind":"grid","side":12,"dim":2,"norm":"l1"|"linf"}
//            {"kind":"disjoint_union","parts":[<space>,<space>]}
//   family   {"kind":"explicit","ground":6,"members":[[1],[2,6]]}
//            {"kind":"oracle","name":"card_le_min","ground":10,"params":{}}
//   strategy {"m":1,"start":2,"rules":[<rule>...]}       uniform form
//            {"m":1,"start":2,"type":"table","truncation":6,
//             "entries":[{"prefix":[[1,2]],"demand":2},...]}
//   rule     {"type":"const","c":2} | {"type":"affine","a":1,"b":0}
//            | {"type":"lookup","values":[2,2,3]}
//   profile  {"alpha0":2,"alphas":[<rule>...]}
//
// Serialization is deterministic: keys are emitted sorted, infinite
// distances render as "INF", and integral doubles render as integers.

MetricSpace space_from_json(const nlohmann::json& doc);

SetFamily family_from_json(const nlohmann::json& doc);
nlohmann::json family_to_json(const SetFamily& f);

MonotoneFn rule_from_json(const nlohmann::json& doc);
nlohmann::json rule_to_json(const MonotoneFn& fn);

Strategy strategy_from_json(const nlohmann::json& doc);
nlohmann::json strategy_to_json(const Strategy& s);

APDProfile profile_from_json(const nlohmann::json& doc);
nlohmann::json profile_to_json(const APDProfile& p);

// number|"INF"; integral finite values become JSON integers.
nlohmann::json number_to_json(double v);
double number_from_json(const nlohmann::json& doc);

// Naturals as JSON integers, everything else as the canonical string form.
nlohmann::json ordinal_to_json(const Ordinal& a);

nlohmann::json partition_to_json(const SubspacePartition& p);
nlohmann::json witness_to_json(const ColoringWitness& w);
nlohmann::json solve_status_to_json(SolveStatus s);  // "feasible" | "infeasible" | "unknown"
nlohmann::json solver_stats_to_json(const SolverStats& s);
nlohmann::json family_result_to_json(const FamilyResult& r);
nlohmann::json certificate_report_to_json(const CertificateReport& r);

// 64-bit FNV-1a of the raw bytes, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace trasdim

#endif
