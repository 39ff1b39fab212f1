#ifndef TRASDIM_STRATEGY_HPP
#define TRASDIM_STRATEGY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "trasdim/profile.hpp"
#include "trasdim/set_family.hpp"

namespace trasdim {

// Finite description of an m-strategy: the adversary must play tuples
// (sigma_0, ..., sigma_m) where |sigma_0| = start and the cardinality of
// each later sigma_k is a function of the preceding prefix alone.
//
// Two representations:
//   Uniform  round k reads x = max of sigma_0 united ... united sigma_{k-1}
//            and demands cardinality rule_k(x);
//   Table    explicit map from prefixes (as ordered member lists) to the
//            demanded next cardinality, built over a truncated ground set.
//            Entries exist for the pairwise disjoint prefixes reachable
//            under the strategy.
class Strategy {
 public:
  struct Uniform {
    std::vector<MonotoneFn> per_round;  // one entry per round 1..m
  };
  struct Table {
    int truncation = 0;
    std::map<std::vector<std::uint64_t>, int> next;
  };

  Strategy(int rounds, int start, Uniform rep);
  Strategy(int rounds, int start, Table rep);

  int rounds() const { return rounds_; }  // m
  int start() const { return start_; }    // |sigma_0|

  // Demanded cardinality of sigma_k for a prefix (sigma_0..sigma_{k-1}),
  // 1 <= k <= rounds. Throws on malformed prefixes or table misses.
  int next_cardinality(std::span<const FinSet> prefix) const;

  bool is_uniform() const { return std::holds_alternative<Uniform>(rep_); }
  const Uniform& uniform() const { return std::get<Uniform>(rep_); }
  const Table& table() const { return std::get<Table>(rep_); }

 private:
  int rounds_;
  int start_;
  std::variant<Uniform, Table> rep_;
};

enum class CertificateStatus { NoCounterexampleAtTruncation, Counterexample };

struct CertificateReport {
  CertificateStatus status = CertificateStatus::NoCounterexampleAtTruncation;
  // Lexicographically least counterexample play, present iff status says so.
  std::optional<std::vector<FinSet>> counterexample;
  std::uint64_t plays_examined = 0;
  // Prefixes whose demanded cardinality exceeded the remaining ground.
  std::uint64_t vacuous_prefixes = 0;
  // No complete play existed at this truncation; never silently a pass.
  bool vacuous_only = false;
  int truncation = 0;
};

struct CertificateOptions {
  // Enumeration is exponential in the truncation; the caps keep accidental
  // blowups out. Set force to run larger instances anyway.
  bool force = false;
};

// Plays every pairwise disjoint tuple within {1..truncation} that follows
// the strategy's cardinalities, in lexicographic order on the canonical
// member lists, and tests whether some play's union lands in the family
// (a counterexample). Stops at the first counterexample. Oracle families
// require truncation <= family ground.
CertificateReport check_certificate(const Strategy& s, const SetFamily& f,
                                    int truncation, CertificateOptions opts = {});

// Strategy prescribed by a profile (alpha_0, ..., alpha_m): start alpha_0,
// round k demanding alpha_k(max of the prefix union).
Strategy strategy_from_profile(const APDProfile& profile);

// Builds a decision-table strategy witnessing Ord F <= w*m + n over the
// family's ground set, by recursively choosing for each prefix the least
// n_k with Ord of the derived family <= w*(m-k) + n_k. Explicit families
// only. Returns nullopt when no such strategy exists (only possible at
// m = 0, where it requires ord(F) <= n).
std::optional<Strategy> strategy_from_family(const SetFamily& f, int m, int n,
                                             CertificateOptions opts = {});

}  // namespace trasdim

#endif
