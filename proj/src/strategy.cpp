#include "trasdim/strategy.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace trasdim {

namespace {

std::string prefix_to_string(std::span<const FinSet> prefix) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i) out << ", ";
    out << prefix[i].to_string();
  }
  out << ")";
  return out.str();
}

void validate_common(int rounds, int start) {
  if (rounds < 0) throw std::invalid_argument("Strategy: negative round count");
  if (start < 1) throw std::invalid_argument("Strategy: start cardinality must be >= 1");
}

}  // namespace

Strategy::Strategy(int rounds, int start, Uniform rep)
    : rounds_(rounds), start_(start), rep_(std::move(rep)) {
  validate_common(rounds, start);
  const auto& u = std::get<Uniform>(rep_);
  if (static_cast<int>(u.per_round.size()) != rounds)
    throw std::invalid_argument("Strategy: uniform rule count must equal the round count");
}

Strategy::Strategy(int rounds, int start, Table rep)
    : rounds_(rounds), start_(start), rep_(std::move(rep)) {
  validate_common(rounds, start);
  if (rounds < 1)
    throw std::invalid_argument("Strategy: a decision table needs at least one round");
  const auto& t = std::get<Table>(rep_);
  if (t.truncation < 1 || t.truncation > 64)
    throw std::invalid_argument("Strategy: table truncation out of range");
  const std::uint64_t ground =
      t.truncation == 64 ? ~0ull : ((1ull << t.truncation) - 1);
  for (const auto& [key, demand] : t.next) {
    if (key.empty() || key.size() > static_cast<std::size_t>(rounds))
      throw std::invalid_argument("Strategy: table key length out of range");
    std::uint64_t seen = 0;
    for (std::uint64_t bits : key) {
      if (bits == 0) throw std::invalid_argument("Strategy: empty set in table key");
      if (bits & ~ground)
        throw std::invalid_argument("Strategy: table key exceeds truncation");
      if (bits & seen)
        throw std::invalid_argument("Strategy: table key sets are not pairwise disjoint");
      seen |= bits;
    }
    if (demand < 1)
      throw std::invalid_argument("Strategy: table demands a cardinality < 1");
  }
}

int Strategy::next_cardinality(std::span<const FinSet> prefix) const {
  const int k = static_cast<int>(prefix.size());
  if (k < 1 || k > rounds_)
    throw std::invalid_argument("Strategy: prefix length must be between 1 and the round count");
  if (is_uniform()) {
    std::uint64_t joined = 0;
    for (const FinSet& s : prefix) joined |= s.bits();
    FinSet u = FinSet::from_bits(joined);
    if (u.empty())
      throw std::invalid_argument("Strategy: uniform rule needs a nonempty prefix union");
    return uniform().per_round[static_cast<std::size_t>(k - 1)](u.max_label());
  }
  std::vector<std::uint64_t> key;
  key.reserve(prefix.size());
  for (const FinSet& s : prefix) key.push_back(s.bits());
  auto it = table().next.find(key);
  if (it == table().next.end())
    throw std::out_of_range("Strategy: no table entry for prefix " + prefix_to_string(prefix));
  return it->second;
}

namespace {

// Positions of set bits of mask, ascending.
std::vector<int> bit_positions(std::uint64_t mask) {
  std::vector<int> pos;
  while (mask) {
    pos.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return pos;
}

// Visits every k-element submask of the set with the given bit positions in
// increasing order of the submask's integer value (Gosper's hack over the
// compressed index space; expanding through the ascending position table
// preserves the order). visit returns true to stop early.
bool for_each_k_submask(const std::vector<int>& pos, int k,
                        const std::function<bool(std::uint64_t)>& visit) {
  const int p = static_cast<int>(pos.size());
  if (k < 1 || k > p) return false;
  std::uint64_t comb = (1ull << k) - 1;
  const std::uint64_t limit = 1ull << p;  // p <= 63 enforced by the caller
  while (comb < limit) {
    std::uint64_t expanded = 0;
    std::uint64_t c = comb;
    while (c) {
      expanded |= 1ull << pos[static_cast<std::size_t>(std::countr_zero(c))];
      c &= c - 1;
    }
    if (visit(expanded)) return true;
    std::uint64_t x = comb & (~comb + 1);
    std::uint64_t y = comb + x;
    comb = (((comb ^ y) >> 2) / x) | y;
  }
  return false;
}

struct PlayEnumerator {
  const Strategy& s;
  const SetFamily& f;
  std::uint64_t ground_mask;
  CertificateReport& report;
  std::vector<FinSet> play;

  // Returns true once a counterexample is found (early exit).
  bool run(int round, std::uint64_t used) {
    const int demand =
        round == 0 ? s.start()
                   : s.next_cardinality(std::span<const FinSet>(play.data(), play.size()));
    const std::uint64_t remaining = ground_mask & ~used;
    if (std::popcount(remaining) < demand) {
      ++report.vacuous_prefixes;
      return false;
    }
    const std::vector<int> pos = bit_positions(remaining);
    return for_each_k_submask(pos, demand, [&](std::uint64_t mask) {
      play.push_back(FinSet::from_bits(mask));
      bool stop;
      if (round == s.rounds()) {
        ++report.plays_examined;
        stop = f.contains(FinSet::from_bits(used | mask));
        if (stop) {
          report.status = CertificateStatus::Counterexample;
          report.counterexample = play;
        }
      } else {
        stop = run(round + 1, used | mask);
      }
      play.pop_back();
      return stop;
    });
  }
};

void verify_counterexample(const Strategy& s, const SetFamily& f,
                           const std::vector<FinSet>& play) {
  if (static_cast<int>(play.size()) != s.rounds() + 1)
    throw std::logic_error("certificate counterexample has the wrong number of rounds");
  std::uint64_t joined = 0;
  for (std::size_t k = 0; k < play.size(); ++k) {
    if (play[k].bits() & joined)
      throw std::logic_error("certificate counterexample is not pairwise disjoint");
    joined |= play[k].bits();
    const int want =
        k == 0 ? s.start()
               : s.next_cardinality(std::span<const FinSet>(play.data(), k));
    if (play[k].size() != want)
      throw std::logic_error("certificate counterexample violates the strategy's cardinalities");
  }
  if (!f.contains(FinSet::from_bits(joined)))
    throw std::logic_error("certificate counterexample union is not a family member");
}

}  // namespace

CertificateReport check_certificate(const Strategy& s, const SetFamily& f,
                                    int truncation, CertificateOptions opts) {
  if (truncation < 1 || truncation > 63)
    throw std::invalid_argument("check_certificate: truncation must be in [1..63]");
  if (!opts.force && (truncation > 16 || s.rounds() > 3))
    throw std::invalid_argument(
        "check_certificate: enumeration beyond truncation 16 or 3 rounds needs force");
  if (!f.is_explicit() && truncation > f.ground().truncation)
    throw std::invalid_argument(
        "check_certificate: truncation exceeds the oracle family's ground set");

  CertificateReport report;
  report.truncation = truncation;
  const std::uint64_t ground_mask = (1ull << truncation) - 1;
  PlayEnumerator e{s, f, ground_mask, report, {}};
  e.run(0, 0);
  if (report.status == CertificateStatus::Counterexample)
    verify_counterexample(s, f, *report.counterexample);
  report.vacuous_only = report.plays_examined == 0 &&
                        report.status == CertificateStatus::NoCounterexampleAtTruncation;
  return report;
}

Strategy strategy_from_profile(const APDProfile& profile) {
  return Strategy(static_cast<int>(profile.alphas.size()), profile.alpha0,
                  Strategy::Uniform{profile.alphas});
}

namespace {

// Least q with Ord F^{union of prefix} <= w*(m-k) + q, plus one. At rounds
// before the last the limit part dominates every explicit ordinal, so the
// minimum is q = 0; at the last round it is the ord itself.
int table_demand(const SetFamily& f, std::uint64_t used, int round, int rounds) {
  if (round < rounds) return 1;
  SetFamily derived = derive(f, FinSet::from_bits(used));
  return ord(derived) + 1;
}

void build_table(const SetFamily& f, std::uint64_t ground_mask, int rounds,
                 std::vector<std::uint64_t>& key, std::uint64_t used, int round,
                 Strategy::Table& tab) {
  const int demand = table_demand(f, used, round, rounds);
  tab.next[key] = demand;
  if (round == rounds) return;
  const std::uint64_t remaining = ground_mask & ~used;
  if (std::popcount(remaining) < demand) return;
  for_each_k_submask(bit_positions(remaining), demand, [&](std::uint64_t mask) {
    key.push_back(mask);
    build_table(f, ground_mask, rounds, key, used | mask, round + 1, tab);
    key.pop_back();
    return false;
  });
}

}  // namespace

std::optional<Strategy> strategy_from_family(const SetFamily& f, int m, int n,
                                             CertificateOptions opts) {
  if (!f.is_explicit())
    throw std::invalid_argument("strategy_from_family: explicit families only");
  if (m < 0 || n < 0)
    throw std::invalid_argument("strategy_from_family: m and n must be naturals");
  const int truncation = f.ground().truncation;
  if (truncation > 63)
    throw std::invalid_argument("strategy_from_family: ground sets beyond 63 are unsupported");
  if (!opts.force && (truncation > 16 || m > 3))
    throw std::invalid_argument(
        "strategy_from_family: ground beyond 16 or more than 3 rounds needs force");

  if (m == 0) {
    if (ord(f) > n) return std::nullopt;
    return Strategy(0, n + 1, Strategy::Uniform{{}});
  }

  // One table entry per reachable pairwise disjoint prefix: demand 1 before
  // the last round, ord of the derived family plus one at the last round.
  Strategy::Table tab;
  tab.truncation = truncation;
  const std::uint64_t ground_mask = (1ull << truncation) - 1;
  const int start = n + 1;
  if (std::popcount(ground_mask) >= start) {
    for_each_k_submask(bit_positions(ground_mask), start, [&](std::uint64_t mask) {
      std::vector<std::uint64_t> key{mask};
      build_table(f, ground_mask, m, key, mask, 1, tab);
      return false;
    });
  }
  return Strategy(m, start, std::move(tab));
}

}  // namespace trasdim
