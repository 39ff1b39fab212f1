#ifndef TRASDIM_SET_FAMILY_HPP
#define TRASDIM_SET_FAMILY_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trasdim/ordinal.hpp"

namespace trasdim {

// Finite set of positive integer labels in {1..64}, stored as a bitmask
// (label L <-> bit L-1). A default-constructed FinSet is empty; the empty
// value stands for the empty derivation set. Family members are always
// nonempty, which the SetFamily constructors enforce.
class FinSet {
 public:
  FinSet() = default;
  static FinSet from_bits(std::uint64_t bits);
  static FinSet of(std::initializer_list<int> labels);
  static FinSet from_labels(const std::vector<int>& labels);
  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static FinSet interval(int lo, int hi);

  bool empty() const { return bits_ == 0; }
  int size() const;
  bool contains(int label) const;
  int min_label() const;  // requires nonempty
  int max_label() const;  // requires nonempty

  FinSet united(FinSet o) const { return from_bits(bits_ | o.bits_); }
  FinSet intersect(FinSet o) const { return from_bits(bits_ & o.bits_); }
  FinSet minus(FinSet o) const { return from_bits(bits_ & ~o.bits_); }
  bool subset_of(FinSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool disjoint_with(FinSet o) const { return (bits_ & o.bits_) == 0; }

  std::vector<int> labels() const;  // ascending
  std::uint64_t bits() const { return bits_; }
  std::string to_string() const;  // "{1,2,5}"

  auto operator<=>(const FinSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Ground set {1..truncation}.
struct GroundSet {
  int truncation = 0;
  bool contains(FinSet s) const;
};

// Family of nonempty finite subsets of a ground set, either given
// explicitly or by a membership oracle evaluated on subsets of the ground.
// Values are immutable once built.
class SetFamily {
 public:
  using OracleFn = std::function<bool(FinSet)>;

  static SetFamily explicit_family(GroundSet ground, std::vector<FinSet> members);
  static SetFamily oracle_family(GroundSet ground, std::string name, OracleFn fn,
                                 std::map<std::string, std::int64_t> params = {});

  bool is_explicit() const { return members_.has_value(); }
  GroundSet ground() const { return ground_; }
  const std::vector<std::uint64_t>& member_bits() const;  // sorted, explicit only
  std::size_t size() const;  // explicit only
  bool contains(FinSet s) const;  // s must be nonempty and within ground
  FinSet support() const;  // union of members (explicit only)

  const std::string& oracle_name() const { return oracle_name_; }
  const std::map<std::string, std::int64_t>& oracle_params() const { return oracle_params_; }

 private:
  GroundSet ground_;
  std::optional<std::vector<std::uint64_t>> members_;
  OracleFn oracle_;
  std::string oracle_name_;
  std::map<std::string, std::int64_t> oracle_params_;
};

// Derived family F^sigma = { tau : tau nonempty, tau disjoint from sigma,
// tau united sigma in F }. sigma may be empty (returns F unchanged); sigma
// must lie within the ground set. Oracle families derive to oracle families.
SetFamily derive(const SetFamily& f, FinSet sigma);

// Ordinal rank of an explicit family by the recursion
//   Ord {} = 0,   Ord F = 1 + max over labels a of Ord F^{a}.
// Finite for explicit families; errors on oracle families (use ord_bounds).
int ord(const SetFamily& f);

// Rank information that is also meaningful for oracle families, computed on
// the family materialized at its truncation. A truncated family is a
// subfamily of the untruncated one, so `value` is a lower bound in general
// and exact when the input is explicit.
struct OrdResult {
  Ordinal value;
  bool exact = true;
  int truncation = 0;
};
OrdResult ord_bounds(const SetFamily& f);

// Enumerates an oracle family at its truncation into an explicit family.
// Explicit families are returned unchanged.
SetFamily materialize(const SetFamily& f);

// All nonempty subsets of members of F.
SetFamily inclusive_closure(const SetFamily& f);

// True when F contains every nonempty subset of each member.
bool is_inclusive(const SetFamily& f);

// Searches for distinct labels a_1..a_k whose prefixes {a_1..a_j} all lie in
// F. Requires an inclusive family (checked; errors otherwise). For an
// explicit inclusive family a witness exists exactly when k <= ord(F).
struct ChainWitness {
  bool found = false;
  std::vector<int> labels;
};
ChainWitness chain_witness(const SetFamily& f, int k);

// Image family under an injective relabeling of the ground labels.
// phi has one entry per ground label: phi[i] is the image of label i+1.
// Images must be distinct and in {1..64}; the image ground set is
// {1..max phi}. Explicit families only.
SetFamily map_family(const SetFamily& f, const std::vector<int>& phi);

enum class TriState { Verified, Refuted, Unknown };

// Decides Ord F < alpha + p through the derivation recursion: the bound
// holds iff Ord F^sigma < alpha for every sigma of cardinality p. Requires
// finite-form alpha > 0. For oracle families the recursion runs on the
// truncated materialization: Refuted is definitive (a subfamily rank is a
// lower bound); a verification that holds at the truncation is reported as
// Unknown for the untruncated family, together with the truncated rank.
struct OrdLessReport {
  TriState status = TriState::Unknown;
  std::optional<FinSet> refuting_sigma;  // present when Refuted
  int truncation = 0;
  std::optional<int> truncated_ord;  // present for oracle inputs
};
OrdLessReport ord_less_than(const SetFamily& f, const Ordinal& alpha, int p);

// Named membership oracles usable in family documents:
//   "card_le_min"     { sigma : |sigma| <= min sigma }
//   "card_le_const_k" { sigma : |sigma| <= k }, params: k
SetFamily builtin_oracle(const std::string& name,
                         const std::map<std::string, std::int64_t>& params, int truncation);

}  // namespace trasdim

#endif
