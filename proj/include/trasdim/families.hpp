#ifndef TRASDIM_FAMILIES_HPP
#define TRASDIM_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "trasdim/decompose.hpp"
#include "trasdim/metric_space.hpp"
#include "trasdim/profile.hpp"
#include "trasdim/set_family.hpp"

namespace trasdim {

// Truncation parameters: the scale window and the mesh bound that replace
// "uniformly bounded" on finite spaces. Every report carries them.
struct ApproxParams {
  std::vector<int> scales;  // distinct positive scale labels, any order
  double bound = 0;         // B >= 0
  std::uint64_t node_budget = 20'000'000;
  bool warm_start = true;
};

// Per-sigma record of how the verdict was obtained.
struct FamilyVerdict {
  std::vector<int> sigma;  // sorted scale labels
  SolveStatus status = SolveStatus::Unknown;
  bool inferred = false;   // true when implied by an earlier verdict
  std::uint64_t nodes = 0;
  std::optional<ColoringWitness> witness;  // present iff solved Feasible
};

struct FamilyResult {
  // Unknown from any needed solve poisons the whole family.
  bool complete = false;
  std::optional<SetFamily> family;  // present iff complete
  std::vector<FamilyVerdict> verdicts;
  std::vector<int> scales;  // sorted window
  double bound = 0;
};

// sigma is a member iff decompose(x, sigma as slots, B) is Infeasible.
// Enumerates subsets of the window by size then lexicographically, reusing
// earlier verdicts: a feasible sigma stays feasible for supersets and for
// pointwise-smaller scale tuples, an infeasible one propagates the other
// way. The result is inclusive by construction and this is verified.
FamilyResult family_M(const MetricSpace& x, const ApproxParams& params);

// At a fixed bound B a class admits an i-disjoint mesh-<=B decomposition
// exactly when all its scale-i-components have diameter <= B: components
// are i-disjoint themselves, and any i-disjoint pieces are unions of
// components. Hence this family equals family_M at truncation and is
// computed by the same solver.
FamilyResult family_A(const MetricSpace& x, const ApproxParams& params);

struct TrasdimReport {
  FamilyResult family;
  std::optional<int> ord;  // Ord of the truncated family, iff complete
};

// Ord of family_M(x, params): the truncation statement standing in for the
// transfinite asymptotic dimension of x.
TrasdimReport trasdim_ord(const MetricSpace& x, const ApproxParams& params);

struct ProfileFEntry {
  int k = 0;
  int f = 0;  // Ord of the family derived by {k..k+n}, plus one
};

struct ProfileFReport {
  bool complete = false;
  int n = 0;
  std::vector<ProfileFEntry> table;     // k ascending; k..k+n inside window
  bool monotone = true;
  std::vector<int> violations;          // k where f(k) < f(previous k)
  // (n+1, f) with f extended to a total lookup on {1..max scale}: values
  // below the first tabulated k reuse its value, gaps and the right edge
  // reuse the last preceding value. Absent when the table is empty or not
  // monotone.
  std::optional<APDProfile> profile;
};

// f(k) = Ord of the derived family M^{k..k+n} plus one, for every k with
// {k..k+n} inside the window. Monotonicity is checked and violations are
// reported, never clamped away.
ProfileFReport derive_profile_f(const MetricSpace& x, int n, const ApproxParams& params);
// Same from an already computed family (must be complete).
ProfileFReport derive_profile_f(const FamilyResult& family, int n);

struct TupleVerdict {
  std::vector<int> tuple;  // non-decreasing scales (r_0..r_m)
  SolveStatus status = SolveStatus::Unknown;
  std::optional<ColoringWitness> witness;
};

struct ProfileCheckReport {
  bool complete = false;    // no Unknown verdicts
  bool all_passed = false;  // every sampled tuple Feasible
  std::vector<TupleVerdict> tuples;
};

// For each non-decreasing tuple (r_0..r_m): alpha_0 slots at r_0 plus
// alpha_k(r_{k-1}) slots at r_k, then decompose. A sampled check over the
// supplied tuples, not a proof.
ProfileCheckReport profile_check(const MetricSpace& x, const APDProfile& profile,
                                 const std::vector<std::vector<int>>& tuples,
                                 const ApproxParams& params);

// All non-decreasing arity-tuples over the window, lexicographic.
std::vector<std::vector<int>> all_nondecreasing_tuples(const std::vector<int>& scales,
                                                       int arity);

}  // namespace trasdim

#endif
