#include "trasdim/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trasdim {

namespace {

std::vector<int> checked_window(const std::vector<int>& scales) {
  if (scales.empty()) throw std::invalid_argument("scale window is empty");
  std::vector<int> w = scales;
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  if (w.front() < 1) throw std::invalid_argument("scale labels must be positive");
  if (w.back() > 64) throw std::invalid_argument("scale labels beyond 64 are unsupported");
  return w;
}

// Feasibility of tau implies feasibility of sigma when tau's slots embed
// injectively into sigma with no scale increased: reassign each class of
// the tau witness to its image (a class of scale-r dimension 0 also has
// scale-r' dimension 0 for r' <= r) and leave the rest of sigma empty.
// Greedy matching largest-first decides embeddability of sorted tuples.
bool subsumes(const std::vector<int>& tau, const std::vector<int>& sigma) {
  if (tau.size() > sigma.size()) return false;
  auto t = tau.rbegin();
  auto s = sigma.rbegin();
  while (t != tau.rend() && s != sigma.rend()) {
    if (*s <= *t) {
      ++t;
      ++s;
    } else {
      ++s;
    }
  }
  return t == tau.rend();
}

DecomposeResult solve_sigma(const MetricSpace& x, const std::vector<int>& sigma,
                            const ApproxParams& params) {
  ScaleSlots slots;
  for (int r : sigma) slots.scales.push_back(static_cast<double>(r));
  DecomposeOptions opts;
  opts.node_budget = params.node_budget;
  opts.warm_start = params.warm_start;
  return decompose(x, slots, params.bound, opts);
}

}  // namespace

FamilyResult family_M(const MetricSpace& x, const ApproxParams& params) {
  if (std::isnan(params.bound) || params.bound < 0)
    throw std::invalid_argument("family_M: bound must be >= 0");
  FamilyResult result;
  result.scales = checked_window(params.scales);
  result.bound = params.bound;
  const auto& window = result.scales;
  const int w = static_cast<int>(window.size());

  std::vector<std::vector<int>> feasible, infeasible;

  // Subsets by size then lexicographically over the sorted window.
  std::vector<std::vector<int>> subsets;
  for (int size = 1; size <= w; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    auto rec = [&](auto&& self, int from, int depth) -> void {
      if (depth == size) {
        std::vector<int> sigma;
        for (int i : pick) sigma.push_back(window[static_cast<std::size_t>(i)]);
        subsets.push_back(std::move(sigma));
        return;
      }
      for (int i = from; i < w; ++i) {
        pick[static_cast<std::size_t>(depth)] = i;
        self(self, i + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
  }

  std::vector<FinSet> members;
  for (const auto& sigma : subsets) {
    FamilyVerdict v;
    v.sigma = sigma;
    const bool known_feasible =
        std::any_of(feasible.begin(), feasible.end(),
                    [&](const auto& f) { return subsumes(f, sigma); });
    const bool known_infeasible =
        !known_feasible &&
        std::any_of(infeasible.begin(), infeasible.end(),
                    [&](const auto& g) { return subsumes(sigma, g); });
    if (known_feasible) {
      v.status = SolveStatus::Feasible;
      v.inferred = true;
    } else if (known_infeasible) {
      v.status = SolveStatus::Infeasible;
      v.inferred = true;
    } else {
      DecomposeResult solved = solve_sigma(x, sigma, params);
      v.status = solved.status;
      v.nodes = solved.stats.nodes;
      v.witness = std::move(solved.witness);
      if (v.status == SolveStatus::Unknown) {
        result.verdicts.push_back(std::move(v));
        return result;  // poisoned: complete stays false
      }
      (v.status == SolveStatus::Feasible ? feasible : infeasible).push_back(sigma);
    }
    if (v.status == SolveStatus::Infeasible) members.push_back(FinSet::from_labels(sigma));
    result.verdicts.push_back(std::move(v));
  }

  result.family = SetFamily::explicit_family(GroundSet{window.back()}, members);
  if (!is_inclusive(*result.family))
    throw std::logic_error("family_M: computed family is not inclusive");
  result.complete = true;
  return result;
}

FamilyResult family_A(const MetricSpace& x, const ApproxParams& params) {
  return family_M(x, params);
}

TrasdimReport trasdim_ord(const MetricSpace& x, const ApproxParams& params) {
  TrasdimReport report;
  report.family = family_M(x, params);
  if (report.family.complete) report.ord = ord(*report.family.family);
  return report;
}

ProfileFReport derive_profile_f(const FamilyResult& family, int n) {
  if (n < 0) throw std::invalid_argument("derive_profile_f: n must be a natural");
  ProfileFReport report;
  report.n = n;
  if (!family.complete) return report;
  report.complete = true;

  const auto& window = family.scales;
  auto in_window = [&](int k) {
    return std::binary_search(window.begin(), window.end(), k);
  };
  for (int k : window) {
    bool eligible = true;
    for (int i = 0; i <= n && eligible; ++i) eligible = in_window(k + i);
    if (!eligible) continue;
    const SetFamily derived =
        derive(*family.family, FinSet::interval(k, k + n));
    report.table.push_back({k, ord(derived) + 1});
  }
  for (std::size_t i = 1; i < report.table.size(); ++i)
    if (report.table[i].f < report.table[i - 1].f) {
      report.monotone = false;
      report.violations.push_back(report.table[i].k);
    }

  if (!report.table.empty() && report.monotone) {
    std::vector<int> lookup(static_cast<std::size_t>(window.back()), 0);
    std::size_t next = 0;
    int current = report.table.front().f;
    for (int v = 1; v <= window.back(); ++v) {
      if (next < report.table.size() && report.table[next].k == v)
        current = report.table[next++].f;
      lookup[static_cast<std::size_t>(v - 1)] = current;
    }
    report.profile = APDProfile{n + 1, {MonotoneFn::lookup(lookup)}};
  }
  return report;
}

ProfileFReport derive_profile_f(const MetricSpace& x, int n, const ApproxParams& params) {
  return derive_profile_f(family_M(x, params), n);
}

std::vector<std::vector<int>> all_nondecreasing_tuples(const std::vector<int>& scales,
                                                       int arity) {
  if (arity < 1) throw std::invalid_argument("tuple arity must be >= 1");
  const std::vector<int> window = checked_window(scales);
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(static_cast<std::size_t>(arity));
  auto rec = [&](auto&& self, int from, int depth) -> void {
    if (depth == arity) {
      out.push_back(tuple);
      return;
    }
    for (int i = from; i < static_cast<int>(window.size()); ++i) {
      tuple[static_cast<std::size_t>(depth)] = window[static_cast<std::size_t>(i)];
      self(self, i, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

ProfileCheckReport profile_check(const MetricSpace& x, const APDProfile& profile,
                                 const std::vector<std::vector<int>>& tuples,
                                 const ApproxParams& params) {
  ProfileCheckReport report;
  report.complete = true;
  report.all_passed = true;
  if (profile.alpha0 < 1)
    throw std::invalid_argument("profile_check: alpha_0 must be >= 1");
  for (const auto& tuple : tuples) {
    if (static_cast<int>(tuple.size()) != profile.arity())
      throw std::invalid_argument("profile_check: tuple arity must match the profile");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i] < 1) throw std::invalid_argument("profile_check: scales must be positive");
      if (i && tuple[i] < tuple[i - 1])
        throw std::invalid_argument("profile_check: tuples must be non-decreasing");
    }

    ScaleSlots slots;
    for (int c = 0; c < profile.alpha0; ++c)
      slots.scales.push_back(static_cast<double>(tuple.front()));
    for (std::size_t k = 1; k < tuple.size(); ++k) {
      const int copies = profile.alphas[k - 1](tuple[k - 1]);
      for (int c = 0; c < copies; ++c)
        slots.scales.push_back(static_cast<double>(tuple[k]));
    }
    DecomposeOptions opts;
    opts.node_budget = params.node_budget;
    opts.warm_start = params.warm_start;
    DecomposeResult solved = decompose(x, slots, params.bound, opts);

    TupleVerdict v;
    v.tuple = tuple;
    v.status = solved.status;
    v.witness = std::move(solved.witness);
    if (v.status == SolveStatus::Unknown) report.complete = false;
    if (v.status != SolveStatus::Feasible) report.all_passed = false;
    report.tuples.push_back(std::move(v));
  }
  return report;
}

}  // namespace trasdim
