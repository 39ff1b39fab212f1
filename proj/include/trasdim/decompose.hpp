#ifndef TRASDIM_DECOMPOSE_HPP
#define TRASDIM_DECOMPOSE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trasdim/metric_space.hpp"

namespace trasdim {

// One decomposition slot per entry; slot j asks for a point class whose
// scale-scales[j]-components all have diameter <= B. Repetition allowed.
struct ScaleSlots {
  std::vector<double> scales;  // all > 0
};

// Total assignment points -> slot indices; empty classes are permitted.
struct ColoringWitness {
  std::vector<int> assignment;
};

enum class SolveStatus { Feasible, Infeasible, Unknown };

struct SolverStats {
  std::uint64_t nodes = 0;        // attempted point-slot assignments
  std::uint64_t node_budget = 0;
  bool budget_exhausted = false;  // true only on Unknown
  bool warm_start_used = false;
  std::string mode = "sequential";
};

struct DecomposeOptions {
  std::uint64_t node_budget = 20'000'000;
  bool warm_start = true;
};

struct DecomposeResult {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<ColoringWitness> witness;  // present iff Feasible, re-verified
  SolverStats stats;
};

// Exact search for a decomposition of x into one class per slot such that
// class j passes is_zero_dim at (scales[j], bound).
//
// Points are processed in a fixed order: descending degree in the
// d < max-scale graph, ties by point id; slots are tried lowest index
// first, skipping all but the first of the currently empty slots that
// share a scale. Each slot keeps its components incrementally with
// rollback, and a branch is pruned as soon as some component of the
// partial assignment would contain a pair at distance > bound.
//
// Feasible witnesses are re-verified class by class before returning.
// Infeasible certifies the search space was exhausted; running out of the
// node budget yields Unknown, never Infeasible. Warm starts (whole-space
// single classes, run patterns on 1-d grids, cell patterns on 2-d grids)
// are validated candidates only and cannot affect the verdict otherwise.
DecomposeResult decompose(const MetricSpace& x, const ScaleSlots& slots, double bound,
                          DecomposeOptions opts = {});

}  // namespace trasdim

#endif
