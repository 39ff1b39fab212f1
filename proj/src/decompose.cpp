#include "trasdim/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace trasdim {

namespace {

class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : w_(static_cast<std::size_t>((n + 63) / 64), 0) {}
  void set(int i) { w_[static_cast<std::size_t>(i >> 6)] |= 1ull << (i & 63); }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  void merge(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  }
  void assign_from(const Bits& o) { w_ = o.w_; }

 private:
  std::vector<std::uint64_t> w_;
};

// One diameter-checked component of a slot's partial class: the points it
// holds and the union of their far sets (far = beyond the bound). The
// component violates the bound exactly when the two intersect.
struct Comp {
  Bits members;
  Bits far;
};

struct Solver {
  const MetricSpace& x;
  const std::vector<double>& scales;
  double bound;
  std::uint64_t budget;

  int n = 0;
  int m = 0;
  std::vector<int> order;
  std::vector<Bits> far;                 // per point: d > bound
  std::vector<std::vector<Bits>> near;   // per distinct scale: per point d < scale
  std::vector<int> slot_near;            // slot -> index into near
  std::vector<std::vector<Comp>> comps;  // per slot
  std::vector<int> assign;
  std::vector<int> slot_count;

  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<int> found_assignment;

  Solver(const MetricSpace& space, const std::vector<double>& slot_scales, double b,
         std::uint64_t node_budget)
      : x(space), scales(slot_scales), bound(b), budget(node_budget) {
    n = x.size();
    m = static_cast<int>(scales.size());

    far.assign(static_cast<std::size_t>(n), Bits(n));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (x.dist(p, q) > bound) far[static_cast<std::size_t>(p)].set(q);

    std::map<double, int> scale_index;
    slot_near.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      auto [it, fresh] = scale_index.emplace(scales[static_cast<std::size_t>(j)],
                                             static_cast<int>(near.size()));
      if (fresh) {
        std::vector<Bits> per_point(static_cast<std::size_t>(n), Bits(n));
        const double r = scales[static_cast<std::size_t>(j)];
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q)
            if (q != p && x.dist(p, q) < r) per_point[static_cast<std::size_t>(p)].set(q);
        near.push_back(std::move(per_point));
      }
      slot_near[static_cast<std::size_t>(j)] = it->second;
    }

    const double max_scale = *std::max_element(scales.begin(), scales.end());
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (q != p && x.dist(p, q) < max_scale) ++degree[static_cast<std::size_t>(p)];
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
    });

    comps.assign(static_cast<std::size_t>(m), {});
    assign.assign(static_cast<std::size_t>(n), -1);
    slot_count.assign(static_cast<std::size_t>(m), 0);
  }

  // Depth-first over points in order; true once a full assignment is found.
  bool dfs(int idx) {
    if (idx == n) {
      found_assignment = assign;
      return true;
    }
    const int p = order[static_cast<std::size_t>(idx)];
    std::vector<double> tried_empty;
    for (int j = 0; j < m; ++j) {
      const double r = scales[static_cast<std::size_t>(j)];
      if (slot_count[static_cast<std::size_t>(j)] == 0) {
        // Empty slots of equal scale are interchangeable; try only the first.
        if (std::find(tried_empty.begin(), tried_empty.end(), r) != tried_empty.end())
          continue;
        tried_empty.push_back(r);
      }
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }

      auto& slot_comps = comps[static_cast<std::size_t>(j)];
      const Bits& reach = near[static_cast<std::size_t>(slot_near[static_cast<std::size_t>(j)])]
                              [static_cast<std::size_t>(p)];
      Comp merged{Bits(n), Bits(n)};
      merged.members.set(p);
      merged.far.assign_from(far[static_cast<std::size_t>(p)]);
      std::vector<int> hits;
      for (int i = 0; i < static_cast<int>(slot_comps.size()); ++i)
        if (slot_comps[static_cast<std::size_t>(i)].members.intersects(reach)) {
          hits.push_back(i);
          merged.members.merge(slot_comps[static_cast<std::size_t>(i)].members);
          merged.far.merge(slot_comps[static_cast<std::size_t>(i)].far);
        }
      if (merged.members.intersects(merged.far)) continue;  // diameter > bound

      std::vector<Comp> saved;
      saved.reserve(hits.size());
      for (auto it = hits.rbegin(); it != hits.rend(); ++it) {
        saved.push_back(std::move(slot_comps[static_cast<std::size_t>(*it)]));
        slot_comps.erase(slot_comps.begin() + *it);
      }
      slot_comps.push_back(std::move(merged));
      assign[static_cast<std::size_t>(p)] = j;
      ++slot_count[static_cast<std::size_t>(j)];

      const bool found = dfs(idx + 1);

      slot_comps.pop_back();
      for (std::size_t k = hits.size(); k-- > 0;)
        slot_comps.insert(slot_comps.begin() + hits[hits.size() - 1 - k],
                          std::move(saved[k]));
      assign[static_cast<std::size_t>(p)] = -1;
      --slot_count[static_cast<std::size_t>(j)];

      if (found) return true;
      if (exhausted) return false;
    }
    return false;
  }
};

bool witness_valid(const MetricSpace& x, const std::vector<double>& scales,
                   double bound, const std::vector<int>& assignment) {
  const int m = static_cast<int>(scales.size());
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(m));
  for (int p = 0; p < x.size(); ++p) {
    const int j = assignment[static_cast<std::size_t>(p)];
    if (j < 0 || j >= m) return false;
    classes[static_cast<std::size_t>(j)].push_back(p);
  }
  for (int j = 0; j < m; ++j)
    if (!is_zero_dim(x, classes[static_cast<std::size_t>(j)],
                     scales[static_cast<std::size_t>(j)], bound))
      return false;
  return true;
}

// Pattern candidates for grid spaces plus the whole-space single classes.
// Every candidate is validated class by class; none can affect verdicts
// beyond supplying an already-verified witness.
std::optional<ColoringWitness> try_warm_start(const MetricSpace& x,
                                              const std::vector<double>& scales,
                                              double bound) {
  const int n = x.size();
  const int m = static_cast<int>(scales.size());
  std::vector<std::vector<int>> candidates;

  for (int j = 0; j < m; ++j)
    candidates.emplace_back(static_cast<std::size_t>(n), j);

  const auto& meta = x.grid_meta();
  const long long run = static_cast<long long>(std::floor(std::min(bound, 1e9))) + 1;
  if (meta && meta->dim == 1 && run >= 1) {
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) a[static_cast<std::size_t>(p)] = static_cast<int>((p / run) % m);
    candidates.push_back(std::move(a));
  }
  if (meta && meta->dim == 2) {
    const long long diam_side =
        meta->norm == MetricSpace::Norm::L1 ? run / 2 + (run % 2 ? 1 : 0) : run;
    std::vector<long long> sides{diam_side};
    auto cell_of = [&](int p, long long c) {
      const auto co = x.grid_coords(p);
      return std::pair<long long, long long>(co[0] / c, co[1] / c);
    };
    if (m >= 4) {
      for (long long c : sides) {
        if (c < 1) continue;
        for (int base : {0, m - 4}) {
          std::vector<int> a(static_cast<std::size_t>(n));
          for (int p = 0; p < n; ++p) {
            const auto [ca, cb] = cell_of(p, c);
            a[static_cast<std::size_t>(p)] =
                base + static_cast<int>(2 * (ca % 2) + (cb % 2));
          }
          candidates.push_back(std::move(a));
        }
      }
    }
    if (m >= 3) {
      for (long long c : sides) {
        if (c < 1) continue;
        // Offset bricks of height c and width 2c, colors cycling by three.
        std::vector<int> a(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) {
          const auto co = x.grid_coords(p);
          const long long row = co[0] / c;
          const long long shifted = co[1] + (row % 2) * c;
          a[static_cast<std::size_t>(p)] = static_cast<int>((shifted / (2 * c) + row) % 3);
        }
        candidates.push_back(std::move(a));
      }
    }
    // Greedy cell coloring: lowest slot whose cells stay scale-separated.
    for (long long c : sides) {
      if (c < 1) continue;
      const long long cells_per_axis = (meta->side / c) + 1;
      std::vector<std::vector<int>> cell_points(
          static_cast<std::size_t>(cells_per_axis * cells_per_axis));
      for (int p = 0; p < n; ++p) {
        const auto [ca, cb] = cell_of(p, c);
        cell_points[static_cast<std::size_t>(ca * cells_per_axis + cb)].push_back(p);
      }
      std::vector<int> cell_slot(cell_points.size(), -1);
      auto min_dist = [&](const std::vector<int>& a, const std::vector<int>& b) {
        double best = kInf;
        for (int p : a)
          for (int q : b) best = std::min(best, x.dist(p, q));
        return best;
      };
      bool ok = true;
      for (std::size_t ci = 0; ci < cell_points.size() && ok; ++ci) {
        if (cell_points[ci].empty()) continue;
        int pick = -1;
        for (int j = 0; j < m && pick < 0; ++j) {
          bool fits = true;
          for (std::size_t cj = 0; cj < ci && fits; ++cj)
            if (cell_slot[cj] == j &&
                min_dist(cell_points[ci], cell_points[cj]) < scales[static_cast<std::size_t>(j)])
              fits = false;
          if (fits) pick = j;
        }
        if (pick < 0)
          ok = false;
        else
          cell_slot[ci] = pick;
      }
      if (ok) {
        std::vector<int> a(static_cast<std::size_t>(n));
        for (std::size_t ci = 0; ci < cell_points.size(); ++ci)
          for (int p : cell_points[ci]) a[static_cast<std::size_t>(p)] = cell_slot[ci];
        candidates.push_back(std::move(a));
      }
    }
  }

  for (const auto& a : candidates)
    if (witness_valid(x, scales, bound, a)) return ColoringWitness{a};
  return std::nullopt;
}

}  // namespace

DecomposeResult decompose(const MetricSpace& x, const ScaleSlots& slots, double bound,
                          DecomposeOptions opts) {
  if (slots.scales.empty()) throw std::invalid_argument("decompose: no slots");
  for (double r : slots.scales)
    if (!(r > 0)) throw std::invalid_argument("decompose: slot scales must be positive");
  if (std::isnan(bound) || bound < 0)
    throw std::invalid_argument("decompose: bound must be >= 0");

  DecomposeResult result;
  result.stats.node_budget = opts.node_budget;

  if (opts.warm_start) {
    if (auto w = try_warm_start(x, slots.scales, bound)) {
      result.status = SolveStatus::Feasible;
      result.witness = std::move(w);
      result.stats.warm_start_used = true;
      return result;
    }
  }

  Solver solver(x, slots.scales, bound, opts.node_budget);
  const bool found = solver.dfs(0);
  result.stats.nodes = solver.nodes;
  if (found) {
    if (!witness_valid(x, slots.scales, bound, solver.found_assignment))
      throw std::logic_error("decompose: search produced an invalid witness");
    result.status = SolveStatus::Feasible;
    result.witness = ColoringWitness{solver.found_assignment};
  } else if (solver.exhausted) {
    result.status = SolveStatus::Unknown;
    result.stats.budget_exhausted = true;
  } else {
    result.status = SolveStatus::Infeasible;
  }
  return result;
}

}  // namespace trasdim
