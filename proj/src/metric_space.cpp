#include "trasdim/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trasdim {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

std::string pair_str(int x, int y) {
  std::ostringstream out;
  out << "(" << x << "," << y << ")";
  return out.str();
}

}  // namespace

MetricSpace::MetricSpace(int n, std::vector<double> flat) : n_(n), d_(std::move(flat)) {}

void MetricSpace::validate(bool structural) const {
  if (n_ < 1) fail("MetricSpace: need at least one point");
  if (d_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
    fail("MetricSpace: matrix size mismatch");
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const double v = d_[static_cast<std::size_t>(i) * n_ + j];
      if (std::isnan(v)) fail("MetricSpace: NaN distance at " + pair_str(i, j));
      if (v < 0) fail("MetricSpace: negative distance at " + pair_str(i, j));
      if (i == j && v != 0) fail("MetricSpace: nonzero diagonal at " + pair_str(i, j));
      if (v != d_[static_cast<std::size_t>(j) * n_ + i])
        fail("MetricSpace: asymmetric at " + pair_str(i, j));
    }
  }
  // Self-built matrices satisfy the triangle inequality by construction;
  // re-verify them only while the cubic sweep stays cheap.
  if (structural && n_ > 512) return;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const double dij = dist(i, j);
      for (int k = 0; k < n_; ++k)
        if (dist(i, k) > dij + dist(j, k))
          fail("MetricSpace: triangle inequality fails for (" + std::to_string(i) +
               "," + std::to_string(j) + "," + std::to_string(k) + ")");
    }
}

double MetricSpace::dist(int x, int y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_) fail("MetricSpace: point id out of range");
  return d_[static_cast<std::size_t>(x) * n_ + y];
}

MetricSpace MetricSpace::from_matrix(const std::vector<std::vector<double>>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : d) {
    if (static_cast<int>(row.size()) != n) fail("MetricSpace: matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  MetricSpace s(n, std::move(flat));
  s.validate(false);
  return s;
}

MetricSpace MetricSpace::from_graph(int n,
                                    const std::vector<std::tuple<int, int, double>>& edges) {
  if (n < 1) fail("MetricSpace: need at least one point");
  std::vector<double> d(static_cast<std::size_t>(n) * n, kInf);
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i) * n + i] = 0;
  for (const auto& [u, v, w] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) fail("MetricSpace: edge endpoint out of range");
    if (std::isnan(w) || w < 0 || w == kInf) fail("MetricSpace: bad edge weight");
    auto& duv = d[static_cast<std::size_t>(u) * n + v];
    if (w < duv) {
      duv = w;
      d[static_cast<std::size_t>(v) * n + u] = w;
    }
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const double dik = d[static_cast<std::size_t>(i) * n + k];
      if (dik == kInf) continue;
      for (int j = 0; j < n; ++j) {
        const double via = dik + d[static_cast<std::size_t>(k) * n + j];
        auto& dij = d[static_cast<std::size_t>(i) * n + j];
        if (via < dij) dij = via;
      }
    }
  MetricSpace s(n, std::move(d));
  s.validate(true);
  return s;
}

MetricSpace MetricSpace::grid(int side, int dim, Norm norm) {
  if (side < 0) fail("MetricSpace: grid side must be >= 0");
  if (dim < 1) fail("MetricSpace: grid dimension must be >= 1");
  long long total = 1;
  for (int i = 0; i < dim; ++i) {
    total *= side + 1;
    if (total > 2500) fail("MetricSpace: grid larger than 2500 points");
  }
  const int n = static_cast<int>(total);
  std::vector<std::vector<int>> coords(static_cast<std::size_t>(n));
  for (int id = 0; id < n; ++id) {
    std::vector<int> c(static_cast<std::size_t>(dim));
    int rest = id;
    for (int axis = dim - 1; axis >= 0; --axis) {
      c[static_cast<std::size_t>(axis)] = rest % (side + 1);
      rest /= side + 1;
    }
    coords[static_cast<std::size_t>(id)] = std::move(c);
  }
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long long acc = 0;
      for (int axis = 0; axis < dim; ++axis) {
        const long long delta = std::abs(coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(axis)] -
                                         coords[static_cast<std::size_t>(j)][static_cast<std::size_t>(axis)]);
        acc = norm == Norm::L1 ? acc + delta : std::max(acc, delta);
      }
      d[static_cast<std::size_t>(i) * n + j] = static_cast<double>(acc);
      d[static_cast<std::size_t>(j) * n + i] = static_cast<double>(acc);
    }
  MetricSpace s(n, std::move(d));
  s.meta_ = GridMeta{side, dim, norm};
  s.validate(true);
  return s;
}

MetricSpace MetricSpace::disjoint_union(const MetricSpace& a, const MetricSpace& b) {
  const int n = a.n_ + b.n_;
  std::vector<double> d(static_cast<std::size_t>(n) * n, kInf);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) d[static_cast<std::size_t>(i) * n + j] = a.dist(i, j);
  for (int i = 0; i < b.n_; ++i)
    for (int j = 0; j < b.n_; ++j)
      d[static_cast<std::size_t>(a.n_ + i) * n + (a.n_ + j)] = b.dist(i, j);
  MetricSpace s(n, std::move(d));
  s.validate(true);
  return s;
}

std::vector<int> MetricSpace::grid_coords(int id) const {
  if (!meta_) fail("MetricSpace: not a grid");
  if (id < 0 || id >= n_) fail("MetricSpace: point id out of range");
  std::vector<int> c(static_cast<std::size_t>(meta_->dim));
  int rest = id;
  for (int axis = meta_->dim - 1; axis >= 0; --axis) {
    c[static_cast<std::size_t>(axis)] = rest % (meta_->side + 1);
    rest /= meta_->side + 1;
  }
  return c;
}

int MetricSpace::grid_id(const std::vector<int>& coords) const {
  if (!meta_) fail("MetricSpace: not a grid");
  if (static_cast<int>(coords.size()) != meta_->dim)
    fail("MetricSpace: wrong coordinate count");
  int id = 0;
  for (int axis = 0; axis < meta_->dim; ++axis) {
    const int c = coords[static_cast<std::size_t>(axis)];
    if (c < 0 || c > meta_->side) fail("MetricSpace: coordinate out of range");
    id = id * (meta_->side + 1) + c;
  }
  return id;
}

namespace {

std::vector<int> checked_subset(const MetricSpace& x, const std::vector<int>& y) {
  std::vector<int> sorted = y;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail("point subset contains duplicates");
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= x.size()))
    fail("point subset out of range");
  return sorted;
}

SubspacePartition components_of(const MetricSpace& x, const std::vector<int>& members,
                                const std::vector<std::vector<int>>& adj) {
  const int m = static_cast<int>(members.size());
  SubspacePartition part;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int s = 0; s < m; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> stack{s}, block;
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      block.push_back(members[static_cast<std::size_t>(v)]);
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
    std::sort(block.begin(), block.end());
    part.diameters.push_back(set_diameter(x, block));
    part.blocks.push_back(std::move(block));
  }
  return part;
}

}  // namespace

SubspacePartition scale_components(const MetricSpace& x, const std::vector<int>& y,
                                   double r) {
  if (!(r > 0)) fail("scale_components: r must be positive");
  const std::vector<int> members = checked_subset(x, y);
  const int m = static_cast<int>(members.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (x.dist(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]) < r) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
      }
  return components_of(x, members, adj);
}

SubspacePartition scale_components_chain_oracle(const MetricSpace& x,
                                                const std::vector<int>& y, double r) {
  if (!(r > 0)) fail("scale_components: r must be positive");
  const std::vector<int> members = checked_subset(x, y);
  const int m = static_cast<int>(members.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool meet = false;
      for (int k = 0; k < m && !meet; ++k)
        meet = x.dist(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(k)]) < r &&
               x.dist(members[static_cast<std::size_t>(j)], members[static_cast<std::size_t>(k)]) < r;
      if (meet) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
      }
    }
  return components_of(x, members, adj);
}

bool is_zero_dim(const MetricSpace& x, const std::vector<int>& y, double r,
                 double bound) {
  if (bound < 0) fail("is_zero_dim: bound must be >= 0");
  const SubspacePartition part = scale_components(x, y, r);
  return std::all_of(part.diameters.begin(), part.diameters.end(),
                     [&](double d) { return d <= bound; });
}

double set_diameter(const MetricSpace& x, const std::vector<int>& y) {
  double best = 0;
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j)
      best = std::max(best, x.dist(y[i], y[j]));
  return best;
}

double mesh(const MetricSpace& x, const std::vector<std::vector<int>>& blocks) {
  double best = 0;
  for (const auto& b : blocks) best = std::max(best, set_diameter(x, b));
  return best;
}

bool is_r_disjoint(const MetricSpace& x, const std::vector<std::vector<int>>& blocks,
                   double r) {
  if (!(r > 0)) fail("is_r_disjoint: r must be positive");
  std::vector<bool> used(static_cast<std::size_t>(x.size()), false);
  for (const auto& b : blocks)
    for (int p : b) {
      if (p < 0 || p >= x.size()) fail("is_r_disjoint: point id out of range");
      if (used[static_cast<std::size_t>(p)]) fail("is_r_disjoint: blocks overlap");
      used[static_cast<std::size_t>(p)] = true;
    }
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a + 1; b < blocks.size(); ++b)
      for (int p : blocks[a])
        for (int q : blocks[b])
          if (x.dist(p, q) < r) return false;
  return true;
}

}  // namespace trasdim
