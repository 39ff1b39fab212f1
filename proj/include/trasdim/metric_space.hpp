#ifndef TRASDIM_METRIC_SPACE_HPP
#define TRASDIM_METRIC_SPACE_HPP

#include <limits>
#include <optional>
#include <tuple>
#include <vector>

namespace trasdim {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Finite infinity-pseudometric space: symmetric, zero diagonal, triangle
// inequality under infinity-absorbing addition. Distinct points at distance
// 0 and pairs at distance infinity are both permitted. Distances are stored
// as doubles and compared exactly; integer-valued inputs (graphs, grids)
// stay exact.
class MetricSpace {
 public:
  enum class Norm { L1, LInf };

  // Retained for spaces built by grid(); coordinates run over [0..side]^dim
  // and point ids are row-major with the first coordinate most significant.
  struct GridMeta {
    int side = 0;
    int dim = 0;
    Norm norm = Norm::L1;
  };

  // Validates symmetry, zero diagonal, absence of negatives and NaN, and the
  // triangle inequality; throws std::invalid_argument naming the first
  // offending triple.
  static MetricSpace from_matrix(const std::vector<std::vector<double>>& d);

  // Shortest-path pseudometric of an undirected weighted graph on n points.
  // Unreachable pairs get distance infinity. Edge weights must be finite,
  // nonnegative and not NaN; zero weights are allowed.
  static MetricSpace from_graph(int n,
                                const std::vector<std::tuple<int, int, double>>& edges);

  // Integer grid [0..side]^dim under the l1 or linf norm.
  static MetricSpace grid(int side, int dim, Norm norm);

  // Same point set side by side with all cross distances infinity; points of
  // b are shifted by a.size().
  static MetricSpace disjoint_union(const MetricSpace& a, const MetricSpace& b);

  int size() const { return n_; }
  double dist(int x, int y) const;

  const std::optional<GridMeta>& grid_meta() const { return meta_; }
  std::vector<int> grid_coords(int id) const;           // requires grid_meta
  int grid_id(const std::vector<int>& coords) const;    // requires grid_meta

 private:
  MetricSpace(int n, std::vector<double> flat);
  // The self-built matrices (graph closure, grid norms, disjoint union)
  // satisfy the invariants by construction; the full O(n^3) revalidation is
  // re-run for them only up to a size cutoff.
  void validate(bool structural) const;

  int n_ = 0;
  std::vector<double> d_;  // row-major n*n
  std::optional<GridMeta> meta_;
};

// Partition of a point subset; blocks are sorted ascending and ordered by
// their smallest element, diameters[i] = diameter of blocks[i].
struct SubspacePartition {
  std::vector<std::vector<int>> blocks;
  std::vector<double> diameters;
};

// Scale-r-components of Y: connected components of the graph on Y with
// edges d(x,y) < r. Balls are open and chain witnesses live inside Y; an
// edge d(x,y) < r makes the balls B(x,r), B(y,r) in Y intersect (witness y)
// and a witness z in Y yields the edges x-z, z-y, so this graph has the
// same components as the literal ball-intersection chain relation (see
// scale_components_chain_oracle, kept for cross-checking).
SubspacePartition scale_components(const MetricSpace& x, const std::vector<int>& y,
                                   double r);

// Literal form of the definition: components of the relation "the open
// r-balls of the two points in Y intersect", closed transitively.
SubspacePartition scale_components_chain_oracle(const MetricSpace& x,
                                                const std::vector<int>& y, double r);

// Every scale-r-component of Y has diameter <= bound. The explicit bound
// replaces "uniformly bounded", which is vacuous on finite spaces.
bool is_zero_dim(const MetricSpace& x, const std::vector<int>& y, double r,
                 double bound);

double set_diameter(const MetricSpace& x, const std::vector<int>& y);

// sup of block diameters, 0 for an empty family.
double mesh(const MetricSpace& x, const std::vector<std::vector<int>>& blocks);

// min over cross pairs of d >= r for every two distinct blocks. Blocks must
// be pairwise disjoint point sets; an overlap throws.
bool is_r_disjoint(const MetricSpace& x, const std::vector<std::vector<int>>& blocks,
                   double r);

}  // namespace trasdim

#endif
