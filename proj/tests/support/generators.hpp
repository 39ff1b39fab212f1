#ifndef TRASDIM_TESTS_GENERATORS_HPP
#define TRASDIM_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "support/oracles.hpp"
#include "trasdim/metric_space.hpp"
#include "trasdim/set_family.hpp"

// Seeded generators; every test fixes its seed so runs are reproducible.
namespace gen {

using Rng = std::mt19937_64;

// Up to max_members uniform nonempty subsets of {1..ground}, ground <= 16.
trasdim::SetFamily random_family(Rng& rng, int ground, int max_members);

// As above, then closed under nonempty subsets (closure computed locally,
// not with the library).
trasdim::SetFamily random_inclusive_family(Rng& rng, int ground, int max_members);

oracles::Family to_naive(const trasdim::SetFamily& f);

// Random rational edge lengths (num/den, num in 1..max_num) on the complete
// graph, repaired to a metric by shortest-path closure.
trasdim::MetricSpace random_metric(Rng& rng, int n, int max_num = 20, int den = 2);

// Each point of {0..n-1} kept with probability 1/2.
std::vector<int> random_subset(Rng& rng, int n);

}  // namespace gen

#endif
