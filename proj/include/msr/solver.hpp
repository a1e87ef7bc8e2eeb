#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "msr/ball.hpp"
#include "msr/point.hpp"
#include "msr/rng.hpp"
#include "msr/sweep.hpp"
#include "msr/tolerances.hpp"

namespace msr {

// Separating hyperplane {x : dot(x, direction) = offset}; the low side holds
// the first cluster it was created for.
struct Separator {
  Direction direction;
  double offset = 0.0;
};

// Assignment of each input point to one of k clusters, the cluster balls
// (empty clusters carry the sentinel), and the summed radii. separators
// lists the realized separating hyperplanes, outermost first; it is empty
// when the single-cluster solution won.
struct Clustering {
  int k = 1;
  std::vector<int> assignment;
  std::vector<Ball> balls;
  double cost = 0.0;
  std::vector<Separator> separators;
};

// k = 1 baseline: one cluster, the MEB of the input.
Clustering solve_msr1(std::span<const Point> points, std::uint64_t seed = kDefaultSeed);

// Exact 2-cluster min-sum-radius in dimension 2..8: minimum over the
// single-cluster solution and every orthogonal split of every candidate
// direction. One empty cluster is legal output when merging wins.
Clustering solve_msr2(std::span<const Point> points, std::uint64_t seed = kDefaultSeed);

// Exact planar 3-cluster min-sum-radius: for every candidate direction the
// split-off side containing the defining point keeps its own ball and the
// rest is solved as a 2-cluster subproblem; the 2-cluster solution lifted to
// k = 3 seeds the search.
Clustering solve_msr3(std::span<const Point> points, std::uint64_t seed = kDefaultSeed);

namespace detail {
// Rng-threaded cores, reused by the k = 3 inner loop and the lemma checkers.
Clustering solve_msr2_impl(std::span<const Point> points, Rng& rng);
}  // namespace detail

}  // namespace msr
