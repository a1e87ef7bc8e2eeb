#pragma once

#include <span>
#include <vector>

#include "msr/ball.hpp"
#include "msr/meb.hpp"
#include "msr/point.hpp"

namespace msr {

// Unit vector giving a sweep direction.
struct Direction {
  Point unit;
};

// Normalizes v; throws InvalidInputError on a zero or non-finite vector.
Direction make_direction(const Point& v);

// One direction per support point q of the enclosing ball: the unit vector
// from q toward the center, i.e. the direction of the diameter through q.
// Duplicates (within kEpsDirection radians) are dropped; a zero-radius ball
// yields no directions and the caller falls back to the trivial clustering.
std::vector<Direction> candidate_directions(const Ball& ball, const SupportSet& support,
                                            std::span<const Point> points);

// Projection-sorted order for one direction together with the MEB of every
// prefix and every suffix of that order, so each orthogonal split i is a
// constant-time lookup. prefix_ball(0) and suffix_ball(n) are the empty
// sentinel; prefix_ball(n) and suffix_ball(0) are MEB(P).
class SweepState {
 public:
  int n() const { return static_cast<int>(order_.size()); }
  int dim() const { return dim_; }
  const Direction& direction() const { return dir_; }
  std::span<const int> order() const { return {order_.data(), order_.size()}; }

  std::span<const double> prefix_radii() const { return {prefix_r_.data(), prefix_r_.size()}; }
  std::span<const double> suffix_radii() const { return {suffix_r_.data(), suffix_r_.size()}; }

  Ball prefix_ball(int i) const;
  Ball suffix_ball(int i) const;

  // Sorted projection of order()[pos] onto the direction.
  double sorted_key(int pos) const { return keys_[static_cast<std::size_t>(pos)]; }

  // Hyperplane offset realizing split i (1 <= i <= n-1): the midpoint of the
  // adjacent projections, so order[0..i) sits on the low side.
  double split_offset(int i) const;

 private:
  friend SweepState build_sweep(std::span<const Point> points, const Direction& dir);

  Direction dir_;
  int dim_ = 0;
  std::vector<int> order_;
  std::vector<double> keys_;
  std::vector<double> prefix_r_, suffix_r_;
  std::vector<double> prefix_c_, suffix_c_;  // flat (n+1) x dim center rows
};

// Sorts by projection (ties by input index, so equal projections stay
// adjacent) and builds both MEB sequences with insertion-only engines; the
// suffix side runs the same procedure over the reversed order.
SweepState build_sweep(std::span<const Point> points, const Direction& dir);

struct SplitEval {
  Ball left;
  Ball right;
  double total = 0.0;
};

// Clusters induced by splitting the sorted order before position i, with the
// summed radii. i = 0 and i = n reproduce the single-cluster solution.
SplitEval split_cost(const SweepState& state, int i);

}  // namespace msr
