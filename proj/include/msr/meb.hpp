#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "msr/ball.hpp"
#include "msr/point.hpp"
#include "msr/rng.hpp"
#include "msr/tolerances.hpp"

namespace msr {

// Indices of input points that define the MEB: every support point lies on
// the ball boundary and the MEB of the support alone equals the MEB of the
// full set. At most d+1 entries.
struct SupportSet {
  std::vector<int> indices;
};

struct MebResult {
  Ball ball;
  SupportSet support;
};

// Smallest ball with all given points on its boundary, or nullopt when the
// points are affinely degenerate (the caller falls back to a lower-rank
// subset). Accepts 1..d+1 points.
std::optional<Ball> circumball(std::span<const Point> boundary_points);

// Minimum enclosing ball of a nonempty point set, via randomized
// move-to-front Welzl. Deterministic for a fixed rng state.
MebResult meb(std::span<const Point> points, Rng& rng);
MebResult meb(std::span<const Point> points, std::uint64_t seed = kDefaultSeed);

namespace detail {

// Boundary-point stack for the Welzl recursion. balls[i] caches the
// circumball of the first i stacked points, so pop() is O(1).
class Basis {
 public:
  void reset(std::span<const Point> points) {
    points_ = points;
    size_ = 0;
    balls_[0] = Ball::empty();
  }

  // Pushes index i if the stacked points stay affinely independent.
  bool push(int i);
  void pop() { --size_; }

  int size() const { return size_; }
  const Ball& ball() const { return balls_[size_]; }
  std::span<const int> indices() const { return {indices_.data(), static_cast<std::size_t>(size_)}; }

 private:
  std::span<const Point> points_;
  int size_ = 0;
  std::array<int, kMaxDim + 1> indices_{};
  std::array<Ball, kMaxDim + 2> balls_{};
};

}  // namespace detail

// Insertion-only MEB stream over a fixed point array. Feeds the sweep's
// prefix and suffix sequences: points arrive in sweep order, the ball only
// ever grows, and a point outside the current ball triggers a move-to-front
// Welzl recompute with that point pinned to the boundary.
class MebEngine {
 public:
  explicit MebEngine(std::span<const Point> points);

  void insert(int index);

  int size() const { return inserted_; }
  const Ball& ball() const { return ball_; }
  std::span<const int> support() const { return {support_.data(), support_.size()}; }

 private:
  friend class WelzlRun;

  std::span<const Point> points_;
  std::vector<std::int32_t> next_, prev_;  // move-to-front list over inserted indices
  std::int32_t head_ = -1, tail_ = -1;
  int inserted_ = 0;
  Ball ball_;
  std::vector<int> support_;
  detail::Basis basis_;

  void link_front(int i);
  void link_back(int i);
  void move_to_front(int i);
};

// Planar MEB stream for projection-sorted insertion. Maintains the convex
// hull of the inserted points incrementally (amortized O(1) per insert,
// since oriented projections arrive nondecreasing), so the recompute after
// an outside point only ever visits hull vertices: the enclosing ball of
// the hull is the enclosing ball of the whole set, and a ball covering the
// hull vertices covers everything by convexity.
class PlanarStreamEngine {
 public:
  // orientation -1 feeds a stream sorted by descending projection
  PlanarStreamEngine(std::span<const Point> points, const Point& dir_unit, double orientation);

  void insert(int index);

  int size() const { return inserted_; }
  const Ball& ball() const { return ball_; }
  std::span<const int> support() const { return {support_.data(), support_.size()}; }

 private:
  struct HullNode {
    double u, t;  // oriented projection and perpendicular coordinate
    int index;
  };

  std::span<const Point> points_;
  double ux_, uy_;  // oriented sweep direction
  std::vector<HullNode> lower_, upper_;
  int inserted_ = 0;
  Ball ball_;
  std::vector<int> support_;
  std::vector<int> candidates_;  // scratch: hull indices for the recompute
  detail::Basis basis_;

  void recompute(int forced_index);
};

}  // namespace msr
