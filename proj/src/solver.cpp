#include "msr/solver.hpp"

#include <algorithm>

#include "msr/meb.hpp"

namespace msr {

namespace {

Clustering all_empty(int k) {
  Clustering c;
  c.k = k;
  c.balls.assign(static_cast<std::size_t>(k), Ball::empty());
  c.cost = 0.0;
  return c;
}

Clustering single_cluster(int k, std::size_t n, const Ball& ball) {
  Clustering c;
  c.k = k;
  c.assignment.assign(n, 0);
  c.balls.assign(static_cast<std::size_t>(k), Ball::empty());
  c.balls[0] = ball;
  c.cost = ball.cost();
  return c;
}

double sum_cost(const Clustering& c) {
  double s = 0.0;
  for (const Ball& b : c.balls) s += b.cost();
  return s;
}

}  // namespace

Clustering solve_msr1(std::span<const Point> points, std::uint64_t seed) {
  validate_points(points);
  if (points.empty()) return all_empty(1);
  Rng rng(seed);
  const MebResult m = meb(points, rng);
  return single_cluster(1, points.size(), m.ball);
}

namespace detail {

Clustering solve_msr2_impl(std::span<const Point> points, Rng& rng) {
  const int n = static_cast<int>(points.size());
  if (n == 0) return all_empty(2);

  const MebResult m = meb(points, rng);
  Clustering best = single_cluster(2, points.size(), m.ball);
  double best_cost = m.ball.radius;

  const std::vector<Direction> dirs = candidate_directions(m.ball, m.support, points);
  for (const Direction& dir : dirs) {
    const SweepState sweep = build_sweep(points, dir);
    const std::span<const double> pr = sweep.prefix_radii();
    const std::span<const double> sr = sweep.suffix_radii();
    int arg = -1;
    double dir_best = best_cost;
    for (int i = 1; i < n; ++i) {
      const double total = pr[static_cast<std::size_t>(i)] + sr[static_cast<std::size_t>(i)];
      if (total < dir_best) {
        dir_best = total;
        arg = i;
      }
    }
    if (arg < 0) continue;

    best_cost = dir_best;
    const std::span<const int> order = sweep.order();
    best.assignment.assign(points.size(), 1);
    for (int pos = 0; pos < arg; ++pos) best.assignment[static_cast<std::size_t>(order[pos])] = 0;
    best.balls[0] = sweep.prefix_ball(arg);
    best.balls[1] = sweep.suffix_ball(arg);
    best.separators.assign(1, Separator{dir, sweep.split_offset(arg)});
    best.cost = sum_cost(best);
  }
  return best;
}

}  // namespace detail

Clustering solve_msr2(std::span<const Point> points, std::uint64_t seed) {
  validate_points(points);
  Rng rng(seed);
  return detail::solve_msr2_impl(points, rng);
}

Clustering solve_msr3(std::span<const Point> points, std::uint64_t seed) {
  validate_points(points);
  const int n = static_cast<int>(points.size());
  if (n == 0) return all_empty(3);
  if (points[0].dim() != 2)
    throw UnsupportedDimensionError("3-cluster solver requires dimension 2");

  Rng rng(seed);

  // Seed with the 2-cluster optimum lifted to k = 3.
  Clustering best = detail::solve_msr2_impl(points, rng);
  best.k = 3;
  best.balls.push_back(Ball::empty());

  const MebResult m = meb(points, rng);
  const std::vector<Direction> dirs = candidate_directions(m.ball, m.support, points);
  std::vector<Point> rest;
  rest.reserve(points.size());
  for (const Direction& dir : dirs) {
    // Along (center - q)/r the defining point q projects lowest, so the
    // split-off side A is always the prefix.
    const SweepState sweep = build_sweep(points, dir);
    const std::span<const double> pr = sweep.prefix_radii();
    const std::span<const int> order = sweep.order();
    for (int i = 1; i < n; ++i) {
      const double prefix_cost = pr[static_cast<std::size_t>(i)];
      if (prefix_cost >= best.cost) break;  // prefix radii only grow
      rest.clear();
      for (int pos = i; pos < n; ++pos)
        rest.push_back(points[static_cast<std::size_t>(order[pos])]);
      const Clustering sub = detail::solve_msr2_impl(rest, rng);
      const double total = prefix_cost + sub.cost;
      if (total >= best.cost) continue;

      best.assignment.assign(points.size(), 0);
      for (int pos = i; pos < n; ++pos)
        best.assignment[static_cast<std::size_t>(order[pos])] =
            1 + sub.assignment[static_cast<std::size_t>(pos - i)];
      best.balls.assign(3, Ball::empty());
      best.balls[0] = sweep.prefix_ball(i);
      best.balls[1] = sub.balls[0];
      best.balls[2] = sub.balls[1];
      best.separators.assign(1, Separator{dir, sweep.split_offset(i)});
      best.separators.insert(best.separators.end(), sub.separators.begin(),
                             sub.separators.end());
      best.cost = sum_cost(best);
    }
  }
  return best;
}

}  // namespace msr
