#include "msr/sweep.hpp"

#include <algorithm>
#include <stdexcept>

#include "msr/tolerances.hpp"

namespace msr {

Direction make_direction(const Point& v) {
  if (!v.finite()) throw InvalidInputError("direction: non-finite vector");
  const double n = norm(v);
  if (!(n > 0.0)) throw InvalidInputError("direction: zero vector");
  return Direction{(1.0 / n) * v};
}

std::vector<Direction> candidate_directions(const Ball& ball, const SupportSet& support,
                                            std::span<const Point> points) {
  std::vector<Direction> dirs;
  if (ball.is_empty() || ball.radius <= 0.0) return dirs;
  dirs.reserve(support.indices.size());
  for (int idx : support.indices) {
    const Point v = ball.center - points[static_cast<std::size_t>(idx)];
    const double len = norm(v);
    if (len <= kEpsAbs * std::max(1.0, ball.radius)) continue;
    const Point u = (1.0 / len) * v;
    bool duplicate = false;
    for (const Direction& seen : dirs)
      duplicate = duplicate || squared_distance(seen.unit, u) <= kEpsDirection * kEpsDirection;
    if (!duplicate) dirs.push_back(Direction{u});
  }
  return dirs;
}

SweepState build_sweep(std::span<const Point> points, const Direction& dir) {
  const int n = static_cast<int>(points.size());
  SweepState state;
  state.dir_ = dir;
  state.dim_ = n > 0 ? points[0].dim() : dir.unit.dim();
  const int d = state.dim_;

  std::vector<std::pair<double, int>> items(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    items[static_cast<std::size_t>(i)] = {dot(points[static_cast<std::size_t>(i)], dir.unit), i};
  std::sort(items.begin(), items.end());

  state.order_.resize(static_cast<std::size_t>(n));
  state.keys_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    state.keys_[static_cast<std::size_t>(i)] = items[static_cast<std::size_t>(i)].first;
    state.order_[static_cast<std::size_t>(i)] = items[static_cast<std::size_t>(i)].second;
  }

  state.prefix_r_.assign(static_cast<std::size_t>(n) + 1, 0.0);
  state.suffix_r_.assign(static_cast<std::size_t>(n) + 1, 0.0);
  state.prefix_c_.assign((static_cast<std::size_t>(n) + 1) * static_cast<std::size_t>(d), 0.0);
  state.suffix_c_.assign((static_cast<std::size_t>(n) + 1) * static_cast<std::size_t>(d), 0.0);
  if (n == 0) return state;

  auto run_streams = [&](auto&& forward, auto&& backward) {
    for (int i = 0; i < n; ++i) {
      forward.insert(state.order_[static_cast<std::size_t>(i)]);
      const Ball& b = forward.ball();
      state.prefix_r_[static_cast<std::size_t>(i) + 1] = b.radius;
      for (int c = 0; c < d; ++c)
        state.prefix_c_[(static_cast<std::size_t>(i) + 1) * static_cast<std::size_t>(d) +
                        static_cast<std::size_t>(c)] = b.center[c];
    }
    for (int i = n - 1; i >= 0; --i) {
      backward.insert(state.order_[static_cast<std::size_t>(i)]);
      const Ball& b = backward.ball();
      state.suffix_r_[static_cast<std::size_t>(i)] = b.radius;
      for (int c = 0; c < d; ++c)
        state.suffix_c_[static_cast<std::size_t>(i) * static_cast<std::size_t>(d) +
                        static_cast<std::size_t>(c)] = b.center[c];
    }
  };
  if (d == 2) {
    // hull-filtered streams need the projection-sorted insertion order
    run_streams(PlanarStreamEngine(points, dir.unit, 1.0),
                PlanarStreamEngine(points, dir.unit, -1.0));
  } else {
    run_streams(MebEngine(points), MebEngine(points));
  }
  return state;
}

Ball SweepState::prefix_ball(int i) const {
  if (i <= 0) return Ball::empty();
  Ball b;
  b.center = Point::zero(dim_);
  for (int c = 0; c < dim_; ++c)
    b.center[c] = prefix_c_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                            static_cast<std::size_t>(c)];
  b.radius = prefix_r_[static_cast<std::size_t>(i)];
  return b;
}

Ball SweepState::suffix_ball(int i) const {
  if (i >= n()) return Ball::empty();
  Ball b;
  b.center = Point::zero(dim_);
  for (int c = 0; c < dim_; ++c)
    b.center[c] = suffix_c_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                            static_cast<std::size_t>(c)];
  b.radius = suffix_r_[static_cast<std::size_t>(i)];
  return b;
}

double SweepState::split_offset(int i) const {
  if (keys_.empty()) return 0.0;
  if (i <= 0) return keys_.front() - 1.0;
  if (i >= n()) return keys_.back() + 1.0;
  return 0.5 * (keys_[static_cast<std::size_t>(i) - 1] + keys_[static_cast<std::size_t>(i)]);
}

SplitEval split_cost(const SweepState& state, int i) {
  if (i < 0 || i > state.n()) throw std::out_of_range("split index out of range");
  SplitEval eval;
  eval.left = state.prefix_ball(i);
  eval.right = state.suffix_ball(i);
  eval.total = eval.left.cost() + eval.right.cost();
  return eval;
}

}  // namespace msr
