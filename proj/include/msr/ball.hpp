#pragma once

#include <algorithm>

#include "msr/errors.hpp"
#include "msr/point.hpp"
#include "msr/tolerances.hpp"

namespace msr {

// Ball (disk when d = 2) given by center and nonnegative radius. The empty
// sentinel has an undefined center (dimension 0) and radius 0; it costs
// nothing and contains nothing.
struct Ball {
  Point center;
  double radius = 0.0;

  static Ball empty() { return Ball{}; }

  bool is_empty() const { return center.dim() == 0; }

  // Contribution to a clustering objective.
  double cost() const { return is_empty() ? 0.0 : radius; }
};

inline bool contains(const Ball& ball, const Point& p, double eps = kEpsContain) {
  if (ball.is_empty()) return false;
  if (ball.center.dim() != p.dim()) throw DimensionMismatchError("ball/point dimension mismatch");
  const double slack = ball.radius * eps + kEpsAbs;
  const double limit = ball.radius + slack;
  return squared_distance(ball.center, p) <= limit * limit;
}

inline bool on_boundary(const Ball& ball, const Point& p, double eps = kEpsBoundary) {
  if (ball.is_empty()) return false;
  if (ball.center.dim() != p.dim()) throw DimensionMismatchError("ball/point dimension mismatch");
  const double slack = eps * std::max(1.0, ball.radius) + kEpsAbs;
  return std::abs(distance(ball.center, p) - ball.radius) <= slack;
}

// Reflection of a boundary point p through the center: the far end of the
// diameter through p.
inline Point antipodal(const Ball& ball, const Point& p) {
  if (!on_boundary(ball, p))
    throw InvalidInputError("antipodal: point does not lie on the ball boundary");
  return 2.0 * ball.center - p;
}

}  // namespace msr
