#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "msr/errors.hpp"

namespace msr {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

// Euclidean point in fixed dimension d, 2 <= d <= 8. Coordinates are stored
// inline so point arrays stay contiguous. A default-constructed Point has
// dimension 0 and doubles as the "undefined center" of the empty-ball
// sentinel.
class Point {
 public:
  Point() = default;

  Point(std::initializer_list<double> coords) {
    dim_ = static_cast<int>(coords.size());
    int i = 0;
    for (double c : coords) coords_[i++] = c;
  }

  static Point zero(int dim) {
    Point p;
    p.dim_ = dim;
    return p;
  }

  int dim() const { return dim_; }

  double operator[](int i) const { return coords_[i]; }
  double& operator[](int i) { return coords_[i]; }

  std::span<const double> coords() const { return {coords_.data(), static_cast<std::size_t>(dim_)}; }

  bool finite() const {
    for (int i = 0; i < dim_; ++i)
      if (!std::isfinite(coords_[i])) return false;
    return true;
  }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.coords_[i] != b.coords_[i]) return false;
    return true;
  }

 private:
  std::array<double, kMaxDim> coords_{};
  int dim_ = 0;
};

inline double squared_distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double distance(const Point& a, const Point& b) { return std::sqrt(squared_distance(a, b)); }

inline double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Point& a) { return std::sqrt(dot(a, a)); }

inline Point operator+(const Point& a, const Point& b) {
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] += b[i];
  return r;
}

inline Point operator-(const Point& a, const Point& b) {
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] -= b[i];
  return r;
}

inline Point operator*(double s, const Point& a) {
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] *= s;
  return r;
}

// Shared precondition for every entry point taking a point set: uniform
// supported dimension and finite coordinates.
inline void validate_points(std::span<const Point> points) {
  if (points.empty()) return;
  const int d = points[0].dim();
  if (d < kMinDim || d > kMaxDim)
    throw UnsupportedDimensionError("unsupported dimension " + std::to_string(d));
  for (const Point& p : points) {
    if (p.dim() != d) throw DimensionMismatchError("mixed point dimensions in input");
    if (!p.finite()) throw InvalidInputError("non-finite coordinate in input");
  }
}

}  // namespace msr
