#include "msr/instances.hpp"

#include <cmath>

#include "msr/errors.hpp"
#include "msr/rng.hpp"

namespace msr {

namespace {

Point uniform_point(Rng& rng, int dim) {
  Point p = Point::zero(dim);
  for (int c = 0; c < dim; ++c) p[c] = rng.uniform01();
  return p;
}

// Uniform on the unit sphere; exact angles in the plane, normalized
// Gaussians above it.
Point sphere_point(Rng& rng, int dim) {
  Point p = Point::zero(dim);
  if (dim == 2) {
    const double theta = rng.uniform(0.0, 2.0 * M_PI);
    p[0] = std::cos(theta);
    p[1] = std::sin(theta);
    return p;
  }
  double len = 0.0;
  do {
    for (int c = 0; c < dim; ++c) p[c] = rng.normal();
    len = norm(p);
  } while (len < 1e-12);
  return (1.0 / len) * p;
}

}  // namespace

Distribution parse_distribution(const std::string& name) {
  if (name == "uniform") return Distribution::kUniform;
  if (name == "blobs" || name == "gaussian-blobs") return Distribution::kGaussianBlobs;
  if (name == "circle" || name == "circle-boundary") return Distribution::kCircleBoundary;
  if (name == "collinear") return Distribution::kCollinear;
  if (name == "duplicates" || name == "with-duplicates") return Distribution::kWithDuplicates;
  throw InvalidInputError("unknown distribution '" + name + "'");
}

std::string distribution_name(Distribution dist) {
  switch (dist) {
    case Distribution::kUniform: return "uniform";
    case Distribution::kGaussianBlobs: return "gaussian-blobs";
    case Distribution::kCircleBoundary: return "circle-boundary";
    case Distribution::kCollinear: return "collinear";
    case Distribution::kWithDuplicates: return "with-duplicates";
  }
  return "unknown";
}

std::vector<Point> generate(const InstanceSpec& spec) {
  if (spec.n < 0) throw InvalidInputError("negative instance size");
  if (spec.dim < kMinDim || spec.dim > kMaxDim)
    throw UnsupportedDimensionError("unsupported dimension " + std::to_string(spec.dim));
  Rng rng(spec.seed);
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(spec.n));

  switch (spec.dist) {
    case Distribution::kUniform: {
      for (int i = 0; i < spec.n; ++i) points.push_back(uniform_point(rng, spec.dim));
      break;
    }
    case Distribution::kGaussianBlobs: {
      const int blobs = std::max(1, spec.blob_count);
      std::vector<Point> centers;
      for (int b = 0; b < blobs; ++b) centers.push_back(uniform_point(rng, spec.dim));
      for (int i = 0; i < spec.n; ++i) {
        Point p = centers[static_cast<std::size_t>(i % blobs)];
        for (int c = 0; c < spec.dim; ++c) p[c] += spec.blob_spread * rng.normal();
        points.push_back(p);
      }
      break;
    }
    case Distribution::kCircleBoundary: {
      for (int i = 0; i < spec.n; ++i) {
        if (i == 1) {
          // antipode of the first point pins the enclosing ball radius at 1
          points.push_back(-1.0 * points[0]);
          continue;
        }
        points.push_back(sphere_point(rng, spec.dim));
      }
      break;
    }
    case Distribution::kCollinear: {
      const Point base = uniform_point(rng, spec.dim);
      const Point dir = sphere_point(rng, spec.dim);
      for (int i = 0; i < spec.n; ++i) points.push_back(base + rng.uniform01() * dir);
      break;
    }
    case Distribution::kWithDuplicates: {
      const int fresh = (spec.n + 1) / 2;
      for (int i = 0; i < fresh; ++i) points.push_back(uniform_point(rng, spec.dim));
      for (int i = fresh; i < spec.n; ++i)
        points.push_back(points[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(fresh)))]);
      break;
    }
  }
  return points;
}

}  // namespace msr
