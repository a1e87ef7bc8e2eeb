#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msr/point.hpp"
#include "msr/tolerances.hpp"

namespace msr {

enum class Distribution {
  kUniform,         // uniform in the unit cube
  kGaussianBlobs,   // blob_count Gaussian clouds with uniform centers
  kCircleBoundary,  // unit-sphere boundary; an antipodal pair is planted so
                    // the enclosing ball has radius exactly 1
  kCollinear,       // random segment through the unit cube
  kWithDuplicates,  // uniform base with the second half copied from the first
};

Distribution parse_distribution(const std::string& name);
std::string distribution_name(Distribution dist);

// Generation is a pure function of the spec: same spec, same points.
struct InstanceSpec {
  int n = 0;
  int dim = 2;
  Distribution dist = Distribution::kUniform;
  int blob_count = 3;
  double blob_spread = 0.05;
  std::uint64_t seed = kDefaultSeed;
};

std::vector<Point> generate(const InstanceSpec& spec);

}  // namespace msr
