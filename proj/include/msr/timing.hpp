#pragma once

#include <span>
#include <vector>

#include "msr/instances.hpp"

namespace msr {

struct TimingResult {
  std::vector<double> trial_ms;  // after the discarded warmup
  double median_ms = 0.0;
  double min_ms = 0.0;
  double max_ms = 0.0;
  double cost = 0.0;  // solver cost, identical across trials
};

// Times solve_msr{k} on the generated instance: one discarded warmup run,
// then `trials` sequential runs. Throws on trials < 1 or k outside {1,2,3}.
TimingResult time_solver(int k, const InstanceSpec& spec, int trials);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Least-squares fit of log(time) against log(size).
LogLogFit fit_loglog(std::span<const double> sizes, std::span<const double> times);

}  // namespace msr
