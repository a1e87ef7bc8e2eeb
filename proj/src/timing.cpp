#include "msr/timing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "msr/errors.hpp"
#include "msr/solver.hpp"

namespace msr {

namespace {

double run_once(int k, std::span<const Point> points, std::uint64_t seed, double* cost) {
  const auto t0 = std::chrono::steady_clock::now();
  Clustering c;
  switch (k) {
    case 1: c = solve_msr1(points, seed); break;
    case 2: c = solve_msr2(points, seed); break;
    case 3: c = solve_msr3(points, seed); break;
    default: throw InvalidInputError("time_solver supports k in {1,2,3}");
  }
  const auto t1 = std::chrono::steady_clock::now();
  if (cost) *cost = c.cost;
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

TimingResult time_solver(int k, const InstanceSpec& spec, int trials) {
  if (trials < 1) throw InvalidInputError("trials must be >= 1");
  const std::vector<Point> points = generate(spec);

  TimingResult result;
  run_once(k, points, spec.seed, nullptr);  // warmup, discarded
  for (int t = 0; t < trials; ++t)
    result.trial_ms.push_back(run_once(k, points, spec.seed, &result.cost));

  std::vector<double> sorted = result.trial_ms;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  result.median_ms = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  result.min_ms = sorted.front();
  result.max_ms = sorted.back();
  return result;
}

LogLogFit fit_loglog(std::span<const double> sizes, std::span<const double> times) {
  if (sizes.size() != times.size() || sizes.size() < 2)
    throw InvalidInputError("fit_loglog needs at least two matching samples");
  const std::size_t n = sizes.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(sizes[i]);
    const double y = std::log(std::max(times[i], 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double den = n * sxx - sx * sx;
  LogLogFit fit;
  fit.slope = (n * sxy - sx * sy) / den;
  fit.intercept = (sy - fit.slope * sx) / static_cast<double>(n);
  const double ss_tot = syy - sy * sy / static_cast<double>(n);
  double ss_res = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(sizes[i]);
    const double y = std::log(std::max(times[i], 1e-9));
    const double e = y - (fit.slope * x + fit.intercept);
    ss_res += e * e;
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace msr
