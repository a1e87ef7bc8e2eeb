#include "msr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "msr/meb.hpp"

namespace msr {

namespace {

void check_guard(std::size_t n, int k, const BruteOptions& options) {
  if (k < 1 || k > 3) throw InvalidInputError("brute_msr supports k in {1,2,3}");
  // even forced runs must fit the enumeration counter
  if (k >= 2 && n > 40)
    throw SizeGuardError("instance too large to enumerate (n=" + std::to_string(n) + ")");
  if (options.force) return;
  const int limit = k == 3 ? kOracleMaxN3 : kOracleMaxN2;
  if (k >= 2 && static_cast<int>(n) > limit)
    throw SizeGuardError("instance too large for brute force (n=" + std::to_string(n) +
                         ", limit " + std::to_string(limit) + " for k=" + std::to_string(k) +
                         "); use force to override");
}

double relative_tol(double reference) { return 1e-9 * std::max(1.0, std::abs(reference)); }

}  // namespace

Clustering brute_msr(std::span<const Point> points, int k, const BruteOptions& options) {
  validate_points(points);
  check_guard(points.size(), k, options);
  const int n = static_cast<int>(points.size());

  Clustering best;
  best.k = k;
  best.balls.assign(static_cast<std::size_t>(k), Ball::empty());
  if (n == 0) return best;

  Rng rng(options.seed);
  std::vector<int> labels(points.size(), 0);
  std::vector<int> best_labels;
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<Point> buckets[3];
  for (auto& b : buckets) b.reserve(points.size());

  std::uint64_t total = 1;
  for (int i = 1; i < n; ++i) total *= static_cast<std::uint64_t>(k);

  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 1; i < n; ++i) {
      labels[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(k));
      c /= static_cast<std::uint64_t>(k);
    }
    for (int g = 0; g < k; ++g) buckets[g].clear();
    for (int i = 0; i < n; ++i)
      buckets[labels[static_cast<std::size_t>(i)]].push_back(points[static_cast<std::size_t>(i)]);

    double cost = 0.0;
    for (int g = 0; g < k && cost < best_cost; ++g)
      if (!buckets[g].empty()) cost += meb(buckets[g], rng).ball.radius;
    if (cost < best_cost) {
      best_cost = cost;
      best_labels = labels;
    }
  }

  best.assignment = best_labels;
  for (int g = 0; g < k; ++g) buckets[g].clear();
  for (int i = 0; i < n; ++i)
    buckets[best_labels[static_cast<std::size_t>(i)]].push_back(points[static_cast<std::size_t>(i)]);
  for (int g = 0; g < k; ++g)
    if (!buckets[g].empty()) best.balls[static_cast<std::size_t>(g)] = meb(buckets[g], rng).ball;
  best.cost = 0.0;
  for (const Ball& b : best.balls) best.cost += b.cost();
  return best;
}

LemmaReport check_disjoint_optimum(std::span<const Point> points, int k,
                                   const std::string& instance_id, const BruteOptions& options) {
  LemmaReport report;
  report.instance_id = instance_id;
  report.lemma_id = "disjoint-balls";
  if (points.empty()) {
    report.holds = true;
    return report;
  }

  const Clustering opt = brute_msr(points, k, options);
  report.optimal_cost = opt.cost;

  Rng rng(options.seed);
  std::vector<std::vector<Point>> groups(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < points.size(); ++i)
    groups[static_cast<std::size_t>(opt.assignment[i])].push_back(points[i]);
  std::vector<Ball> balls(static_cast<std::size_t>(k), Ball::empty());
  for (int g = 0; g < k; ++g)
    if (!groups[static_cast<std::size_t>(g)].empty())
      balls[static_cast<std::size_t>(g)] = meb(groups[static_cast<std::size_t>(g)], rng).ball;

  // Merge any two clusters whose balls touch; the combined MEB is never
  // larger than the two radii summed, so the cost cannot go up.
  for (bool merged = true; merged;) {
    merged = false;
    for (int i = 0; i < k && !merged; ++i) {
      if (balls[static_cast<std::size_t>(i)].is_empty()) continue;
      for (int j = i + 1; j < k && !merged; ++j) {
        if (balls[static_cast<std::size_t>(j)].is_empty()) continue;
        const double sum = balls[static_cast<std::size_t>(i)].radius +
                           balls[static_cast<std::size_t>(j)].radius;
        const double dist = distance(balls[static_cast<std::size_t>(i)].center,
                                     balls[static_cast<std::size_t>(j)].center);
        if (dist <= sum + relative_tol(sum)) {
          auto& gi = groups[static_cast<std::size_t>(i)];
          auto& gj = groups[static_cast<std::size_t>(j)];
          gi.insert(gi.end(), gj.begin(), gj.end());
          gj.clear();
          balls[static_cast<std::size_t>(i)] = meb(gi, rng).ball;
          balls[static_cast<std::size_t>(j)] = Ball::empty();
          merged = true;
        }
      }
    }
  }

  double final_cost = 0.0;
  bool disjoint = true;
  for (int i = 0; i < k; ++i) {
    final_cost += balls[static_cast<std::size_t>(i)].cost();
    if (balls[static_cast<std::size_t>(i)].is_empty()) continue;
    for (int j = i + 1; j < k; ++j) {
      if (balls[static_cast<std::size_t>(j)].is_empty()) continue;
      const double sum = balls[static_cast<std::size_t>(i)].radius +
                         balls[static_cast<std::size_t>(j)].radius;
      const double dist = distance(balls[static_cast<std::size_t>(i)].center,
                                   balls[static_cast<std::size_t>(j)].center);
      if (dist <= sum - relative_tol(sum)) disjoint = false;
    }
  }
  report.achieved_cost = final_cost;
  report.holds = disjoint && final_cost <= opt.cost + relative_tol(opt.cost);
  return report;
}

LemmaReport check_separator_lemma(std::span<const Point> points, int k,
                                  const std::string& instance_id, const BruteOptions& options) {
  if (k != 2 && k != 3) throw InvalidInputError("separator lemma check supports k in {2,3}");
  LemmaReport report;
  report.instance_id = instance_id;
  report.lemma_id = k == 2 ? "k2-separator" : "k3-separator";
  if (points.empty()) {
    report.holds = true;
    return report;
  }

  const Clustering opt = brute_msr(points, k, options);
  report.optimal_cost = opt.cost;

  Rng rng(options.seed);
  const MebResult m = meb(points, rng);
  const int n = static_cast<int>(points.size());

  // Single-cluster fallback for k = 2; the 2-cluster optimum lifted for k = 3.
  double achieved = k == 2 ? m.ball.radius : brute_msr(points, 2, options).cost;
  std::optional<SeparatorWitness> witness;

  std::vector<Point> rest;
  rest.reserve(points.size());
  const std::vector<Direction> dirs = candidate_directions(m.ball, m.support, points);
  for (const Direction& dir : dirs) {
    const SweepState sweep = build_sweep(points, dir);
    const std::span<const double> pr = sweep.prefix_radii();
    const std::span<const double> sr = sweep.suffix_radii();
    const std::span<const int> order = sweep.order();
    for (int i = 1; i < n; ++i) {
      double total = pr[static_cast<std::size_t>(i)];
      if (k == 2) {
        total += sr[static_cast<std::size_t>(i)];
      } else {
        if (total >= achieved) break;
        rest.clear();
        for (int pos = i; pos < n; ++pos)
          rest.push_back(points[static_cast<std::size_t>(order[pos])]);
        total += brute_msr(rest, 2, options).cost;
      }
      if (total < achieved) {
        achieved = total;
        witness = SeparatorWitness{dir, i};
      }
    }
  }

  report.achieved_cost = achieved;
  const double tol = 1e-6 * std::max(1.0, std::abs(opt.cost));
  report.holds = achieved <= opt.cost + tol;
  if (report.holds) report.witness = witness;
  return report;
}

}  // namespace msr
