#include <doctest.h>

#include <cmath>

#include "msr/meb.hpp"
#include "msr/oracle.hpp"
#include "msr/solver.hpp"
#include "test_support.hpp"

using namespace msr;
using namespace msr_test;

namespace {

// Check the closed-halfspace separation re-derived from the assignment: the
// cluster split off by the outermost separator sits on the low side.
void require_separator_realized(std::span<const Point> pts, const Clustering& c) {
  if (c.separators.empty()) return;
  const Separator& sep = c.separators.front();
  // the low-side cluster is the one produced first: label 0
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double proj = dot(pts[i], sep.direction.unit);
    if (c.assignment[i] == 0)
      CHECK(proj <= sep.offset + 1e-9);
    else
      CHECK(proj >= sep.offset - 1e-9);
  }
}

}  // namespace

TEST_CASE("solve_msr1 returns the enclosing ball") {
  const std::vector<Point> pair = {{0.0, 0.0}, {2.0, 0.0}};
  const Clustering c = solve_msr1(pair);
  require_valid_clustering(pair, c, 1);
  CHECK(c.cost == doctest::Approx(1.0).epsilon(1e-12));

  const Clustering empty = solve_msr1(std::vector<Point>{});
  CHECK(empty.cost == 0.0);
  CHECK(empty.balls[0].is_empty());

  const std::vector<Point> square = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  CHECK(solve_msr1(square).cost == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("solve_msr2 splits two distant pairs") {
  const std::vector<Point> pts = {{0.0, 0.0}, {1.0, 0.0}, {10.0, 0.0}, {11.0, 0.0}};
  const Clustering c = solve_msr2(pts);
  require_valid_clustering(pts, c, 2);
  CHECK(c.cost == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.assignment[0] == c.assignment[1]);
  CHECK(c.assignment[2] == c.assignment[3]);
  CHECK(c.assignment[0] != c.assignment[2]);
  require_separator_realized(pts, c);
}

TEST_CASE("solve_msr2 trivial cases") {
  const std::vector<Point> same = {{3.0, 3.0}, {3.0, 3.0}, {3.0, 3.0}};
  CHECK(solve_msr2(same).cost == 0.0);

  const std::vector<Point> vpairs = {{0.0, 0.0}, {0.0, 2.0}, {10.0, 0.0}, {10.0, 2.0}};
  CHECK(solve_msr2(vpairs).cost == doctest::Approx(2.0).epsilon(1e-12));

  const Clustering none = solve_msr2(std::vector<Point>{});
  CHECK(none.cost == 0.0);
  CHECK(none.balls[0].is_empty());
  CHECK(none.balls[1].is_empty());

  const std::vector<Point> one = {{5.0, 7.0}};
  const Clustering single = solve_msr2(one);
  require_valid_clustering(one, single, 2);
  CHECK(single.cost == 0.0);
}

TEST_CASE("solve_msr2 matches the oracle on the planar seed-42 instance") {
  const std::vector<Point> pts = generate({.n = 12, .dim = 2, .seed = 42});
  const Clustering fast = solve_msr2(pts);
  const Clustering slow = brute_msr(pts, 2);
  require_valid_clustering(pts, fast, 2);
  CHECK(std::abs(fast.cost - slow.cost) <= 1e-6 * std::max(1.0, slow.cost));
}

TEST_CASE("solve_msr2 matches the oracle on a 3d two-blob instance") {
  InstanceSpec spec;
  spec.n = 10;
  spec.dim = 3;
  spec.dist = Distribution::kGaussianBlobs;
  spec.blob_count = 2;
  spec.seed = 88;
  const std::vector<Point> pts = generate(spec);
  const Clustering fast = solve_msr2(pts);
  const Clustering slow = brute_msr(pts, 2);
  require_valid_clustering(pts, fast, 2);
  CHECK(std::abs(fast.cost - slow.cost) <= 1e-6 * std::max(1.0, slow.cost));
}

TEST_CASE("solve_msr3 splits three distant pairs") {
  const std::vector<Point> pts = {{0.0, 0.0},  {1.0, 0.0},  {100.0, 0.0},
                                  {101.0, 0.0}, {50.0, 80.0}, {50.0, 81.0}};
  const Clustering c = solve_msr3(pts);
  require_valid_clustering(pts, c, 3);
  CHECK(c.cost == doctest::Approx(1.5).epsilon(1e-12));
  require_separator_realized(pts, c);
}

TEST_CASE("solve_msr3 trivial cases") {
  const std::vector<Point> two = {{0.0, 0.0}, {9.0, 1.0}};
  const Clustering c2 = solve_msr3(two);
  require_valid_clustering(two, c2, 3);
  CHECK(c2.cost == 0.0);

  const Clustering none = solve_msr3(std::vector<Point>{});
  CHECK(none.cost == 0.0);
  CHECK(none.balls.size() == 3);

  CHECK_THROWS_AS(solve_msr3(std::vector<Point>{{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}}),
                  UnsupportedDimensionError);
}

TEST_CASE("solve_msr3 matches the oracle on the planar seed-7 instance") {
  const std::vector<Point> pts = generate({.n = 9, .dim = 2, .seed = 7});
  const Clustering fast = solve_msr3(pts);
  const Clustering slow = brute_msr(pts, 3);
  require_valid_clustering(pts, fast, 3);
  CHECK(std::abs(fast.cost - slow.cost) <= 1e-6 * std::max(1.0, slow.cost));
}

TEST_CASE("solve_msr3 handles collinear triples") {
  std::vector<Point> pts;
  for (double base : {0.0, 10.0, 20.0})
    for (double off : {0.0, 1.0, 2.0}) pts.push_back({base + off, 0.0});
  const Clustering c = solve_msr3(pts);
  require_valid_clustering(pts, c, 3);
  CHECK(c.cost == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(std::abs(brute_msr(pts, 3).cost - c.cost) <= 1e-9);
}

TEST_CASE("solvers agree with the oracle across mixed instances") {
  for (int t = 0; t < 60; ++t) {
    InstanceSpec spec = mixed_spec(t, 10, 2, 2024);
    const std::vector<Point> pts = generate(spec);

    const Clustering c1 = solve_msr1(pts);
    const Clustering c2 = solve_msr2(pts);
    const Clustering c3 = solve_msr3(pts);
    if (!pts.empty()) {
      require_valid_clustering(pts, c1, 1);
      require_valid_clustering(pts, c2, 2);
      require_valid_clustering(pts, c3, 3);
      require_separator_realized(pts, c2);
      require_separator_realized(pts, c3);
    }

    const double b2 = brute_msr(pts, 2).cost;
    const double b3 = brute_msr(pts, 3).cost;
    CHECK(std::abs(c2.cost - b2) <= 1e-6 * std::max(1.0, b2));
    CHECK(std::abs(c3.cost - b3) <= 1e-6 * std::max(1.0, b3));

    // more clusters never hurt
    CHECK(c3.cost <= c2.cost + 1e-9);
    CHECK(c2.cost <= c1.cost + 1e-9);
  }
}

TEST_CASE("solve_msr2 agrees with the oracle in dimension 3") {
  for (int t = 0; t < 25; ++t) {
    InstanceSpec spec = mixed_spec(t, 9, 3, 909);
    const std::vector<Point> pts = generate(spec);
    const double fast = solve_msr2(pts).cost;
    const double slow = brute_msr(pts, 2).cost;
    CHECK(std::abs(fast - slow) <= 1e-6 * std::max(1.0, slow));
  }
}

TEST_CASE("solver costs are invariant under scaling and rigid motion") {
  for (int t = 0; t < 20; ++t) {
    InstanceSpec spec = mixed_spec(t, 11, 2, 313);
    if (spec.n < 2) spec.n = 5;
    const std::vector<Point> pts = generate(spec);
    const double base2 = solve_msr2(pts).cost;
    const double base3 = solve_msr3(pts).cost;

    for (double s : {0.5, 2.0, 1000.0}) {
      std::vector<Point> scaled;
      for (const Point& p : pts) scaled.push_back(s * p);
      CHECK(std::abs(solve_msr2(scaled).cost - s * base2) <= 1e-9 * std::max(1.0, s * base2));
    }

    std::vector<Point> moved;
    const Point shift{-7.0, 13.0};
    for (const Point& p : pts) moved.push_back(rotate2(p, 0.3 + 0.2 * t, shift));
    CHECK(std::abs(solve_msr2(moved).cost - base2) <= 1e-9 * std::max(1.0, base2));
    CHECK(std::abs(solve_msr3(moved).cost - base3) <= 1e-9 * std::max(1.0, base3));
  }
}

TEST_CASE("solve results are deterministic for a fixed seed") {
  const std::vector<Point> pts = generate({.n = 30, .dim = 2, .seed = 5150});
  const Clustering a = solve_msr2(pts, 11);
  const Clustering b = solve_msr2(pts, 11);
  CHECK(a.cost == b.cost);
  CHECK(a.assignment == b.assignment);

  const Clustering c = solve_msr3(pts, 11);
  const Clustering d = solve_msr3(pts, 11);
  CHECK(c.cost == d.cost);
  CHECK(c.assignment == d.assignment);
}

TEST_CASE("solve_msr2 cost never exceeds the single-cluster cost") {
  for (int t = 0; t < 30; ++t) {
    InstanceSpec spec = mixed_spec(t, 12, t % 2 == 0 ? 2 : 3, 606);
    const std::vector<Point> pts = generate(spec);
    if (pts.empty()) continue;
    const double r = meb(pts).ball.radius;
    CHECK(solve_msr2(pts).cost <= r + 1e-9);
  }
}
