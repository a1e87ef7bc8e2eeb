#include <doctest.h>

#include <cmath>

#include "msr/meb.hpp"
#include "msr/sweep.hpp"
#include "test_support.hpp"

using namespace msr;
using namespace msr_test;

namespace {

bool has_direction(const std::vector<Direction>& dirs, double x, double y, double tol = 1e-9) {
  for (const Direction& d : dirs)
    if (std::abs(d.unit[0] - x) <= tol && std::abs(d.unit[1] - y) <= tol) return true;
  return false;
}

}  // namespace

TEST_CASE("candidate directions of a diametral pair point both ways") {
  const std::vector<Point> pts = {{-1.0, 0.0}, {1.0, 0.0}};
  const MebResult m = meb(pts);
  const auto dirs = candidate_directions(m.ball, m.support, pts);
  REQUIRE(dirs.size() == 2);
  CHECK(has_direction(dirs, 1.0, 0.0));
  CHECK(has_direction(dirs, -1.0, 0.0));
}

TEST_CASE("candidate directions of a three-point support are the inward radii") {
  auto at = [](double deg) {
    const double rad = deg * M_PI / 180.0;
    return Point{std::cos(rad), std::sin(rad)};
  };
  const std::vector<Point> pts = {at(90), at(210), at(330)};
  const MebResult m = meb(pts);
  REQUIRE(m.support.indices.size() == 3);
  const auto dirs = candidate_directions(m.ball, m.support, pts);
  REQUIRE(dirs.size() == 3);
  for (double deg : {270.0, 30.0, 150.0}) {
    const double rad = deg * M_PI / 180.0;
    CHECK(has_direction(dirs, std::cos(rad), std::sin(rad), 1e-8));
  }
}

TEST_CASE("coincident points yield no directions") {
  const std::vector<Point> pts = {{2.0, 3.0}, {2.0, 3.0}, {2.0, 3.0}};
  const MebResult m = meb(pts);
  CHECK(m.ball.radius == 0.0);
  CHECK(candidate_directions(m.ball, m.support, pts).empty());
}

TEST_CASE("build_sweep sorts by projection and fills both ball sequences") {
  const std::vector<Point> pts = {{0.0, 0.0}, {3.0, 0.0}, {1.0, 0.0}};
  const SweepState sweep = build_sweep(pts, make_direction(Point{1.0, 0.0}));

  REQUIRE(sweep.n() == 3);
  CHECK(sweep.order()[0] == 0);
  CHECK(sweep.order()[1] == 2);
  CHECK(sweep.order()[2] == 1);

  const double expect_prefix[] = {0.0, 0.0, 0.5, 1.5};
  const double expect_suffix[] = {1.5, 1.0, 0.0, 0.0};
  for (int i = 0; i <= 3; ++i) {
    CHECK(sweep.prefix_radii()[static_cast<std::size_t>(i)] ==
          doctest::Approx(expect_prefix[i]).epsilon(1e-12));
    CHECK(sweep.suffix_radii()[static_cast<std::size_t>(i)] ==
          doctest::Approx(expect_suffix[i]).epsilon(1e-12));
  }
  CHECK(sweep.prefix_ball(0).is_empty());
  CHECK(sweep.suffix_ball(3).is_empty());
}

TEST_CASE("split_cost endpoints reproduce the single-cluster solution") {
  const std::vector<Point> pts = {{0.0, 0.0}, {1.0, 0.0}, {10.0, 0.0}, {11.0, 0.0}};
  const double r = meb(pts).ball.radius;
  const SweepState sweep = build_sweep(pts, make_direction(Point{1.0, 0.0}));

  const SplitEval at0 = split_cost(sweep, 0);
  CHECK(at0.left.is_empty());
  CHECK(at0.total == doctest::Approx(r).epsilon(1e-9));

  const SplitEval atn = split_cost(sweep, 4);
  CHECK(atn.right.is_empty());
  CHECK(atn.total == doctest::Approx(r).epsilon(1e-9));

  const SplitEval mid = split_cost(sweep, 2);
  CHECK(mid.total == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(split_cost(sweep, 5), std::out_of_range);
  CHECK_THROWS_AS(split_cost(sweep, -1), std::out_of_range);
}

TEST_CASE("ties keep equal projections adjacent and stable by index") {
  const std::vector<Point> pts = {{0.0, 2.0}, {5.0, 1.0}, {0.0, -2.0}, {5.0, 3.0}, {0.0, 0.0}};
  const SweepState sweep = build_sweep(pts, make_direction(Point{1.0, 0.0}));
  // projection 0 group first (indices 0,2,4 in input order), then the 5s
  CHECK(sweep.order()[0] == 0);
  CHECK(sweep.order()[1] == 2);
  CHECK(sweep.order()[2] == 4);
  CHECK(sweep.order()[3] == 1);
  CHECK(sweep.order()[4] == 3);
  // all-ties-left and all-ties-right splits exist as indices 0 and 3
  CHECK(sweep.prefix_radii()[3] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(sweep.suffix_radii()[3] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("prefix and suffix balls match direct recomputation") {
  for (int t = 0; t < 60; ++t) {
    const int dim = t % 3 == 1 ? 3 : 2;
    InstanceSpec spec = mixed_spec(t, 12, dim, 4242);
    if (spec.n == 0) spec.n = 1;
    const std::vector<Point> pts = generate(spec);
    const MebResult m = meb(pts);
    auto dirs = candidate_directions(m.ball, m.support, pts);
    Point axis = Point::zero(dim);
    axis[t % dim] = 1.0;
    dirs.push_back(make_direction(axis));

    for (const Direction& dir : dirs) {
      const SweepState sweep = build_sweep(pts, dir);
      const int n = sweep.n();
      CHECK(sweep.prefix_ball(0).is_empty());
      CHECK(sweep.suffix_ball(n).is_empty());
      for (int i = 1; i <= n; ++i) {
        std::vector<Point> prefix, suffix;
        for (int pos = 0; pos < i; ++pos)
          prefix.push_back(pts[static_cast<std::size_t>(sweep.order()[pos])]);
        for (int pos = i - 1; pos < n; ++pos)
          suffix.push_back(pts[static_cast<std::size_t>(sweep.order()[pos])]);
        const double want_prefix = meb(prefix).ball.radius;
        const double want_suffix = meb(suffix).ball.radius;
        CHECK(std::abs(sweep.prefix_radii()[static_cast<std::size_t>(i)] - want_prefix) <=
              1e-9 * std::max(1.0, want_prefix));
        CHECK(std::abs(sweep.suffix_radii()[static_cast<std::size_t>(i) - 1] - want_suffix) <=
              1e-9 * std::max(1.0, want_suffix));
      }
      // radii are monotone along the sweep
      for (int i = 0; i < n; ++i) {
        CHECK(sweep.prefix_radii()[static_cast<std::size_t>(i)] <=
              sweep.prefix_radii()[static_cast<std::size_t>(i) + 1] + 1e-12);
        CHECK(sweep.suffix_radii()[static_cast<std::size_t>(i)] + 1e-12 >=
              sweep.suffix_radii()[static_cast<std::size_t>(i) + 1]);
      }
      const double full = meb(pts).ball.radius;
      CHECK(std::abs(sweep.prefix_radii()[static_cast<std::size_t>(n)] - full) <=
            1e-9 * std::max(1.0, full));
      CHECK(std::abs(sweep.suffix_radii()[0] - full) <= 1e-9 * std::max(1.0, full));
    }
  }
}

TEST_CASE("every split corresponds to a closed-halfspace separation") {
  const std::vector<Point> pts = generate({.n = 9, .dim = 2, .seed = 31});
  const Direction dir = make_direction(Point{0.6, -0.8});
  const SweepState sweep = build_sweep(pts, dir);
  for (int i = 1; i < sweep.n(); ++i) {
    const double offset = sweep.split_offset(i);
    for (int pos = 0; pos < i; ++pos)
      CHECK(dot(pts[static_cast<std::size_t>(sweep.order()[pos])], dir.unit) <= offset + 1e-12);
    for (int pos = i; pos < sweep.n(); ++pos)
      CHECK(dot(pts[static_cast<std::size_t>(sweep.order()[pos])], dir.unit) >= offset - 1e-12);
  }
}

TEST_CASE("make_direction rejects degenerate vectors") {
  CHECK_THROWS_AS(make_direction(Point{0.0, 0.0}), InvalidInputError);
  const Direction d = make_direction(Point{3.0, 4.0});
  CHECK(norm(d.unit) == doctest::Approx(1.0).epsilon(1e-12));
}
