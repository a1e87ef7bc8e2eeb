#include "msr/meb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace msr {

namespace {

// Containment test used while growing balls. The slack is far below the
// public tolerances, so accepted balls always satisfy contains() at
// kEpsContain, while near-duplicate points do not churn the basis.
bool welzl_inside(const Ball& ball, const Point& p) {
  if (ball.is_empty()) return false;
  const double r2 = ball.radius * ball.radius;
  return squared_distance(ball.center, p) <= r2 + r2 * 1e-12 + 1e-28;
}

// Smallest ball with all m given points on its boundary. Solves for the
// center in the affine hull of the points: c = q0 + sum_j lambda_j (qj - q0)
// with |c - qj| = |c - q0|, which is a linear system in lambda. A tiny pivot
// means the points are affinely dependent and no ball of this rank exists.
std::optional<Ball> circumball_impl(const Point* const* pts, int m) {
  const int d = pts[0]->dim();
  if (m == 1) return Ball{*pts[0], 0.0};
  if (m > d + 1) return std::nullopt;

  const Point& q0 = *pts[0];
  const int mm = m - 1;
  Point v[kMaxDim];
  double a[kMaxDim][kMaxDim];
  double rhs[kMaxDim];
  double scale = 0.0;
  for (int j = 0; j < mm; ++j) v[j] = *pts[j + 1] - q0;
  for (int j = 0; j < mm; ++j) {
    for (int k = 0; k < mm; ++k) {
      a[j][k] = 2.0 * dot(v[j], v[k]);
      scale = std::max(scale, std::abs(a[j][k]));
    }
    rhs[j] = dot(v[j], v[j]);
  }
  if (scale == 0.0) return std::nullopt;  // all points coincident

  // Gaussian elimination with partial pivoting.
  int perm[kMaxDim];
  std::iota(perm, perm + mm, 0);
  for (int col = 0; col < mm; ++col) {
    int piv = col;
    for (int row = col + 1; row < mm; ++row)
      if (std::abs(a[perm[row]][col]) > std::abs(a[perm[piv]][col])) piv = row;
    std::swap(perm[col], perm[piv]);
    const double p = a[perm[col]][col];
    if (std::abs(p) < kPivotGuard * scale) return std::nullopt;
    for (int row = col + 1; row < mm; ++row) {
      const double f = a[perm[row]][col] / p;
      if (f == 0.0) continue;
      for (int k = col; k < mm; ++k) a[perm[row]][k] -= f * a[perm[col]][k];
      rhs[perm[row]] -= f * rhs[perm[col]];
    }
  }
  double lambda[kMaxDim];
  for (int col = mm - 1; col >= 0; --col) {
    double s = rhs[perm[col]];
    for (int k = col + 1; k < mm; ++k) s -= a[perm[col]][k] * lambda[k];
    lambda[col] = s / a[perm[col]][col];
  }

  Ball ball;
  ball.center = q0;
  for (int j = 0; j < mm; ++j)
    for (int i = 0; i < d; ++i) ball.center[i] += lambda[j] * v[j][i];
  double r = 0.0;
  for (int j = 0; j < m; ++j) r = std::max(r, distance(ball.center, *pts[j]));
  ball.radius = r;
  return ball;
}

}  // namespace

std::optional<Ball> circumball(std::span<const Point> boundary_points) {
  if (boundary_points.empty()) return std::nullopt;
  validate_points(boundary_points);
  const Point* ptrs[kMaxDim + 1];
  const int m = static_cast<int>(boundary_points.size());
  if (m > boundary_points[0].dim() + 1) return std::nullopt;
  for (int i = 0; i < m; ++i) ptrs[i] = &boundary_points[i];
  return circumball_impl(ptrs, m);
}

namespace detail {

bool Basis::push(int i) {
  const int d = points_[static_cast<std::size_t>(i)].dim();
  if (size_ > d) return false;
  indices_[size_] = i;
  const Point* ptrs[kMaxDim + 1];
  for (int j = 0; j <= size_; ++j) ptrs[j] = &points_[static_cast<std::size_t>(indices_[j])];
  std::optional<Ball> ball = circumball_impl(ptrs, size_ + 1);
  if (!ball) return false;
  balls_[size_ + 1] = *ball;
  ++size_;
  return true;
}

}  // namespace detail

// Move-to-front Welzl over the engine's linked list. Each recursion entry
// snapshots the basis: the temporally last snapshot is the support of the
// returned ball, since only recursion entries ever change the candidate.
class WelzlRun {
 public:
  explicit WelzlRun(MebEngine& engine) : e_(engine), dim_(engine.points_[0].dim()) {}

  Ball run() { return mtf_mb(-1); }

  std::span<const int> last_basis() const { return {last_.data(), static_cast<std::size_t>(last_size_)}; }

 private:
  Ball mtf_mb(int stop) {
    detail::Basis& basis = e_.basis_;
    Ball ball = basis.ball();
    last_size_ = basis.size();
    std::copy(basis.indices().begin(), basis.indices().end(), last_.begin());
    if (basis.size() == dim_ + 1) return ball;
    for (int i = e_.head_; i != stop;) {
      const int j = i;
      i = e_.next_[static_cast<std::size_t>(j)];
      if (!welzl_inside(ball, e_.points_[static_cast<std::size_t>(j)])) {
        if (basis.push(j)) {
          ball = mtf_mb(j);
          basis.pop();
          e_.move_to_front(j);
        }
        // rejected push: point affinely degenerate with the basis; a later
        // verification round catches it if it stays outside
      }
    }
    return ball;
  }

  MebEngine& e_;
  int dim_;
  std::array<int, kMaxDim + 1> last_{};
  int last_size_ = 0;
};

MebEngine::MebEngine(std::span<const Point> points)
    : points_(points),
      next_(points.size(), -1),
      prev_(points.size(), -1) {
  support_.reserve(kMaxDim + 1);
}

void MebEngine::link_front(int i) {
  prev_[static_cast<std::size_t>(i)] = -1;
  next_[static_cast<std::size_t>(i)] = head_;
  if (head_ >= 0)
    prev_[static_cast<std::size_t>(head_)] = i;
  else
    tail_ = i;
  head_ = i;
}

void MebEngine::link_back(int i) {
  next_[static_cast<std::size_t>(i)] = -1;
  prev_[static_cast<std::size_t>(i)] = tail_;
  if (tail_ >= 0)
    next_[static_cast<std::size_t>(tail_)] = i;
  else
    head_ = i;
  tail_ = i;
}

void MebEngine::move_to_front(int i) {
  if (head_ == i) return;
  const int p = prev_[static_cast<std::size_t>(i)];
  const int n = next_[static_cast<std::size_t>(i)];
  next_[static_cast<std::size_t>(p)] = n;
  if (n >= 0)
    prev_[static_cast<std::size_t>(n)] = p;
  else
    tail_ = p;
  link_front(i);
}

void MebEngine::insert(int index) {
  const Point& p = points_[static_cast<std::size_t>(index)];
  if (inserted_ == 0) {
    link_front(index);
    ball_ = Ball{p, 0.0};
    support_.assign(1, index);
    ++inserted_;
    return;
  }
  if (welzl_inside(ball_, p)) {
    link_back(index);
    ++inserted_;
    return;
  }
  link_front(index);
  ++inserted_;

  // The new point is outside, hence on the boundary of the grown ball: pin
  // it and recompute. A couple of pivot rounds repair the rare case where a
  // degenerate basis push left some point uncovered.
  int forced = index;
  for (int round = 0; round < 3; ++round) {
    basis_.reset(points_);
    basis_.push(forced);
    WelzlRun run(*this);
    ball_ = run.run();
    auto basis = run.last_basis();
    support_.assign(basis.begin(), basis.end());
    move_to_front(forced);

    int worst = -1;
    double worst_excess = 0.0;
    const double r2 = ball_.radius * ball_.radius;
    const double limit = r2 + r2 * 1e-12 + 1e-28;
    for (int i = head_; i >= 0; i = next_[static_cast<std::size_t>(i)]) {
      const double d2 = squared_distance(ball_.center, points_[static_cast<std::size_t>(i)]);
      if (d2 > limit && d2 - limit > worst_excess) {
        worst_excess = d2 - limit;
        worst = i;
      }
    }
    if (worst < 0) break;
    forced = worst;
  }
}

namespace {

// Plain Welzl over a small candidate array (no move-to-front; the callers
// pass hull vertex sets that stay tiny). Snapshots the basis at every
// recursion entry; the last snapshot is the support of the returned ball.
class ArrayWelzl {
 public:
  ArrayWelzl(std::span<const Point> points, std::span<const int> candidates, detail::Basis& basis)
      : pts_(points), cand_(candidates), basis_(basis), dim_(points[0].dim()) {}

  Ball run() { return rec(static_cast<int>(cand_.size())); }

  std::span<const int> last_basis() const {
    return {last_.data(), static_cast<std::size_t>(last_size_)};
  }

 private:
  Ball rec(int m) {
    Ball ball = basis_.ball();
    last_size_ = basis_.size();
    std::copy(basis_.indices().begin(), basis_.indices().end(), last_.begin());
    if (basis_.size() == dim_ + 1) return ball;
    for (int i = 0; i < m; ++i) {
      const int idx = cand_[static_cast<std::size_t>(i)];
      if (!welzl_inside(ball, pts_[static_cast<std::size_t>(idx)])) {
        if (basis_.push(idx)) {
          ball = rec(i);
          basis_.pop();
        }
      }
    }
    return ball;
  }

  std::span<const Point> pts_;
  std::span<const int> cand_;
  detail::Basis& basis_;
  int dim_;
  std::array<int, kMaxDim + 1> last_{};
  int last_size_ = 0;
};

}  // namespace

PlanarStreamEngine::PlanarStreamEngine(std::span<const Point> points, const Point& dir_unit,
                                       double orientation)
    : points_(points), ux_(orientation * dir_unit[0]), uy_(orientation * dir_unit[1]) {
  support_.reserve(kMaxDim + 1);
}

void PlanarStreamEngine::insert(int index) {
  const Point& p = points_[static_cast<std::size_t>(index)];
  const HullNode nd{ux_ * p[0] + uy_ * p[1], -uy_ * p[0] + ux_ * p[1], index};

  // lower chain: per-column minimum t, left turns only
  bool on_hull = false;
  if (lower_.empty() || lower_.back().u != nd.u || nd.t < lower_.back().t) {
    if (!lower_.empty() && lower_.back().u == nd.u) lower_.pop_back();
    while (lower_.size() >= 2) {
      const HullNode& a = lower_[lower_.size() - 2];
      const HullNode& b = lower_.back();
      if ((b.u - a.u) * (nd.t - a.t) - (b.t - a.t) * (nd.u - a.u) <= 0.0)
        lower_.pop_back();
      else
        break;
    }
    lower_.push_back(nd);
    on_hull = true;
  }
  // upper chain: per-column maximum t, right turns only
  if (upper_.empty() || upper_.back().u != nd.u || nd.t > upper_.back().t) {
    if (!upper_.empty() && upper_.back().u == nd.u) upper_.pop_back();
    while (upper_.size() >= 2) {
      const HullNode& a = upper_[upper_.size() - 2];
      const HullNode& b = upper_.back();
      if ((b.u - a.u) * (nd.t - a.t) - (b.t - a.t) * (nd.u - a.u) >= 0.0)
        upper_.pop_back();
      else
        break;
    }
    upper_.push_back(nd);
    on_hull = true;
  }

  if (inserted_ == 0) {
    ball_ = Ball{p, 0.0};
    support_.assign(1, index);
    ++inserted_;
    return;
  }
  ++inserted_;
  // a point strictly inside the hull is a convex combination of points the
  // current ball already covers, so only hull entrants can trigger a rebuild
  if (!on_hull || welzl_inside(ball_, p)) return;
  recompute(index);
}

void PlanarStreamEngine::recompute(int forced_index) {
  candidates_.clear();
  for (const HullNode& nd : lower_) candidates_.push_back(nd.index);
  for (const HullNode& nd : upper_) candidates_.push_back(nd.index);

  int forced = forced_index;
  for (int round = 0; round < 3; ++round) {
    basis_.reset(points_);
    basis_.push(forced);
    ArrayWelzl run(points_, candidates_, basis_);
    ball_ = run.run();
    const auto basis = run.last_basis();
    support_.assign(basis.begin(), basis.end());

    int worst = -1;
    double worst_excess = 0.0;
    const double r2 = ball_.radius * ball_.radius;
    const double limit = r2 + r2 * 1e-12 + 1e-28;
    for (int idx : candidates_) {
      const double d2 = squared_distance(ball_.center, points_[static_cast<std::size_t>(idx)]);
      if (d2 > limit && d2 - limit > worst_excess) {
        worst_excess = d2 - limit;
        worst = idx;
      }
    }
    if (worst < 0) break;
    forced = worst;
  }
}

MebResult meb(std::span<const Point> points, Rng& rng) {
  if (points.empty()) throw InvalidInputError("empty point set");
  validate_points(points);
  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  MebEngine engine(points);
  for (int i : order) engine.insert(i);

  MebResult result;
  result.ball = engine.ball();
  result.support.indices.assign(engine.support().begin(), engine.support().end());
  std::sort(result.support.indices.begin(), result.support.indices.end());

  // Recompute the ball from the support points in coordinate order, so the
  // result depends only on the support set and not on the shuffle that
  // found it (duplicated inputs then reproduce the radius bit for bit).
  const Point* ptrs[kMaxDim + 1];
  const int m = static_cast<int>(result.support.indices.size());
  for (int j = 0; j < m; ++j) ptrs[j] = &points[static_cast<std::size_t>(result.support.indices[j])];
  std::sort(ptrs, ptrs + m, [](const Point* a, const Point* b) {
    for (int c = 0; c < a->dim(); ++c)
      if ((*a)[c] != (*b)[c]) return (*a)[c] < (*b)[c];
    return false;
  });
  if (const std::optional<Ball> canonical = circumball_impl(ptrs, m)) result.ball = *canonical;
  return result;
}

MebResult meb(std::span<const Point> points, std::uint64_t seed) {
  Rng rng(seed);
  return meb(points, rng);
}

}  // namespace msr
