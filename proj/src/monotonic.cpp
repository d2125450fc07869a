#include "swipt/monotonic.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <utility>

namespace swipt {

namespace {

// Vertices live in a flat pool: slot i holds z at [2di, 2di + d) and its
// projection omega at [2di + d, 2di + 2d).
class VertexPool {
 public:
  explicit VertexPool(std::size_t d) : d_(d) {}

  std::size_t acquire() {
    if (!free_.empty()) {
      const std::size_t slot = free_.back();
      free_.pop_back();
      return slot;
    }
    data_.resize(data_.size() + 2 * d_);
    return data_.size() / (2 * d_) - 1;
  }
  void release(std::size_t slot) { free_.push_back(slot); }

  std::span<double> z(std::size_t slot) { return {data_.data() + 2 * d_ * slot, d_}; }
  std::span<double> omega(std::size_t slot) { return {data_.data() + 2 * d_ * slot + d_, d_}; }

 private:
  std::size_t d_;
  std::vector<double> data_;
  std::vector<std::size_t> free_;
};

void point_on_ray(std::span<const double> lower, std::span<const double> z, double u, std::span<double> out) {
  for (std::size_t k = 0; k < z.size(); ++k) out[k] = lower[k] + u * (z[k] - lower[k]);
}

double bisect_ray(const MonotoneFn& constraint, std::span<const double> lower, std::span<const double> z,
                  double lo, double tolerance, std::vector<double>& scratch) {
  scratch.resize(z.size());
  if (constraint(z) <= 0.0) return 1.0;
  double hi = 1.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    point_on_ray(lower, z, mid, scratch);
    (constraint(scratch) <= 0.0 ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

double ray_projection(const MonotoneFn& constraint, std::span<const double> lower, std::span<const double> z,
                      double tolerance) {
  std::vector<double> scratch;
  return bisect_ray(constraint, lower, z, 0.0, tolerance, scratch);
}

PolyblockResult polyblock_solve(const MonotonicProblem& prob, const PolyblockOptions& opts) {
  if (!(opts.epsilon > 0.0)) throw std::domain_error("polyblock_solve: epsilon must be positive");
  const Box& box = prob.box;
  const std::size_t d = box.dim();
  if (d == 0 || box.upper.size() != d) throw std::domain_error("polyblock_solve: malformed box");
  for (std::size_t k = 0; k < d; ++k) {
    if (!(box.lower[k] <= box.upper[k])) throw std::domain_error("polyblock_solve: box lower exceeds upper");
  }

  PolyblockResult res;
  res.ray_tolerance = opts.ray_tolerance;
  res.feasibility_slack = opts.feasibility_slack;

  if (prob.constraint(box.upper) <= 0.0) {
    res.x = box.upper;
    res.value = prob.objective(box.upper);
    return res;
  }
  if (prob.constraint(box.lower) > opts.feasibility_slack) {
    throw std::domain_error("polyblock_solve: lower corner of the box is infeasible");
  }

  res.x = box.lower;
  res.value = prob.objective(box.lower);
  const std::span<const double> lower(box.lower);
  std::vector<double> scratch;

  // Projects the vertex in `slot` along the ray from the lower corner, starting
  // the bisection at u_lo (known feasible), and updates the incumbent.
  VertexPool pool(d);
  auto project = [&](std::size_t slot, double u_lo) {
    const auto z = pool.z(slot);
    const auto omega = pool.omega(slot);
    const double u = bisect_ray(prob.constraint, lower, z, u_lo, opts.ray_tolerance, scratch);
    point_on_ray(lower, z, u, omega);
    ++res.projections;
    const double val = prob.objective(omega);
    if (val > res.value) {
      res.value = val;
      res.x.assign(omega.begin(), omega.end());
    }
  };

  // Largest bound among vertices dropped by the epsilon test.
  double discarded = res.value;
  auto prune = [&](double bound) {
    if (bound > res.value + opts.epsilon) return false;
    discarded = std::max(discarded, bound);
    return true;
  };

  using Entry = std::pair<double, std::size_t>;  // (bound, slot)
  std::priority_queue<Entry> live;
  {
    const std::size_t root = pool.acquire();
    std::copy(box.upper.begin(), box.upper.end(), pool.z(root).begin());
    project(root, 0.0);
    live.emplace(prob.objective(box.upper), root);
  }

  std::vector<double> parent_z(d);
  std::vector<double> parent_omega(d);
  while (!live.empty()) {
    if (live.top().first <= res.value + opts.epsilon) break;

    const std::size_t top = live.top().second;
    live.pop();
    ++res.iterations;
    std::copy(pool.z(top).begin(), pool.z(top).end(), parent_z.begin());
    std::copy(pool.omega(top).begin(), pool.omega(top).end(), parent_omega.begin());
    pool.release(top);

    for (std::size_t k = 0; k < d; ++k) {
      if (!(parent_omega[k] < parent_z[k])) continue;
      const std::size_t slot = pool.acquire();
      const auto z = pool.z(slot);
      std::copy(parent_z.begin(), parent_z.end(), z.begin());
      z[k] = parent_omega[k];

      const double bound = prob.objective(z);
      if (prune(bound)) {
        pool.release(slot);
        continue;
      }
      // The child dominates the parent's projection, so the ray point that
      // stays below that projection in every coordinate is feasible.
      double u_lo = 1.0;
      for (std::size_t j = 0; j < d; ++j) {
        if (z[j] > lower[j]) u_lo = std::min(u_lo, (parent_omega[j] - lower[j]) / (z[j] - lower[j]));
      }
      project(slot, std::clamp(u_lo, 0.0, 1.0));
      if (prune(bound)) {
        pool.release(slot);
        continue;
      }
      live.emplace(bound, slot);
    }

    res.peak_vertices = std::max(res.peak_vertices, live.size());
    if (live.size() > opts.max_vertices) {
      throw PolyblockOverflow("polyblock_solve: vertex set exceeded " + std::to_string(opts.max_vertices));
    }
    if (opts.observer) {
      opts.observer({res.iterations, res.value, live.empty() ? res.value : live.top().first, live.size()});
    }
  }

  const double bound = live.empty() ? discarded : std::max(discarded, live.top().first);
  res.certified_gap = std::max(0.0, bound - res.value);
  return res;
}

}  // namespace swipt
