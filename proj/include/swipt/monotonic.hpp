#pragma once

// Polyblock outer approximation for
//
//   max f(x)  s.t.  g(x) <= 0,  lower <= x <= upper,
//
// with f and g nondecreasing in every coordinate. The vertex set Z starts at
// the upper corner; each vertex is projected onto the boundary {g = 0} along
// the ray from the lower corner, the best projection becomes the incumbent,
// and the vertex with the largest f is replaced by its d children
// z + (proj(z) - z) o e_k. The search stops once no vertex bound exceeds the
// incumbent by more than epsilon.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace swipt {

struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t dim() const { return lower.size(); }
};

using MonotoneFn = std::function<double(std::span<const double>)>;

struct MonotonicProblem {
  Box box;
  MonotoneFn objective;   // nondecreasing
  MonotoneFn constraint;  // nondecreasing, feasible iff <= 0
};

inline constexpr double kRayTolerance = 1e-10;
inline constexpr double kFeasibilitySlack = 1e-9;
inline constexpr std::size_t kMaxVertices = 1'000'000;

struct PolyblockTrace {
  std::size_t iteration;
  double incumbent;
  double best_bound;
  std::size_t vertices;
};

struct PolyblockOptions {
  double epsilon = 1e-2;
  std::size_t max_vertices = kMaxVertices;
  double ray_tolerance = kRayTolerance;
  double feasibility_slack = kFeasibilitySlack;
  std::function<void(const PolyblockTrace&)> observer;
};

struct PolyblockResult {
  std::vector<double> x;
  double value = 0.0;
  double certified_gap = 0.0;  // largest remaining vertex bound minus value, clipped at 0
  std::size_t iterations = 0;
  std::size_t projections = 0;
  std::size_t peak_vertices = 0;
  double ray_tolerance = kRayTolerance;
  double feasibility_slack = kFeasibilitySlack;
};

/// Thrown when the vertex set grows past PolyblockOptions::max_vertices.
class PolyblockOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest u in [0, 1] with constraint(lower + u (z - lower)) <= 0, to within
/// `tolerance` on u. Returns the feasible end of the final bracket.
double ray_projection(const MonotoneFn& constraint, std::span<const double> lower, std::span<const double> z,
                      double tolerance = kRayTolerance);

/// epsilon-optimal solution. Throws std::domain_error if epsilon <= 0, the box
/// is malformed, or the lower corner is infeasible; PolyblockOverflow if the
/// vertex cap is hit.
PolyblockResult polyblock_solve(const MonotonicProblem& prob, const PolyblockOptions& opts);

}  // namespace swipt
