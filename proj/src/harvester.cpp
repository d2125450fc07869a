#include "swipt/harvester.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace swipt {

namespace {

void check_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string("harvester parameter ") + name + " must be positive and finite");
  }
}

}  // namespace

HarvesterModel::HarvesterModel(LogisticParams p) : params_(p) {
  check_positive(p.M, "M");
  check_positive(p.a, "a");
  check_positive(p.b, "b");
}

HarvesterModel::HarvesterModel(CutoffParams p) : params_(p) {
  check_positive(p.c, "c");
  if (!(p.x_L >= 0.0) || !(p.x_U > p.x_L) || !std::isfinite(p.x_U)) {
    throw std::invalid_argument("cutoff harvester requires 0 <= x_L < x_U");
  }
}

double HarvesterModel::harvest(double x) const {
  if (!(x >= 0.0)) {
    throw std::domain_error("harvest: received power must be nonnegative");
  }
  if (const auto* lp = std::get_if<LogisticParams>(&params_)) {
    // (M sigma(a(x-b)) - offset) / scale, rewritten without cancellation:
    // M (1 - e^{-ax}) / (1 + e^{a(b-x)}).
    const double num = -std::expm1(-lp->a * x);
    const double den = 1.0 + std::exp(lp->a * (lp->b - x));
    return lp->M * num / den;
  }
  const auto& cp = std::get<CutoffParams>(params_);
  if (x < cp.x_L) return 0.0;
  if (x > cp.x_U) return cp.c * (cp.x_U - cp.x_L);
  return cp.c * (x - cp.x_L);
}

double HarvesterModel::log_slope(double x) const {
  if (!(x >= 0.0)) throw std::domain_error("log_slope: received power must be nonnegative");
  if (const auto* lp = std::get_if<LogisticParams>(&params_)) {
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    return lp->a / std::expm1(lp->a * x) + lp->a / (1.0 + std::exp(lp->a * (x - lp->b)));
  }
  const auto& cp = std::get<CutoffParams>(params_);
  if (x <= cp.x_L) return std::numeric_limits<double>::infinity();
  if (x >= cp.x_U) return 0.0;
  return 1.0 / (x - cp.x_L);
}

double HarvesterModel::max_harvest() const {
  if (const auto* lp = std::get_if<LogisticParams>(&params_)) return lp->M;
  const auto& cp = std::get<CutoffParams>(params_);
  return cp.c * (cp.x_U - cp.x_L);
}

std::optional<double> HarvesterModel::harvest_inverse(double y) const {
  if (!(y >= 0.0)) {
    throw std::domain_error("harvest_inverse: level must be nonnegative");
  }
  if (y >= max_harvest()) return std::nullopt;

  if (const auto* lp = std::get_if<LogisticParams>(&params_)) {
    if (y == 0.0) return 0.0;
    const double x = std::log1p(y * (1.0 + std::exp(lp->a * lp->b)) / (lp->M - y)) / lp->a;
    if (std::isfinite(x)) return x;

    // e^{ab} overflowed; bracket and bisect on the forward map.
    double lo = 0.0;
    double hi = lp->b + 20.0 / lp->a;
    while (harvest(hi) < y) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (harvest(mid) < y ? lo : hi) = mid;
    }
    return hi;
  }
  const auto& cp = std::get<CutoffParams>(params_);
  return cp.x_L + y / cp.c;
}

}  // namespace swipt
