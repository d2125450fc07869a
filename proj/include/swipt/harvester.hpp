#pragma once

#include <optional>
#include <variant>

namespace swipt {

/// Sigmoid harvester: saturates at M, steepness a, inflection b.
struct LogisticParams {
  double M = 2.3e-2;   // W
  double a = 170.0;    // 1/W
  double b = 1.398e-2; // W
};

/// Piecewise-linear harvester: dead zone below x_L, slope c, flat above x_U.
struct CutoffParams {
  double c = 0.7833;
  double x_L = 0.0;  // W
  double x_U = 3e-2; // W
};

/// Received RF power -> harvested DC power. Immutable once validated.
class HarvesterModel {
 public:
  explicit HarvesterModel(LogisticParams p);
  explicit HarvesterModel(CutoffParams p);

  bool is_logistic() const { return std::holds_alternative<LogisticParams>(params_); }
  bool is_cutoff() const { return std::holds_alternative<CutoffParams>(params_); }
  const LogisticParams& logistic() const { return std::get<LogisticParams>(params_); }
  const CutoffParams& cutoff() const { return std::get<CutoffParams>(params_); }

  /// Harvested power for received power x >= 0. Throws std::domain_error on x < 0.
  double harvest(double x) const;

  /// d/dx ln harvest(x), taken from the right. +inf where harvest(x) = 0.
  /// Both models are log-concave, so this is nonincreasing in x.
  double log_slope(double x) const;

  /// Upper limit of harvest(): M, or c(x_U - x_L).
  double max_harvest() const;

  /// Smallest x with harvest(x) = y. std::nullopt means y >= max_harvest(),
  /// i.e. the level is never exceeded and callers treat the bound as +inf.
  std::optional<double> harvest_inverse(double y) const;

 private:
  std::variant<LogisticParams, CutoffParams> params_;
};

}  // namespace swipt
