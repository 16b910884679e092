#pragma once

#include "norlund/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace norlund {

/// Finite-horizon knobs shared by every diagnostic. The underlying
/// limits quantify over all m; these parameters pin down what "at
/// horizon M" means for a program.
struct LimitConfig {
  std::size_t horizon = 64;      ///< M: sequences cover indices 0..M
  std::size_t window = 8;        ///< w: tail window inspected by the detectors
  double tolerance = 1e-9;       ///< tau: Cauchy tolerance for convergence
  double zero_threshold = 1e-6;  ///< |value| at or below this counts as zero
  double growth_factor = 1.5;    ///< tail/mid ratio that flags growth

  void validate() const {
    if (window < 2) throw InputError("window must be >= 2");
    if (window > horizon) throw InputError("window must not exceed horizon");
    if (!(tolerance > 0)) throw InputError("tolerance must be > 0");
    if (!(growth_factor > 1)) throw InputError("growth-factor must be > 1");
    if (zero_threshold < 0) throw InputError("zero-threshold must be >= 0");
  }
};

enum class LimitStatus { converged, diverging, inconclusive };

/// What a finite prefix of a sequence says about its limit. `value` is
/// meaningful only when status == converged.
struct LimitEstimate {
  LimitStatus status = LimitStatus::inconclusive;
  double value = 0.0;
  std::size_t horizon = 0;  ///< index of the last term inspected
  std::size_t window = 0;
  double tolerance = 0.0;
  bool overflow = false;  ///< input held values outside double range
};

enum class GrowthStatus { bounded_at_horizon, growing_at_horizon, inconclusive };

/// Cauchy-window limit detection.
///
/// converged:   the last w terms pairwise differ by <= tau; value is
///              their mean.
/// diverging:   |x| strictly increases over the last w terms and
///              |x_last| > growth_factor * |x_mid| (mid = ceil(M/2)).
/// otherwise inconclusive. Non-finite input short-circuits to
/// inconclusive with the overflow flag set.
inline LimitEstimate detect_limit(std::span<const double> x, const LimitConfig& cfg) {
  cfg.validate();
  const std::size_t w = cfg.window;
  if (x.size() < w) throw InputError("sequence shorter than detection window");

  LimitEstimate est;
  est.horizon = x.size() - 1;
  est.window = w;
  est.tolerance = cfg.tolerance;

  for (double v : x) {
    if (!std::isfinite(v)) {
      est.overflow = true;
      return est;
    }
  }

  auto tail = x.subspan(x.size() - w);
  const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
  if (*hi - *lo <= cfg.tolerance) {
    est.status = LimitStatus::converged;
    double sum = 0.0;
    for (double v : tail) sum += v;
    est.value = sum / static_cast<double>(w);
    return est;
  }

  bool increasing = true;
  for (std::size_t i = 1; i < w && increasing; ++i)
    increasing = std::abs(tail[i - 1]) < std::abs(tail[i]);
  const double mid = std::abs(x[x.size() / 2]);
  if (increasing && std::abs(tail.back()) > cfg.growth_factor * mid)
    est.status = LimitStatus::diverging;
  return est;
}

inline LimitEstimate detect_limit(const std::vector<double>& x, const LimitConfig& cfg) {
  return detect_limit(std::span<const double>(x), cfg);
}

/// Boundedness detection on a nonnegative sequence, exact when T is
/// Rational. Growth is checked first: a strictly increasing tail whose
/// last value exceeds growth_factor times the mid-horizon value is
/// growing-at-horizon. Failing that, a maximum attained at some
/// m <= M - w is bounded-at-horizon. Anything else is inconclusive.
template <typename T>
GrowthStatus detect_growth(std::span<const T> x, const LimitConfig& cfg) {
  cfg.validate();
  const std::size_t w = cfg.window;
  if (x.size() < w) throw InputError("sequence shorter than detection window");

  if constexpr (std::is_floating_point_v<T>) {
    for (T v : x)
      if (!std::isfinite(v)) return GrowthStatus::inconclusive;
  }

  const std::size_t last = x.size() - 1;
  bool increasing = true;
  for (std::size_t i = last - w + 2; i <= last && increasing; ++i)
    increasing = x[i - 1] < x[i];
  if (increasing) {
    const T& mid = x[(last + 1) / 2];
    if (x[last] > T(cfg.growth_factor) * mid) return GrowthStatus::growing_at_horizon;
  }

  std::size_t argmax = 0;
  for (std::size_t i = 1; i <= last; ++i)
    if (x[i] > x[argmax]) argmax = i;
  if (last >= w && argmax <= last - w) return GrowthStatus::bounded_at_horizon;
  return GrowthStatus::inconclusive;
}

template <typename T>
GrowthStatus detect_growth(const std::vector<T>& x, const LimitConfig& cfg) {
  return detect_growth(std::span<const T>(x), cfg);
}

inline const char* to_string(LimitStatus s) {
  switch (s) {
    case LimitStatus::converged: return "converged";
    case LimitStatus::diverging: return "diverging";
    default: return "inconclusive";
  }
}

inline const char* to_string(GrowthStatus s) {
  switch (s) {
    case GrowthStatus::bounded_at_horizon: return "bounded-at-horizon";
    case GrowthStatus::growing_at_horizon: return "growing-at-horizon";
    default: return "inconclusive";
  }
}

} // namespace norlund
