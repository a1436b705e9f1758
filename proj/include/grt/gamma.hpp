#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "grt/error.hpp"
#include "grt/linalg.hpp"
#include "grt/metric.hpp"

namespace grt {

struct ScanConfig {
  double p_min = 1.0;
  double p_max = 2.0;
  int grid_steps = 256;
  double bisect_tolerance = 1e-9;
  double singular_threshold = 1e-12;

  void validate() const {
    if (!(p_min > 0.0 && p_min < p_max)) throw Error("need 0 < p_min < p_max");
    if (grid_steps < 8) throw Error("grid must have >= 8 steps");
    if (!(bisect_tolerance > 0.0 && singular_threshold > 0.0))
      throw Error("tolerances must be positive");
  }
};

enum class GammaIndicator {
  matrix_determinant_zero,
  bordered_determinant_zero,
  none_in_range,
  degenerate_small_space,
};

inline const char* to_string(GammaIndicator ind) {
  switch (ind) {
    case GammaIndicator::matrix_determinant_zero: return "matrix-determinant-zero";
    case GammaIndicator::bordered_determinant_zero: return "bordered-determinant-zero";
    case GammaIndicator::none_in_range: return "none-in-range";
    case GammaIndicator::degenerate_small_space: return "degenerate-small-space";
  }
  return "?";
}

struct GammaEstimate {
  double p_low = 0.0;
  double p_high = 0.0;
  GammaIndicator indicator = GammaIndicator::none_in_range;
  long long evaluations = 0;
  ScanConfig config;

  double midpoint() const { return 0.5 * (p_low + p_high); }
};

// Generalized roundness of a finite metric as the smallest exponent at
// which either det(A_p) or the bordered determinant vanishes.  Scans the
// grid for the first sign change relative to p_min, then bisects that
// indicator to the configured tolerance.
inline GammaEstimate gamma(const DistanceMatrix& metric,
                           const ScanConfig& cfg = {}) {
  cfg.validate();
  GammaEstimate est;
  est.config = cfg;
  if (metric.size() <= 2) {
    // Two points satisfy every exponent; gamma is unbounded.
    est.indicator = GammaIndicator::degenerate_small_space;
    est.p_low = est.p_high = std::numeric_limits<double>::infinity();
    return est;
  }

  // Scan the metric normalized by its diameter: zeros of both indicators
  // are scale-invariant, and because IEEE division rounds correctly a
  // rescaled input probes bit-identical matrices.
  const int size = metric.size();
  double diameter = 0.0;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) diameter = std::max(diameter, metric(i, j));
  std::vector<double> normalized(static_cast<size_t>(size) * size, 0.0);
  if (diameter > 0.0)
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        normalized[static_cast<size_t>(i) * size + j] = metric(i, j) / diameter;
  const DistanceMatrix scan(size, std::move(normalized));

  auto probe = [&](double p) -> std::pair<int, int> {
    SquareMatrix a = assemble_power_matrix(scan, p);
    const int bordered_sign = bordered_det(a, cfg.singular_threshold).sign;
    const int det_sign = signed_log_det(std::move(a), cfg.singular_threshold).sign;
    ++est.evaluations;
    return {det_sign, bordered_sign};
  };

  const auto [ref_det, ref_bor] = probe(cfg.p_min);
  if (ref_det == 0 || ref_bor == 0) {
    // An indicator already vanishes at the window start.
    est.p_low = est.p_high = cfg.p_min;
    est.indicator = ref_det == 0 ? GammaIndicator::matrix_determinant_zero
                                 : GammaIndicator::bordered_determinant_zero;
    return est;
  }

  const double step = (cfg.p_max - cfg.p_min) / cfg.grid_steps;
  double prev = cfg.p_min;
  for (int i = 1; i <= cfg.grid_steps; ++i) {
    const double p = i == cfg.grid_steps ? cfg.p_max : cfg.p_min + i * step;
    auto [sd, sb] = probe(p);
    bool det_changed = sd != ref_det;
    bool bor_changed = sb != ref_bor;
    if (!det_changed && !bor_changed) {
      prev = p;
      continue;
    }

    // Both indicators changed inside one cell: split until they separate,
    // so the smaller zero wins (the infimum ranges over both zero sets).
    double lo = prev, hi = p;
    for (int refine = 0; det_changed && bor_changed && refine < 20; ++refine) {
      const double mid = 0.5 * (lo + hi);
      auto [md, mb] = probe(mid);
      const bool mid_det = md != ref_det;
      const bool mid_bor = mb != ref_bor;
      if (mid_det || mid_bor) {
        hi = mid;
        det_changed = mid_det;
        bor_changed = mid_bor;
      } else {
        lo = mid;
      }
    }
    const bool track_det = det_changed;
    est.indicator = track_det ? GammaIndicator::matrix_determinant_zero
                              : GammaIndicator::bordered_determinant_zero;

    while (hi - lo > cfg.bisect_tolerance) {
      const double mid = 0.5 * (lo + hi);
      auto [md, mb] = probe(mid);
      const int s = track_det ? md : mb;
      const int ref = track_det ? ref_det : ref_bor;
      if (s != ref)
        hi = mid;
      else
        lo = mid;
    }
    est.p_low = lo;
    est.p_high = hi;
    return est;
  }

  est.indicator = GammaIndicator::none_in_range;
  est.p_low = cfg.p_min;
  est.p_high = cfg.p_max;
  return est;
}

}  // namespace grt
