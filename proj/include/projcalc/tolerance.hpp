#pragma once

#include <cmath>
#include <limits>

namespace projcalc {

// Numerical thresholds for the floating backend. The exact backend ignores
// every field.
//
// A singular value s of an m x n matrix counts as zero when
//   s <= max(rank_cutoff_factor * max(m, n) * s_max, rank_abs_floor).
// A rank decision is flagged as near the cutoff when some singular value
// lies in (cutoff / ambiguity_band, cutoff * ambiguity_band].
struct ToleranceConfig {
  double rank_cutoff_factor = 1e-12;
  double equality_rel_tol = 1e-10;
  double equality_abs_tol = 1e-12;
  double rank_abs_floor = 1e-12;
  double ambiguity_band = 100.0;

  // Condition number above which eps * kappa^2, the error floor of the
  // products checked by the statements, reaches equality_rel_tol.
  double conditioning_cap() const { return std::sqrt(equality_rel_tol / std::numeric_limits<double>::epsilon()); }

  bool valid() const {
    return rank_cutoff_factor > 0 && equality_rel_tol > 0 &&
           equality_abs_tol > 0 && rank_abs_floor > 0 && ambiguity_band > 1;
  }
};

}  // namespace projcalc
