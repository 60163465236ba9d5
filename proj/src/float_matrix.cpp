#include "projcalc/floating/matrix.hpp"

#include <algorithm>

#include "projcalc/errors.hpp"

namespace projcalc::floating {

bool all_finite(const FloatMatrix& m) {
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    const Complex z = m.data()[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double distance(const FloatMatrix& a, const FloatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("distance: shape mismatch");
  return (a - b).norm();
}

bool approx_equal(const FloatMatrix& a, const FloatMatrix& b, const ToleranceConfig& tol) {
  const double diff = distance(a, b);
  const double scale = std::max(a.norm(), b.norm());
  return diff <= tol.equality_abs_tol + tol.equality_rel_tol * scale;
}

RankDecision decide_rank(const Eigen::VectorXd& sigma, std::size_t rows, std::size_t cols,
                         const ToleranceConfig& tol) {
  RankDecision out;
  const double sigma_max = sigma.size() > 0 ? sigma.maxCoeff() : 0.0;
  out.cutoff = std::max(tol.rank_cutoff_factor * static_cast<double>(std::max(rows, cols)) * sigma_max,
                        tol.rank_abs_floor);
  const double low = out.cutoff / tol.ambiguity_band;
  const double high = out.cutoff * tol.ambiguity_band;
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    const double s = sigma[k];
    if (s > out.cutoff) ++out.rank;
    if (s > low && s <= high) out.near_cutoff = true;
  }
  return out;
}

Eigen::VectorXd singular_values(const FloatMatrix& m) {
  if (m.size() == 0) return Eigen::VectorXd();
  Eigen::JacobiSVD<FloatMatrix> svd(m);
  if (svd.info() != Eigen::Success) throw BackendFailure("singular value decomposition failed");
  return svd.singularValues();
}

RankDecision numerical_rank(const FloatMatrix& m, const ToleranceConfig& tol) {
  return decide_rank(singular_values(m), static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()),
                     tol);
}

}  // namespace projcalc::floating
