#include "projcalc/floating/mp.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "projcalc/errors.hpp"

namespace projcalc::floating {

MpFloatResult mp_float(const FloatMatrix& m, const ToleranceConfig& tol) {
  if (!all_finite(m)) throw BackendFailure("mp_float: non-finite input");
  MpFloatResult out;
  if (m.size() == 0) {
    out.value = FloatMatrix::Zero(m.cols(), m.rows());
    return out;
  }
  Eigen::JacobiSVD<FloatMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) throw BackendFailure("mp_float: SVD did not converge");
  const Eigen::VectorXd& sigma = svd.singularValues();
  const RankDecision rank = decide_rank(sigma, static_cast<std::size_t>(m.rows()),
                                        static_cast<std::size_t>(m.cols()), tol);
  const auto r = static_cast<Eigen::Index>(rank.rank);
  Eigen::VectorXd inv = sigma.head(r).cwiseInverse();
  out.value = svd.matrixV().leftCols(r) * inv.asDiagonal() * svd.matrixU().leftCols(r).adjoint();
  out.rank = rank.rank;
  out.near_cutoff = rank.near_cutoff;
  if (!all_finite(out.value)) throw BackendFailure("mp_float: non-finite result");
  return out;
}

std::optional<FloatMatrix> inverse_float(const FloatMatrix& m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const RankDecision rank = numerical_rank(m, tol);
  if (rank.rank < static_cast<std::size_t>(m.rows())) return std::nullopt;
  return FloatMatrix(m.fullPivLu().inverse());
}

FloatMatrix project_to_nearest_projection(const FloatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("projection hygiene needs a square matrix");
  if (!all_finite(m)) throw BackendFailure("projection hygiene: non-finite input");
  const FloatMatrix herm = (m + m.adjoint()) / 2.0;
  if ((m - herm).norm() > 0.1) throw NotAProjection("input is far from self-adjoint");
  Eigen::SelfAdjointEigenSolver<FloatMatrix> eig(herm);
  if (eig.info() != Eigen::Success) throw BackendFailure("eigen decomposition failed");
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  Eigen::VectorXd snapped(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    if (std::abs(lambda[k] - 0.5) <= 0.1) {
      throw NotAProjection("eigenvalue near 1/2; input is not plausibly a projection");
    }
    snapped[k] = lambda[k] > 0.5 ? 1.0 : 0.0;
  }
  const FloatMatrix& v = eig.eigenvectors();
  FloatMatrix out = v * snapped.asDiagonal() * v.adjoint();
  return (out + out.adjoint()) / 2.0;
}

}  // namespace projcalc::floating
