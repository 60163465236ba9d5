#include "projcalc/errors.hpp"
#include "projcalc/oracle/subspace.hpp"

namespace projcalc::oracle {

namespace {

void require_same_ambient(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch("subspaces live in different ambient spaces");
}

using floating::FloatMatrix;

FloatMatrix hstack(const FloatMatrix& a, const FloatMatrix& b) {
  FloatMatrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

}  // namespace

FloatOracle::Space FloatOracle::column_space(const Matrix& m) const {
  const auto n = static_cast<std::size_t>(m.rows());
  if (m.cols() == 0) return {n, Matrix(m.rows(), 0), false};
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  if (svd.info() != Eigen::Success) throw BackendFailure("oracle: SVD failed");
  const floating::RankDecision rd =
      floating::decide_rank(svd.singularValues(), n, static_cast<std::size_t>(m.cols()), tol_);
  return {n, svd.matrixU().leftCols(static_cast<Eigen::Index>(rd.rank)), rd.near_cutoff};
}

FloatOracle::Space FloatOracle::whole(std::size_t n) const {
  const auto k = static_cast<Eigen::Index>(n);
  return {n, Matrix::Identity(k, k), false};
}

FloatOracle::Space FloatOracle::sum(const Space& u, const Space& v) const {
  require_same_ambient(u.ambient_dim, v.ambient_dim);
  Space s = column_space(hstack(u.basis, v.basis));
  s.near_cutoff = s.near_cutoff || u.near_cutoff || v.near_cutoff;
  return s;
}

FloatOracle::Space FloatOracle::intersection(const Space& u, const Space& v) const {
  require_same_ambient(u.ambient_dim, v.ambient_dim);
  const bool inherited = u.near_cutoff || v.near_cutoff;
  const auto n = static_cast<Eigen::Index>(u.ambient_dim);
  if (u.is_trivial() || v.is_trivial()) return {u.ambient_dim, Matrix(n, 0), inherited};
  const Matrix stacked = hstack(u.basis, -v.basis);
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) throw BackendFailure("oracle: SVD failed");
  const floating::RankDecision rd = floating::decide_rank(
      svd.singularValues(), u.ambient_dim, static_cast<std::size_t>(stacked.cols()), tol_);
  const auto nullity = stacked.cols() - static_cast<Eigen::Index>(rd.rank);
  if (nullity == 0) return {u.ambient_dim, Matrix(n, 0), inherited || rd.near_cutoff};
  const Matrix kernel = svd.matrixV().rightCols(nullity);
  const Matrix image = u.basis * kernel.topRows(u.basis.cols());
  Space s = column_space(image);
  s.near_cutoff = s.near_cutoff || inherited || rd.near_cutoff;
  return s;
}

Decision FloatOracle::contains(const Space& u, const Space& v) const {
  const Space s = sum(u, v);
  return {s.rank() == u.rank(), s.near_cutoff};
}

Decision FloatOracle::equal(const Space& u, const Space& v) const {
  require_same_ambient(u.ambient_dim, v.ambient_dim);
  const Decision c = contains(u, v);
  return {u.rank() == v.rank() && c.holds, c.near_cutoff || u.near_cutoff || v.near_cutoff};
}

Decision FloatOracle::orthogonal(const Space& u, const Space& v) const {
  require_same_ambient(u.ambient_dim, v.ambient_dim);
  const bool near = u.near_cutoff || v.near_cutoff;
  if (u.is_trivial() || v.is_trivial()) return {true, near};
  // Orthonormal bases: the cross-Gram has unit scale.
  return {(v.basis.adjoint() * u.basis).norm() <= tol_.equality_abs_tol + tol_.equality_rel_tol, near};
}

Decision FloatOracle::is_direct_sum_whole(const Space& u, const Space& v) const {
  require_same_ambient(u.ambient_dim, v.ambient_dim);
  const Space meet = intersection(u, v);
  return {u.rank() + v.rank() == u.ambient_dim && meet.is_trivial(),
          meet.near_cutoff || u.near_cutoff || v.near_cutoff};
}

FloatOracle::Matrix FloatOracle::projector(const Space& u) const {
  const auto n = static_cast<Eigen::Index>(u.ambient_dim);
  if (u.is_trivial()) return Matrix::Zero(n, n);
  Matrix p = u.basis * u.basis.adjoint();
  return (p + p.adjoint()) / 2.0;
}

}  // namespace projcalc::oracle
