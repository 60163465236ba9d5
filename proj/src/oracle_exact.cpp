#include <stdexcept>

#include "projcalc/errors.hpp"
#include "projcalc/oracle/subspace.hpp"

namespace projcalc::oracle {

namespace {

void require_same_ambient(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch("subspaces live in different ambient spaces");
}

}  // namespace

ExactOracle::Space ExactOracle::column_space(const Matrix& m) const {
  const exact::RrefResult red = exact::rref(m);
  return {m.rows(), m.columns(red.pivots), false};
}

ExactOracle::Space ExactOracle::whole(std::size_t n) const { return {n, Matrix::identity(n), false}; }

ExactOracle::Space ExactOracle::sum(const Space& u, const Space& v) const {
  require_same_ambient(u.ambient_dim, v.ambient_dim);
  return column_space(u.basis.hconcat(v.basis));
}

ExactOracle::Space ExactOracle::intersection(const Space& u, const Space& v) const {
  require_same_ambient(u.ambient_dim, v.ambient_dim);
  if (u.is_trivial() || v.is_trivial()) return {u.ambient_dim, Matrix(u.ambient_dim, 0), false};
  // u x = v y  <=>  [B_u | -B_v] (x; y) = 0
  const Matrix kernel = exact::null_space(u.basis.hconcat(-v.basis));
  const Matrix top = kernel.top_rows(u.rank());
  return column_space(u.basis * top);
}

Decision ExactOracle::contains(const Space& u, const Space& v) const { return {sum(u, v).rank() == u.rank(), false}; }

Decision ExactOracle::equal(const Space& u, const Space& v) const {
  require_same_ambient(u.ambient_dim, v.ambient_dim);
  return {u.rank() == v.rank() && contains(u, v).holds, false};
}

Decision ExactOracle::orthogonal(const Space& u, const Space& v) const {
  require_same_ambient(u.ambient_dim, v.ambient_dim);
  if (u.is_trivial() || v.is_trivial()) return {true, false};
  return {(v.basis.adjoint() * u.basis).is_zero(), false};
}

Decision ExactOracle::is_direct_sum_whole(const Space& u, const Space& v) const {
  require_same_ambient(u.ambient_dim, v.ambient_dim);
  return {u.rank() + v.rank() == u.ambient_dim && intersection(u, v).is_trivial(), false};
}

ExactOracle::Matrix ExactOracle::projector(const Space& u) const {
  const std::size_t n = u.ambient_dim;
  if (u.is_trivial()) return Matrix::zero(n, n);
  const Matrix adj = u.basis.adjoint();
  const auto gram_inv = exact::inverse(adj * u.basis);
  if (!gram_inv) throw std::logic_error("oracle basis is not independent");
  return u.basis * (*gram_inv) * adj;
}

}  // namespace projcalc::oracle
