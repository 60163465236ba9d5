#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string_view>

#include "projcalc/errors.hpp"
#include "projcalc/exact/matrix.hpp"
#include "projcalc/exact/mp.hpp"
#include "projcalc/floating/matrix.hpp"
#include "projcalc/floating/mp.hpp"
#include "projcalc/oracle/subspace.hpp"
#include "projcalc/tolerance.hpp"

namespace projcalc {

enum class BackendKind { exact, floating };

constexpr std::string_view to_string(BackendKind k) { return k == BackendKind::exact ? "exact" : "float"; }

struct RankInfo {
  std::size_t rank = 0;
  bool near_cutoff = false;
  double condition = 1.0;  // largest over smallest retained singular value
};

// n x n matrices over Q(i); equality is literal.
struct ExactBackend {
  using Matrix = exact::ExactMatrix;
  using Oracle = oracle::ExactOracle;
  static constexpr BackendKind kind = BackendKind::exact;

  static Matrix identity(std::size_t n) { return Matrix::identity(n); }
  static Matrix zero(std::size_t n) { return Matrix::zero(n, n); }
  static Matrix adjoint(const Matrix& m) { return m.adjoint(); }
  static std::size_t rows(const Matrix& m) { return m.rows(); }
  static std::size_t cols(const Matrix& m) { return m.cols(); }
  static Matrix mp_inverse(const Matrix& m, const ToleranceConfig&) { return exact::mp_exact(m); }
  static bool equal(const Matrix& a, const Matrix& b, const ToleranceConfig&) { return a == b; }
  static double distance(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("distance: shape mismatch");
    return std::sqrt((a - b).frobenius_norm2().get_d());
  }
  static double norm(const Matrix& m) { return std::sqrt(m.frobenius_norm2().get_d()); }
  static std::optional<Matrix> inverse(const Matrix& m, const ToleranceConfig&) { return exact::inverse(m); }
  static RankInfo rank(const Matrix& m, const ToleranceConfig&) { return {exact::rank(m), false}; }
};

// n x n complex double matrices; equality per ToleranceConfig.
struct FloatBackend {
  using Matrix = floating::FloatMatrix;
  using Oracle = oracle::FloatOracle;
  static constexpr BackendKind kind = BackendKind::floating;

  static Matrix identity(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return Matrix::Identity(k, k);
  }
  static Matrix zero(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return Matrix::Zero(k, k);
  }
  static Matrix adjoint(const Matrix& m) { return m.adjoint(); }
  static std::size_t rows(const Matrix& m) { return static_cast<std::size_t>(m.rows()); }
  static std::size_t cols(const Matrix& m) { return static_cast<std::size_t>(m.cols()); }
  static Matrix mp_inverse(const Matrix& m, const ToleranceConfig& tol) { return floating::mp_float(m, tol).value; }
  static bool equal(const Matrix& a, const Matrix& b, const ToleranceConfig& tol) {
    return floating::approx_equal(a, b, tol);
  }
  static double distance(const Matrix& a, const Matrix& b) { return floating::distance(a, b); }
  static double norm(const Matrix& m) { return m.norm(); }
  static std::optional<Matrix> inverse(const Matrix& m, const ToleranceConfig& tol) {
    return floating::inverse_float(m, tol);
  }
  static RankInfo rank(const Matrix& m, const ToleranceConfig& tol) {
    const Eigen::VectorXd s = floating::singular_values(m);
    const auto rd = floating::decide_rank(s, rows(m), cols(m), tol);
    const double cond = rd.rank == 0 ? 1.0 : s[0] / s[static_cast<Eigen::Index>(rd.rank) - 1];
    return {rd.rank, rd.near_cutoff, cond};
  }
};

template <class B>
concept StarRingBackend = requires(const typename B::Matrix& m, std::size_t n, const ToleranceConfig& tol) {
  typename B::Oracle;
  { B::kind } -> std::convertible_to<BackendKind>;
  { B::identity(n) } -> std::same_as<typename B::Matrix>;
  { B::zero(n) } -> std::same_as<typename B::Matrix>;
  { B::adjoint(m) } -> std::same_as<typename B::Matrix>;
  { B::mp_inverse(m, tol) } -> std::same_as<typename B::Matrix>;
  { B::equal(m, m, tol) } -> std::same_as<bool>;
  { B::distance(m, m) } -> std::same_as<double>;
  { B::inverse(m, tol) } -> std::same_as<std::optional<typename B::Matrix>>;
  { B::rank(m, tol) } -> std::same_as<RankInfo>;
};

// The *-ring of n x n matrices over a backend's scalars. Stateless apart from
// its dimension and tolerance, so it can be shared across threads.
template <StarRingBackend B>
class StarRing {
 public:
  using Backend = B;
  using Matrix = typename B::Matrix;
  using Oracle = typename B::Oracle;

  explicit StarRing(std::size_t dimension, ToleranceConfig tol = {}) : n_(dimension), tol_(tol) {
    if (n_ == 0) throw DimensionMismatch("ring dimension must be at least 1");
    if (!tol_.valid()) throw Error("tolerance fields must be strictly positive");
  }

  std::size_t dimension() const { return n_; }
  const ToleranceConfig& tolerance() const { return tol_; }
  static constexpr BackendKind kind() { return B::kind; }

  Matrix one() const { return B::identity(n_); }
  Matrix zero() const { return B::zero(n_); }
  Matrix star(const Matrix& x) const { return B::adjoint(require(x)); }
  Matrix mp(const Matrix& x) const { return B::mp_inverse(require(x), tol_); }
  std::optional<Matrix> inverse(const Matrix& x) const { return B::inverse(require(x), tol_); }
  RankInfo rank(const Matrix& x) const { return B::rank(require(x), tol_); }

  bool equal(const Matrix& x, const Matrix& y) const { return B::equal(require(x), require(y), tol_); }
  double distance(const Matrix& x, const Matrix& y) const { return B::distance(require(x), require(y)); }
  bool is_zero(const Matrix& x) const { return equal(x, zero()); }

  Oracle oracle() const { return Oracle(tol_); }

  const Matrix& require(const Matrix& x) const {
    if (B::rows(x) != n_ || B::cols(x) != n_) throw DimensionMismatch("element is not an n x n matrix of this ring");
    return x;
  }

 private:
  std::size_t n_;
  ToleranceConfig tol_;
};

using ExactRing = StarRing<ExactBackend>;
using FloatRing = StarRing<FloatBackend>;

// Residuals of the four Penrose equations:
// ||aba - a||, ||bab - b||, ||(ab)^* - ab||, ||(ba)^* - ba|| (Frobenius).
template <class Matrix>
struct MpWitness {
  Matrix element;
  Matrix mp;
  std::array<double, 4> residuals{};
  std::array<bool, 4> holds{};

  bool passed() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};

template <StarRingBackend B>
MpWitness<typename B::Matrix> penrose_check(const StarRing<B>& ring, const typename B::Matrix& a,
                                            const typename B::Matrix& b) {
  using M = typename B::Matrix;
  ring.require(a);
  ring.require(b);
  const M ab = a * b;
  const M ba = b * a;
  const std::array<std::pair<M, M>, 4> sides{{
      {M(ab * a), a},
      {M(ba * b), b},
      {ring.star(ab), ab},
      {ring.star(ba), ba},
  }};
  MpWitness<M> w{a, b, {}, {}};
  for (std::size_t k = 0; k < 4; ++k) {
    w.residuals[k] = ring.distance(sides[k].first, sides[k].second);
    w.holds[k] = ring.equal(sides[k].first, sides[k].second);
  }
  return w;
}

template <StarRingBackend B>
bool is_idempotent(const StarRing<B>& ring, const typename B::Matrix& x) {
  return ring.equal(typename B::Matrix(x * x), x);
}

template <StarRingBackend B>
bool is_projection(const StarRing<B>& ring, const typename B::Matrix& x) {
  return is_idempotent(ring, x) && ring.equal(ring.star(x), x);
}

template <StarRingBackend B>
typename B::Matrix mp_inverse(const StarRing<B>& ring, const typename B::Matrix& x) {
  return ring.mp(x);
}

}  // namespace projcalc
