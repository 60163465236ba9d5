#pragma once

#include <cstddef>

#include "projcalc/exact/matrix.hpp"
#include "projcalc/floating/matrix.hpp"
#include "projcalc/tolerance.hpp"

// Column-space arithmetic used as ground truth for every range claim. This
// layer only sees matrix arithmetic and rank-revealing decompositions; it
// links against neither MP-inverse implementation.
namespace projcalc::oracle {

// Outcome of a subspace predicate; near_cutoff marks a float decision whose
// answer depends on a singular value close to the rank cutoff.
struct Decision {
  bool holds = false;
  bool near_cutoff = false;

  explicit operator bool() const { return holds; }
};

template <class Matrix>
struct Subspace {
  std::size_t ambient_dim = 0;
  Matrix basis;  // ambient_dim x rank, columns independent
  bool near_cutoff = false;

  std::size_t rank() const { return static_cast<std::size_t>(basis.cols()); }
  bool is_trivial() const { return rank() == 0; }
  bool is_whole() const { return rank() == ambient_dim; }
};

// Exact oracle: bases are the pivot columns picked out by RREF.
class ExactOracle {
 public:
  using Matrix = exact::ExactMatrix;
  using Space = Subspace<Matrix>;

  ExactOracle() = default;
  explicit ExactOracle(const ToleranceConfig&) {}

  Space column_space(const Matrix& m) const;
  Space whole(std::size_t n) const;
  Space sum(const Space& u, const Space& v) const;
  Space intersection(const Space& u, const Space& v) const;
  // v is contained in u.
  Decision contains(const Space& u, const Space& v) const;
  Decision equal(const Space& u, const Space& v) const;
  Decision orthogonal(const Space& u, const Space& v) const;
  Decision is_direct_sum_whole(const Space& u, const Space& v) const;
  // B (B^* B)^{-1} B^*, independent of the chosen basis.
  Matrix projector(const Space& u) const;
};

// Floating oracle: orthonormal bases from the SVD, kernels from the full SVD.
class FloatOracle {
 public:
  using Matrix = floating::FloatMatrix;
  using Space = Subspace<Matrix>;

  FloatOracle() = default;
  explicit FloatOracle(const ToleranceConfig& tol) : tol_(tol) {}

  Space column_space(const Matrix& m) const;
  Space whole(std::size_t n) const;
  Space sum(const Space& u, const Space& v) const;
  Space intersection(const Space& u, const Space& v) const;
  Decision contains(const Space& u, const Space& v) const;
  Decision equal(const Space& u, const Space& v) const;
  Decision orthogonal(const Space& u, const Space& v) const;
  Decision is_direct_sum_whole(const Space& u, const Space& v) const;
  Matrix projector(const Space& u) const;

  const ToleranceConfig& tolerance() const { return tol_; }

 private:
  ToleranceConfig tol_;
};

}  // namespace projcalc::oracle
