#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

#include "projcalc/tolerance.hpp"

namespace projcalc::floating {

using Complex = std::complex<double>;
using FloatMatrix = Eigen::MatrixXcd;

bool all_finite(const FloatMatrix& m);

// ||a - b||_F <= abs_tol + rel_tol * max(||a||_F, ||b||_F).
bool approx_equal(const FloatMatrix& a, const FloatMatrix& b, const ToleranceConfig& tol);

double distance(const FloatMatrix& a, const FloatMatrix& b);

struct RankDecision {
  std::size_t rank = 0;
  double cutoff = 0.0;
  bool near_cutoff = false;
};

// Applies the ToleranceConfig rank rule to a descending singular spectrum.
RankDecision decide_rank(const Eigen::VectorXd& singular_values, std::size_t rows, std::size_t cols,
                         const ToleranceConfig& tol);

Eigen::VectorXd singular_values(const FloatMatrix& m);

RankDecision numerical_rank(const FloatMatrix& m, const ToleranceConfig& tol);

}  // namespace projcalc::floating
