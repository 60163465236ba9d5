#pragma once

#include <optional>

#include "projcalc/floating/matrix.hpp"

namespace projcalc::floating {

struct MpFloatResult {
  FloatMatrix value;
  std::size_t rank = 0;
  // Set when the numerical rank is sensitive to the cutoff.
  bool near_cutoff = false;
};

// SVD pseudoinverse with thresholded reciprocals. Throws BackendFailure on
// non-finite input or when the decomposition does not succeed.
MpFloatResult mp_float(const FloatMatrix& m, const ToleranceConfig& tol = {});

// Inverse when the smallest singular value clears the rank cutoff.
std::optional<FloatMatrix> inverse_float(const FloatMatrix& m, const ToleranceConfig& tol = {});

// Spectral rounding of (m + m^*)/2 with eigenvalues snapped to {0, 1}. Refuses
// (NotAProjection) when an eigenvalue is within 0.1 of 1/2 or when m is far
// from self-adjoint.
FloatMatrix project_to_nearest_projection(const FloatMatrix& m);

}  // namespace projcalc::floating
