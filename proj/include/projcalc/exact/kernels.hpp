#pragma once

#include "projcalc/exact/matrix.hpp"

namespace projcalc::exact::kernels {

// Reference product, single-threaded.
ExactMatrix multiply_serial(const ExactMatrix& a, const ExactMatrix& b);

// OpenMP product over output entries. Each entry is reduced in the same
// order as the serial kernel, so results are identical.
ExactMatrix multiply_parallel(const ExactMatrix& a, const ExactMatrix& b);

// Output entries * inner length above which operator* goes parallel.
inline constexpr std::size_t kParallelWorkThreshold = 4096;

}  // namespace projcalc::exact::kernels
