#include "projcalc/exact/kernels.hpp"

#include "projcalc/errors.hpp"

namespace projcalc::exact::kernels {

namespace {

GaussianRational dot_entry(const ExactMatrix& a, const ExactMatrix& b, std::size_t i, std::size_t j) {
  GaussianRational acc;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const auto& x = a(i, k);
    const auto& y = b(k, j);
    if (x.is_zero() || y.is_zero()) continue;
    acc += x * y;
  }
  return acc;
}

void check_shapes(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product inner dimension mismatch");
}

}  // namespace

ExactMatrix multiply_serial(const ExactMatrix& a, const ExactMatrix& b) {
  check_shapes(a, b);
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = dot_entry(a, b, i, j);
  }
  return out;
}

ExactMatrix multiply_parallel(const ExactMatrix& a, const ExactMatrix& b) {
  check_shapes(a, b);
  ExactMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<long long>(a.rows());
  const auto cols = static_cast<long long>(b.cols());
#pragma omp parallel for collapse(2) schedule(static)
  for (long long i = 0; i < rows; ++i) {
    for (long long j = 0; j < cols; ++j) {
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          dot_entry(a, b, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  return out;
}

}  // namespace projcalc::exact::kernels
