#include "projcalc/exact/mp.hpp"

#include <stdexcept>

namespace projcalc::exact {

ExactMatrix mp_exact(const ExactMatrix& m) {
  const RankFactors f = rank_factorize(m);
  const std::size_t r = f.left.cols();
  if (r == 0) return ExactMatrix::zero(m.cols(), m.rows());
  const ExactMatrix left_adj = f.left.adjoint();
  const ExactMatrix right_adj = f.right.adjoint();
  // Both Gram matrices are r x r of full rank by construction.
  const auto gram_left_inv = inverse(left_adj * f.left);
  const auto gram_right_inv = inverse(f.right * right_adj);
  if (!gram_left_inv || !gram_right_inv) {
    throw std::logic_error("mp_exact: singular Gram matrix of a full-rank factor");
  }
  return right_adj * (*gram_right_inv) * (*gram_left_inv) * left_adj;
}

}  // namespace projcalc::exact
