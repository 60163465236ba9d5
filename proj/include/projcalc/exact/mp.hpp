#pragma once

#include "projcalc/exact/matrix.hpp"

namespace projcalc::exact {

// Moore-Penrose inverse via the full-rank factorization m = F G:
//   m^+ = G^* (G G^*)^{-1} (F^* F)^{-1} F^*.
ExactMatrix mp_exact(const ExactMatrix& m);

}  // namespace projcalc::exact
