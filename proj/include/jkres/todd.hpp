#pragma once

#include "jkres/rational.hpp"

namespace jkres {

// Coefficients b_0..b_max of the series t/(1 - e^{-t}) = sum b_k t^k.
// b_0 = 1, b_1 = 1/2, b_2 = 1/12, b_3 = 0, b_4 = -1/720, ...
//
// If the environment variable JKRES_FAULT_TODD is set (to anything), b_2 is
// deliberately corrupted.  This exists purely so the selftest can demonstrate
// that a wrong coefficient table is caught by the counting criteria.
RatVec todd_coefficients(int max_degree);

} // namespace jkres
