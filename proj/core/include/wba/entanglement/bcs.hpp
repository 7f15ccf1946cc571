#pragma once

#include "wba/algebra/element.hpp"
#include "wba/dense/operator.hpp"

namespace wba {

/// (12)^{T_2} + (13) + alpha id + beta (23)^{T_2} on three sites.
WbaElement bcs_element(double alpha, double beta);
DenseOperator bcs_kernel(double alpha, double beta, int d);

/// Smallest alpha for which the map is positive at this beta (d >= 3):
/// 0 for beta >= 0, otherwise (-(2 + d beta) + sqrt(d^2 beta^2 - 4(d-2) beta + 4)) / 2.
double bcs_threshold(double beta, int d);

/// True iff (beta >= 0 and alpha >= 0) or (beta <= 0 and alpha >= threshold).
bool bcs_positivity_condition(double alpha, double beta, int d);

}  // namespace wba
