#pragma once

#include "wba/algebra/element.hpp"
#include "wba/dense/operator.hpp"

namespace wba {

/// F_{[2,1]}([2]) for n = 4, k = 1, d = 2.
WbaElement mixed_projector_n4();

/// tr_12[F (A ⊗ B ⊗ 1 ⊗ 1)] for that projector, expanded term by term.
DenseOperator lambda_2to2(const Matrix& a, const Matrix& b);
/// tr_123[F (A ⊗ B ⊗ C ⊗ 1)] for that projector.
DenseOperator lambda_3to1(const Matrix& a, const Matrix& b, const Matrix& c);

/// Nine-term variants built from P_[2] truncated to its identity half. They
/// are not contractions of F; the CLI prints their deviation for comparison.
DenseOperator lambda_2to2_truncated(const Matrix& a, const Matrix& b);
DenseOperator lambda_3to1_truncated(const Matrix& a, const Matrix& b, const Matrix& c);
/// That truncated algebra element.
WbaElement mixed_projector_n4_truncated();

}  // namespace wba
