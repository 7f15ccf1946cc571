#pragma once

#include <cstddef>

namespace wba::tol {

/// Sup-norm tolerance for dense identity checks.
inline constexpr double kDense = 1e-10;
/// Eigenvalue tolerance (PSD decisions, hermiticity for eigensolves).
inline constexpr double kEigen = 1e-9;
/// Coefficients below this magnitude are pruned from formal sums.
inline constexpr double kPrune = 1e-13;
/// Default dense guard: largest allowed d^n.
inline constexpr std::size_t kDefaultSizeGuard = 4096;

}  // namespace wba::tol

namespace wba {

/// Dense guard in effect: WBA_SIZE_GUARD from the environment when set to a
/// positive integer, otherwise tol::kDefaultSizeGuard.
std::size_t default_size_guard();

}  // namespace wba
