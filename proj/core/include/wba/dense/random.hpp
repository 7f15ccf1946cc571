#pragma once

#include <cstdint>
#include <random>

#include "wba/dense/operator.hpp"

namespace wba {

using Rng = std::mt19937_64;

/// Matrix with i.i.d. standard complex Gaussian entries (E|z|^2 = 1).
Matrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);
/// Unit vector, normalized complex Gaussian.
Vector random_unit_vector(Eigen::Index dim, Rng& rng);

/// G G^dagger for a d^n x d^n complex Gaussian G.
DenseOperator random_psd(int d, int n, Rng& rng);
DenseOperator random_psd(int d, int n, std::uint64_t seed);
/// Single-site complex Gaussian matrix (not hermitian).
DenseOperator random_matrix(int d, int n, Rng& rng);

/// Haar-random d x d unitary (QR of a Ginibre matrix with the phases of
/// R's diagonal divided out).
Matrix random_unitary(int d, Rng& rng);

}  // namespace wba
