#include "wba/dense/random.hpp"

#include <cmath>

namespace wba {

Matrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix g(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  return g;
}

Vector random_unit_vector(Eigen::Index dim, Rng& rng) {
  Vector v = random_gaussian_matrix(dim, 1, rng).col(0);
  return v / v.norm();
}

DenseOperator random_psd(int d, int n, Rng& rng) {
  const auto dim = static_cast<Eigen::Index>(checked_dimension(d, n));
  const Matrix g = random_gaussian_matrix(dim, dim, rng);
  Matrix p = g * g.adjoint();
  p = 0.5 * (p + p.adjoint()).eval();
  return {n, d, std::move(p)};
}

DenseOperator random_psd(int d, int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_psd(d, n, rng);
}

DenseOperator random_matrix(int d, int n, Rng& rng) {
  const auto dim = static_cast<Eigen::Index>(checked_dimension(d, n));
  return {n, d, random_gaussian_matrix(dim, dim, rng)};
}

Matrix random_unitary(int d, Rng& rng) {
  const Matrix g = random_gaussian_matrix(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < d; ++i) {
    const Complex diag = r(i, i);
    const double mag = std::abs(diag);
    if (mag > 0) q.col(i) *= diag / mag;
  }
  return q;
}

}  // namespace wba
