#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

namespace wba {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Integer power d^n with an overflow check.
std::size_t checked_dimension(int d, int n);

/// Linear operator on (C^d)^{⊗n}. Row/column index i encodes the site tuple
/// (i_1..i_n) big-endian: i = sum_t i_t d^(n-t). n = 0 is the scalar case.
class DenseOperator {
 public:
  DenseOperator() = default;
  /// Zero operator.
  DenseOperator(int n, int d);
  DenseOperator(int n, int d, Matrix entries);

  static DenseOperator identity(int n, int d);
  /// Single-site operator wrapping a d x d matrix.
  static DenseOperator single_site(Matrix entries);

  int n() const { return n_; }
  int d() const { return d_; }
  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index row, Eigen::Index col) const { return m_(row, col); }

  Complex trace() const { return m_.trace(); }
  DenseOperator adjoint() const { return {n_, d_, m_.adjoint()}; }
  /// Full transpose (every site).
  DenseOperator transpose() const { return {n_, d_, m_.transpose()}; }
  bool is_hermitian(double tol) const;

  DenseOperator& operator+=(const DenseOperator& other);
  DenseOperator& operator-=(const DenseOperator& other);
  DenseOperator& operator*=(Complex s);

 private:
  void check_shape(const DenseOperator& other) const;
  int n_ = 0;
  int d_ = 1;
  Matrix m_ = Matrix::Identity(1, 1);
};

DenseOperator operator+(DenseOperator a, const DenseOperator& b);
DenseOperator operator-(DenseOperator a, const DenseOperator& b);
DenseOperator operator*(Complex s, DenseOperator a);
DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);

/// Largest entrywise modulus of a - b.
double sup_distance(const DenseOperator& a, const DenseOperator& b);
double sup_norm(const DenseOperator& a);
double sup_norm(const Matrix& a);

/// Site digits of a packed index, site 1 first.
std::vector<int> unpack_index(std::size_t index, int n, int d);
std::size_t pack_index(const std::vector<int>& digits, int d);

}  // namespace wba
