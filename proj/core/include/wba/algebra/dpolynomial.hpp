#pragma once

#include <complex>
#include <map>
#include <string>

namespace wba {

using Complex = std::complex<double>;

/// Polynomial in the formal local dimension d with complex coefficients.
class DPolynomial {
 public:
  using Terms = std::map<int, Complex>;

  DPolynomial() = default;
  DPolynomial(Complex constant);  // NOLINT: implicit scalars are convenient
  static DPolynomial monomial(int power, Complex coeff = 1.0);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  Complex coefficient(int power) const;
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  Complex evaluate(double d) const;

  DPolynomial& operator+=(const DPolynomial& other);
  DPolynomial& operator-=(const DPolynomial& other);
  DPolynomial& operator*=(const DPolynomial& other);

  /// Largest coefficient difference.
  double distance(const DPolynomial& other) const;

  /// e.g. "2 + (0.5-1i)d^2"; zero prints as "0".
  std::string to_string() const;

  bool operator==(const DPolynomial&) const = default;

 private:
  void add(int power, Complex c);
  Terms terms_;
};

DPolynomial operator+(DPolynomial a, const DPolynomial& b);
DPolynomial operator-(DPolynomial a, const DPolynomial& b);
DPolynomial operator*(DPolynomial a, const DPolynomial& b);

}  // namespace wba
