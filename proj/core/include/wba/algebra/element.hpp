#pragma once

#include <map>
#include <string>

#include "wba/algebra/diagram.hpp"
#include "wba/algebra/dpolynomial.hpp"
#include "wba/sym/group_algebra.hpp"

namespace wba {

/// Formal combination of n-site diagrams with coefficients polynomial in d.
class WbaElement {
 public:
  using Terms = std::map<WbaDiagram, DPolynomial>;

  explicit WbaElement(int n) : n_(n) {}
  explicit WbaElement(const WbaDiagram& diagram, DPolynomial coeff = Complex(1.0));

  static WbaElement identity(int n) { return WbaElement(WbaDiagram::identity(n)); }
  /// Group-algebra element on the first x.degree() of n sites.
  static WbaElement lift(const GroupAlgebraElement& x, int n);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  DPolynomial coefficient(const WbaDiagram& diagram) const;

  void add_term(const WbaDiagram& diagram, const DPolynomial& coeff);

  WbaElement& operator+=(const WbaElement& other);
  WbaElement& operator-=(const WbaElement& other);
  WbaElement& operator*=(const DPolynomial& s);

  /// Coefficients evaluated at d; the result has only constant coefficients.
  WbaElement evaluated(int d) const;
  /// Largest coefficient difference over the union of supports.
  double distance(const WbaElement& other) const;

  /// One "coeff * diagram" term per line.
  std::string to_string() const;

 private:
  void check_degree(int n) const;
  int n_ = 0;
  Terms terms_;
};

WbaElement operator+(WbaElement a, const WbaElement& b);
WbaElement operator-(WbaElement a, const WbaElement& b);
WbaElement operator*(const DPolynomial& s, WbaElement a);
/// Bilinear extension of compose_diagrams; each loop multiplies by d.
WbaElement multiply(const WbaElement& x, const WbaElement& y);
inline WbaElement operator*(const WbaElement& x, const WbaElement& y) { return multiply(x, y); }

DenseOperator realize(const WbaElement& x, int d, std::size_t size_guard);
DenseOperator realize(const WbaElement& x, int d);

}  // namespace wba
