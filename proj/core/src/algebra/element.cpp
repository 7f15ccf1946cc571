#include "wba/algebra/element.hpp"

#include "wba/util/error.hpp"
#include "wba/util/tolerances.hpp"

namespace wba {

WbaElement::WbaElement(const WbaDiagram& diagram, DPolynomial coeff) : n_(diagram.n()) {
  add_term(diagram, coeff);
}

WbaElement WbaElement::lift(const GroupAlgebraElement& x, int n) {
  if (x.degree() > n) throw Error("cannot lift a degree-" + std::to_string(x.degree()) + " element to " +
                                  std::to_string(n) + " sites");
  WbaElement out(n);
  for (const auto& [p, c] : x.terms()) out.add_term(WbaDiagram::from_permutation(p.extended(n)), DPolynomial(c));
  return out;
}

void WbaElement::check_degree(int n) const {
  if (n != n_) throw Error("algebra elements on " + std::to_string(n_) + " and " + std::to_string(n) + " sites");
}

DPolynomial WbaElement::coefficient(const WbaDiagram& diagram) const {
  const auto it = terms_.find(diagram);
  return it == terms_.end() ? DPolynomial{} : it->second;
}

void WbaElement::add_term(const WbaDiagram& diagram, const DPolynomial& coeff) {
  check_degree(diagram.n());
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(diagram, coeff);
  if (!inserted) it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

WbaElement& WbaElement::operator+=(const WbaElement& other) {
  check_degree(other.n_);
  for (const auto& [g, c] : other.terms_) add_term(g, c);
  return *this;
}

WbaElement& WbaElement::operator-=(const WbaElement& other) {
  check_degree(other.n_);
  for (const auto& [g, c] : other.terms_) add_term(g, DPolynomial{} - c);
  return *this;
}

WbaElement& WbaElement::operator*=(const DPolynomial& s) {
  Terms out;
  for (auto& [g, c] : terms_) {
    DPolynomial p = c * s;
    if (!p.is_zero()) out.emplace(g, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

WbaElement WbaElement::evaluated(int d) const {
  WbaElement out(n_);
  for (const auto& [g, c] : terms_) out.add_term(g, DPolynomial(c.evaluate(d)));
  return out;
}

double WbaElement::distance(const WbaElement& other) const {
  check_degree(other.n_);
  double worst = 0.0;
  for (const auto& [g, c] : terms_) worst = std::max(worst, c.distance(other.coefficient(g)));
  for (const auto& [g, c] : other.terms_) worst = std::max(worst, c.distance(coefficient(g)));
  return worst;
}

std::string WbaElement::to_string() const {
  if (terms_.empty()) return "0\n";
  std::string out;
  for (const auto& [g, c] : terms_) out += c.to_string() + " * " + g.to_string() + "\n";
  return out;
}

WbaElement operator+(WbaElement a, const WbaElement& b) { return a += b; }
WbaElement operator-(WbaElement a, const WbaElement& b) { return a -= b; }
WbaElement operator*(const DPolynomial& s, WbaElement a) { return a *= s; }

WbaElement multiply(const WbaElement& x, const WbaElement& y) {
  if (x.n() != y.n()) throw Error("multiply: site counts differ");
  WbaElement out(x.n());
  for (const auto& [gx, cx] : x.terms()) {
    for (const auto& [gy, cy] : y.terms()) {
      const auto product = compose_diagrams(gx, gy);
      out.add_term(product.diagram, cx * cy * DPolynomial::monomial(product.loops));
    }
  }
  return out;
}

DenseOperator realize(const WbaElement& x, int d, std::size_t size_guard) {
  const std::size_t dim = checked_dimension(d, x.n());
  if (dim > size_guard) {
    throw SizeGuardError("d^n = " + std::to_string(dim) + " exceeds the size guard " + std::to_string(size_guard));
  }
  DenseOperator out(x.n(), d);
  for (const auto& [g, c] : x.terms()) out += c.evaluate(d) * realize(g, d, size_guard);
  return out;
}

DenseOperator realize(const WbaElement& x, int d) { return realize(x, d, default_size_guard()); }

}  // namespace wba
