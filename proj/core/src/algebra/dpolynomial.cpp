#include "wba/algebra/dpolynomial.hpp"

#include <cmath>
#include <sstream>

#include "wba/util/tolerances.hpp"

namespace wba {
namespace {

std::string format_complex(Complex c) {
  std::ostringstream os;
  os.precision(12);
  if (c.imag() == 0.0) {
    os << c.real();
  } else if (c.real() == 0.0) {
    os << c.imag() << "i";
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  }
  return os.str();
}

}  // namespace

DPolynomial::DPolynomial(Complex constant) { add(0, constant); }

DPolynomial DPolynomial::monomial(int power, Complex coeff) {
  DPolynomial p;
  p.add(power, coeff);
  return p;
}

void DPolynomial::add(int power, Complex c) {
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < tol::kPrune) terms_.erase(it);
}

Complex DPolynomial::coefficient(int power) const {
  const auto it = terms_.find(power);
  return it == terms_.end() ? Complex{} : it->second;
}

Complex DPolynomial::evaluate(double d) const {
  Complex acc{};
  for (const auto& [power, c] : terms_) acc += c * std::pow(d, power);
  return acc;
}

DPolynomial& DPolynomial::operator+=(const DPolynomial& other) {
  for (const auto& [power, c] : other.terms_) add(power, c);
  return *this;
}

DPolynomial& DPolynomial::operator-=(const DPolynomial& other) {
  for (const auto& [power, c] : other.terms_) add(power, -c);
  return *this;
}

DPolynomial& DPolynomial::operator*=(const DPolynomial& other) {
  DPolynomial out;
  for (const auto& [pa, ca] : terms_)
    for (const auto& [pb, cb] : other.terms_) out.add(pa + pb, ca * cb);
  *this = std::move(out);
  return *this;
}

double DPolynomial::distance(const DPolynomial& other) const {
  double worst = 0.0;
  for (const auto& [p, c] : terms_) worst = std::max(worst, std::abs(c - other.coefficient(p)));
  for (const auto& [p, c] : other.terms_) worst = std::max(worst, std::abs(c - coefficient(p)));
  return worst;
}

std::string DPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [power, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += format_complex(c);
    if (power == 1) out += "d";
    else if (power > 1) out += "d^" + std::to_string(power);
  }
  return out;
}

DPolynomial operator+(DPolynomial a, const DPolynomial& b) { return a += b; }
DPolynomial operator-(DPolynomial a, const DPolynomial& b) { return a -= b; }
DPolynomial operator*(DPolynomial a, const DPolynomial& b) { return a *= b; }

}  // namespace wba
