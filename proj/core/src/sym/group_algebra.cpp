#include "wba/sym/group_algebra.hpp"

#include <cmath>

#include "wba/util/error.hpp"
#include "wba/util/tolerances.hpp"

namespace wba {

GroupAlgebraElement::GroupAlgebraElement(const Permutation& p, Complex coeff) : n_(p.degree()) {
  add_term(p, coeff);
}

Complex GroupAlgebraElement::coefficient(const Permutation& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Complex{} : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, Complex coeff) {
  if (p.degree() != n_) throw Error("group algebra term has the wrong degree");
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) < tol::kPrune) terms_.erase(it);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (other.n_ != n_) throw Error("group algebra degree mismatch");
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  if (other.n_ != n_) throw Error("group algebra degree mismatch");
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(Complex scale) {
  for (auto& [p, c] : terms_) c *= scale;
  prune();
  return *this;
}

double GroupAlgebraElement::distance(const GroupAlgebraElement& other) const {
  double worst = 0.0;
  for (const auto& [p, c] : terms_) worst = std::max(worst, std::abs(c - other.coefficient(p)));
  for (const auto& [p, c] : other.terms_) worst = std::max(worst, std::abs(c - coefficient(p)));
  return worst;
}

void GroupAlgebraElement::prune() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < tol::kPrune; });
}

GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
GroupAlgebraElement operator*(Complex s, GroupAlgebraElement a) { return a *= s; }

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree() != b.degree()) throw Error("group algebra degree mismatch");
  GroupAlgebraElement out(a.degree());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) out.add_term(compose(p, q), cp * cq);
  return out;
}

}  // namespace wba
