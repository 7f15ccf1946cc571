#pragma once

#include <complex>
#include <map>

#include "wba/sym/permutation.hpp"

namespace wba {

using Complex = std::complex<double>;

/// Formal linear combination of permutations of a common degree.
class GroupAlgebraElement {
 public:
  using Terms = std::map<Permutation, Complex>;

  explicit GroupAlgebraElement(int n) : n_(n) {}
  explicit GroupAlgebraElement(const Permutation& p, Complex coeff = 1.0);

  static GroupAlgebraElement identity(int n) { return GroupAlgebraElement(Permutation::identity(n)); }

  int degree() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Complex coefficient(const Permutation& p) const;

  void add_term(const Permutation& p, Complex coeff);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(Complex scale);

  /// Largest coefficient difference over the union of supports.
  double distance(const GroupAlgebraElement& other) const;

 private:
  void prune();
  int n_ = 0;
  Terms terms_;
};

GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b);
GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b);
GroupAlgebraElement operator*(Complex s, GroupAlgebraElement a);
/// Bilinear extension of compose.
GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

}  // namespace wba
