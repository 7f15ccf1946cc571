#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace wba {

/// Element of S_n. Sites are 1-based in the public interface, matching cycle
/// notation: (1 3 4) sends 1 -> 3, 3 -> 4, 4 -> 1.
///
/// On (C^d)^{⊗n} a permutation moves the vector in slot t to slot p(t), so
/// the composite p*q ("q first") realizes to realize(p) * realize(q).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);
  /// One-line notation: images[t-1] = p(t), values in 1..n.
  static Permutation from_one_line(const std::vector<int>& images);
  /// Cycles in 1-based labels on n points. Unlisted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  /// p(site), 1-based.
  int operator()(int site) const;
  /// 0-based image, for index arithmetic.
  int image0(int slot) const { return images_[static_cast<std::size_t>(slot)]; }
  const std::vector<int>& images0() const { return images_; }
  std::vector<int> one_line() const;

  Permutation inverse() const;
  bool is_identity() const;
  /// Cycle lengths sorted in decreasing order (including fixed points).
  std::vector<int> cycle_type() const;
  /// Disjoint cycles of length >= 2, each starting at its smallest element.
  std::vector<std::vector<int>> cycles() const;
  int sign() const;
  /// Same permutation on n >= degree() points, fixing the new ones.
  Permutation extended(int n) const;

  /// Cycle notation such as "(1 2 3)(4 5)"; the identity prints as "id".
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);
  explicit Permutation(std::vector<int> images0) : images_(std::move(images0)) {}
  std::vector<int> images_;
};

/// p∘q: apply q first, then p.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// All n! elements in lexicographic order of one-line notation; 1 <= n <= 7.
std::vector<Permutation> enumerate_group(int n);

/// Parses cycle notation. Accepts "(1 2 3)(4 5)", "(1,2)", compact digit
/// cycles "(123)" and "id"/"()". With n = 0 the degree is the largest label.
Permutation parse_permutation(std::string_view text, int n = 0);

}  // namespace wba
