#include "wba/sym/representation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <span>

#include "wba/util/error.hpp"

namespace wba {
namespace {

__extension__ typedef __int128 Wide;

// Beta-set (first-column hook lengths) of a partition padded to `len` rows.
std::vector<int> beta_set(const std::vector<int>& parts, int len) {
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const int part = i < static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(i)] : 0;
    beta[static_cast<std::size_t>(i)] = part + len - 1 - i;
  }
  return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

// Removing a rim hook of length r <=> lowering one bead by r on the abacus;
// the sign is (-1)^(number of beads jumped over) = (-1)^(leg length).
long long murnaghan_nakayama(const std::vector<int>& parts, std::span<const int> cycles) {
  if (cycles.empty()) return parts.empty() ? 1 : 0;
  const int r = cycles.front();
  const auto rest = cycles.subspan(1);
  const int len = static_cast<int>(parts.size());
  const std::vector<int> beta = beta_set(parts, len);
  const std::set<int> beads(beta.begin(), beta.end());
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0 || beads.contains(target)) continue;
    int jumped = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++jumped;
    std::vector<int> next = beta;
    next[i] = target;
    const long long sub = murnaghan_nakayama(from_beta_set(std::move(next)), rest);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

long long factorial(int n) {
  if (n < 0 || n > 20) throw Error("factorial argument out of range");
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

long long character(const Partition& alpha, const Partition& cycle_type) {
  if (alpha.n() != cycle_type.n()) {
    throw Error("character: partition " + alpha.to_string() + " and class " + cycle_type.to_string() +
                " have different degrees");
  }
  return murnaghan_nakayama(alpha.parts(), cycle_type.parts());
}

long long character(const Partition& alpha, const Permutation& element) {
  if (alpha.n() != element.degree()) {
    throw Error("character: partition of " + std::to_string(alpha.n()) + " evaluated on S_" +
                std::to_string(element.degree()));
  }
  return character(alpha, Partition(element.cycle_type()));
}

long long irrep_dimension(const Partition& alpha) {
  long long hooks = 1;
  for (int r = 0; r < alpha.height(); ++r)
    for (int c = 0; c < alpha[r]; ++c) hooks *= alpha.hook(r, c);
  return factorial(alpha.n()) / hooks;
}

long long schur_weyl_multiplicity(const Partition& alpha, int d) {
  if (d < 1) throw Error("local dimension must be at least 1");
  if (alpha.height() > d) return 0;
  if (d > 10000 || alpha.n() > 8) throw Error("schur_weyl_multiplicity supports d <= 10000 and n <= 8");
  Wide num = 1;
  Wide den = 1;
  for (int r = 0; r < alpha.height(); ++r) {
    for (int c = 0; c < alpha[r]; ++c) {
      num *= d + c - r;
      den *= alpha.hook(r, c);
    }
  }
  if (num % den != 0) throw Error("internal: non-integral GL_d dimension");
  return static_cast<long long>(num / den);
}

GroupAlgebraElement young_projector(const Partition& alpha) {
  const int n = alpha.n();
  if (n == 0) return GroupAlgebraElement::identity(0);
  GroupAlgebraElement out(n);
  const double scale = static_cast<double>(irrep_dimension(alpha)) / static_cast<double>(factorial(n));
  std::map<std::vector<int>, long long> by_class;
  for (const auto& pi : enumerate_group(n)) {
    const auto type = pi.cycle_type();
    auto it = by_class.find(type);
    if (it == by_class.end()) it = by_class.emplace(type, character(alpha, Partition(type))).first;
    // chi(pi^-1) = chi(pi): inverses share a cycle type.
    if (it->second != 0) out.add_term(pi, scale * static_cast<double>(it->second));
  }
  return out;
}

std::vector<Permutation> coset_representatives(int n, int k) {
  if (k < 1 || n - 2 * k < 0) {
    throw Error("coset_representatives needs k >= 1 and n >= 2k, got n=" + std::to_string(n) +
                ", k=" + std::to_string(k));
  }
  const int m = n - k;
  const int fixed = n - 2 * k;
  std::vector<int> one(static_cast<std::size_t>(m));
  std::iota(one.begin(), one.end(), 1);
  std::set<std::vector<int>> seen;
  std::vector<Permutation> reps;
  do {
    // h*eta relabels the values 1..fixed, so masking them identifies the coset.
    std::vector<int> key = one;
    for (int& v : key)
      if (v <= fixed) v = 0;
    if (seen.insert(key).second) reps.push_back(Permutation::from_one_line(one));
  } while (std::next_permutation(one.begin(), one.end()));
  return reps;
}

}  // namespace wba
