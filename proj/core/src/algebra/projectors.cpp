#include "wba/algebra/projectors.hpp"

#include "wba/sym/representation.hpp"
#include "wba/util/error.hpp"

namespace wba {
namespace {

void check_labels(const Partition& mu, const Partition& alpha, int n, int k) {
  if (k < 1 || n < 2 * k) {
    throw Error("projector needs k >= 1 and n >= 2k, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  if (alpha.n() != n - 2 * k) {
    throw Error("alpha " + alpha.to_string() + " must partition n-2k = " + std::to_string(n - 2 * k));
  }
  if (mu.n() != n - k) throw Error("mu " + mu.to_string() + " must partition n-k = " + std::to_string(n - k));
  if (!alpha.contained_in(mu)) {
    throw Error("mu " + mu.to_string() + " is not obtained from alpha " + alpha.to_string() + " by adding boxes");
  }
}

void check_represented(const Partition& mu, const Partition& alpha, int d, long long m_mu, long long m_alpha) {
  if (m_alpha == 0) throw NotRepresentedError("irrep not represented at this d: alpha " + alpha.to_string() +
                                              " has multiplicity 0 at d=" + std::to_string(d));
  if (m_mu == 0) throw NotRepresentedError("irrep not represented at this d: mu " + mu.to_string() +
                                           " has multiplicity 0 at d=" + std::to_string(d));
}

}  // namespace

WbaDiagram sigma_k(int n, int k) {
  if (k < 1 || n < 2 * k) {
    throw Error("sigma_k needs n >= 2k >= 2, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  std::vector<std::vector<int>> cycles;
  std::vector<int> transposed;
  for (int j = 1; j <= k; ++j) {
    cycles.push_back({n - 2 * k + j, n + 1 - j});
    transposed.push_back(n + 1 - j);
  }
  return WbaDiagram::from_permutation(Permutation::from_cycles(n, cycles), SiteSubset(transposed));
}

double gamma(const Partition& mu, const Partition& alpha, int n, int k, int d) {
  check_labels(mu, alpha, n, k);
  const long long m_mu = schur_weyl_multiplicity(mu, d);
  const long long m_alpha = schur_weyl_multiplicity(alpha, d);
  check_represented(mu, alpha, d, m_mu, m_alpha);
  return static_cast<double>(factorial(k)) * static_cast<double>(binomial(n - k, k)) *
         (static_cast<double>(m_mu) / static_cast<double>(m_alpha)) *
         (static_cast<double>(irrep_dimension(alpha)) / static_cast<double>(irrep_dimension(mu)));
}

double gamma_k1(const Partition& mu, const Partition& alpha, int n, int d) {
  check_labels(mu, alpha, n, 1);
  const long long m_mu = schur_weyl_multiplicity(mu, d);
  const long long m_alpha = schur_weyl_multiplicity(alpha, d);
  check_represented(mu, alpha, d, m_mu, m_alpha);
  return static_cast<double>(n - 1) * static_cast<double>(m_mu) * static_cast<double>(irrep_dimension(alpha)) /
         (static_cast<double>(m_alpha) * static_cast<double>(irrep_dimension(mu)));
}

WbaElement f_projector(const Partition& mu, const Partition& alpha, int n, int k, int d) {
  return f_projector(mu, alpha, n, k, d, coset_representatives(n, k));
}

WbaElement f_projector(const Partition& mu, const Partition& alpha, int n, int k, int d,
                       const std::vector<Permutation>& representatives) {
  const double g = gamma(mu, alpha, n, k, d);
  const WbaElement p_alpha = WbaElement::lift(young_projector(alpha), n);
  const WbaElement core = multiply(p_alpha, WbaElement(sigma_k(n, k)));
  WbaElement sum(n);
  for (const auto& eta : representatives) {
    if (eta.degree() != n - k) throw Error("coset representative has the wrong degree");
    const WbaElement left(WbaDiagram::from_permutation(eta.inverse().extended(n)));
    const WbaElement right(WbaDiagram::from_permutation(eta.extended(n)));
    sum += multiply(multiply(left, core), right);
  }
  WbaElement out = multiply(WbaElement::lift(young_projector(mu), n), sum);
  out *= DPolynomial(1.0 / g);
  return out;
}

std::vector<ProjectorLabel> admissible_projectors(int n, int k, int d) {
  if (k < 1 || n < 2 * k) throw Error("admissible_projectors needs n >= 2k >= 2");
  std::vector<ProjectorLabel> out;
  for (const auto& alpha : partitions_of(n - 2 * k)) {
    if (schur_weyl_multiplicity(alpha, d) == 0) continue;
    for (const auto& mu : add_boxes(alpha, k)) {
      if (schur_weyl_multiplicity(mu, d) == 0) continue;
      out.push_back({alpha, mu});
    }
  }
  return out;
}

}  // namespace wba
