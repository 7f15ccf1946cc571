#pragma once

#include <vector>

#include "wba/algebra/element.hpp"
#include "wba/sym/partition.hpp"

namespace wba {

/// (n-2k+1, n)^{T_n} (n-2k+2, n-1)^{T_{n-1}} ... (n-k, n-k+1)^{T_{n-k+1}}.
WbaDiagram sigma_k(int n, int k);

/// Normalization k! C(n-k, k) (m_mu / m_alpha) (d_alpha / d_mu). Throws
/// NotRepresentedError when m_mu or m_alpha vanishes at d.
double gamma(const Partition& mu, const Partition& alpha, int n, int k, int d);
/// The k = 1 specialization (n-1) m_mu d_alpha / (m_alpha d_mu).
double gamma_k1(const Partition& mu, const Partition& alpha, int n, int d);

/// F_mu(alpha) = (1/gamma) P_mu sum_eta eta^-1 (P_alpha ⊗ sigma_k) eta, P_mu on
/// sites 1..n-k, P_alpha on 1..n-2k, eta over coset_representatives(n, k).
WbaElement f_projector(const Partition& mu, const Partition& alpha, int n, int k, int d);
/// Same sum with explicitly supplied coset representatives (degree n-k).
WbaElement f_projector(const Partition& mu, const Partition& alpha, int n, int k, int d,
                       const std::vector<Permutation>& representatives);

struct ProjectorLabel {
  Partition alpha;  // ⊢ n-2k
  Partition mu;     // ⊢ n-k, contains alpha
};

/// Every (alpha, mu) pair whose F_mu(alpha) is defined at d (both labels
/// represented), alpha outer loop in partitions_of order.
std::vector<ProjectorLabel> admissible_projectors(int n, int k, int d);

}  // namespace wba
