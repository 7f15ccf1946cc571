#pragma once

#include <span>
#include <vector>

#include "wba/dense/operator.hpp"
#include "wba/dense/site_subset.hpp"
#include "wba/sym/permutation.hpp"

namespace wba {

/// (1 2 .. k) is forward, (k .. 2 1) backward.
enum class CycleDirection { kForward, kBackward };

Permutation cycle_permutation(CycleDirection direction, int k);

/// Closed form of the single-transpose cycle contractions, X_1..X_k given:
///   backward, traced over 1..k-1: X_1..X_j^T..X_k (j != k), (X_1..X_{k-1})^T X_k (j = k);
///   forward, traced over 2..k:   X_k..X_j^T..X_1 (j != 1), (X_k..X_2)^T X_1 (j = 1).
DenseOperator evaluate_cycle_to_one(CycleDirection direction, int j, std::span<const DenseOperator> x);

enum class ThetaKind { kPlain, kBar };

/// Product of the labelled factors in the given order. Plain transposes the
/// factors whose label is in S, bar those whose label is not in S.
DenseOperator theta_product(ThetaKind kind, const SiteSubset& s, std::span<const int> labels,
                            std::span<const DenseOperator> factors);

/// tr_{1..k-1}[(k..1)^{T_S} X_1 ⊗ .. ⊗ X_k]: theta_S(X_1..X_k) for k not in S,
/// bar-theta_S(X_{k-1}..X_1, X_k) for k in S.
DenseOperator evaluate_cycle_subset(const SiteSubset& s, std::span<const DenseOperator> x);

/// tr_1[(1..k)^{T_k} A ⊗ 1^{⊗ k-1}] as a chain of site reshufflings of
/// A ⊗ 1^{⊗ k-2}: R_{k-1,k-2}, then R_{k-1,k-3}, ..., R_{k-1,1}. For k = 2 the
/// chain is the single transpose R_{1,1}.
DenseOperator evaluate_one_to_many(const DenseOperator& a, int k);

/// The same map as tau^-1 pi tau (A ⊗ 1^{⊗ k-2}) with the cycle
/// pi = (2k'-1, 2k'-2, .., k'), k' = k-1; for k = 2, pi = (1 2).
DenseOperator evaluate_one_to_many_via_pi(const DenseOperator& a, int k);
Permutation one_to_many_permutation(int k);

}  // namespace wba
