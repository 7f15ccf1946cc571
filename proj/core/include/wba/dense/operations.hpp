#pragma once

#include <span>
#include <vector>

#include "wba/dense/operator.hpp"
#include "wba/dense/site_subset.hpp"
#include "wba/sym/permutation.hpp"

namespace wba {

/// Tensor product in the listed order; site 1 comes from the first factor.
DenseOperator kron(std::span<const DenseOperator> factors);
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

/// Traces out the listed sites; the kept sites keep their relative order.
/// Tracing every site is rejected (use DenseOperator::trace).
DenseOperator partial_trace(const DenseOperator& m, const SiteSubset& over);

/// Swaps bra and ket indices on the listed sites.
DenseOperator partial_transpose(const DenseOperator& m, const SiteSubset& over);

/// Two-site realignment |i><j| ⊗ |k><l| -> |i><k| ⊗ |j><l|.
DenseOperator reshuffle_bipartite(const DenseOperator& m);

/// R_{k,l}: the ket index of site k trades places with the bra index of
/// site l. R_{k,k} is the transpose on site k.
DenseOperator reshuffle_sites(const DenseOperator& m, int ket_site, int bra_site);

/// |i><j| -> |i>|j>, a vector on 2n sites.
Vector tau(const DenseOperator& m);
DenseOperator tau_inverse(const Vector& v, int n, int d);

/// tau^-1 pi tau for pi in S_2n: on the 2n-slot vector |i_1..i_n j_1..j_n>
/// the content of slot t moves to slot pi(t).
DenseOperator permutation_on_operator(const Permutation& pi, const DenseOperator& m);

/// General leg rearrangement of the 2n-leg tensor (legs 0..n-1 ket,
/// n..2n-1 bra): output leg L carries the index of input leg source[L].
DenseOperator permute_legs(const DenseOperator& m, const std::vector<int>& source);

/// m · (1 ⊗ .. ⊗ x ⊗ .. ⊗ 1) with the single-site x at `site`.
DenseOperator multiply_site_right(const DenseOperator& m, int site, const Matrix& x);

/// Dense realization of a permutation on n = p.degree() sites:
/// <i|p|j> = prod_t delta(i_{p(t)}, j_t).
DenseOperator realize_permutation(const Permutation& p, int d);

/// Smallest eigenvalue of a hermitian operator; rejects inputs whose
/// anti-hermitian part exceeds 1e-10 (relative to max(1, |m|)).
double min_eigenvalue(const DenseOperator& m);
/// All eigenvalues in increasing order, with the same hermiticity check.
Eigen::VectorXd eigenvalues(const DenseOperator& m);

}  // namespace wba
