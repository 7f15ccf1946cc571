#pragma once

#include <cstdint>
#include <vector>

#include "wba/sym/group_algebra.hpp"
#include "wba/sym/partition.hpp"
#include "wba/sym/permutation.hpp"

namespace wba {

/// Irreducible character chi^alpha on the class with the given cycle type
/// (Murnaghan–Nakayama rule, exact integer arithmetic).
long long character(const Partition& alpha, const Partition& cycle_type);
long long character(const Partition& alpha, const Permutation& element);

/// d_alpha: dimension of the S_n irrep (hook length formula).
long long irrep_dimension(const Partition& alpha);

/// m_alpha(d): dimension of the GL_d irrep alpha, i.e. the multiplicity of
/// the S_n irrep alpha in (C^d)^{⊗n}. Zero when height(alpha) > d.
long long schur_weyl_multiplicity(const Partition& alpha, int d);

/// Central idempotent P_alpha = (d_alpha/n!) sum_pi chi^alpha(pi^-1) pi.
GroupAlgebraElement young_projector(const Partition& alpha);

/// Representatives of the cosets S(n-2k) eta of S(n-2k) (first n-2k points)
/// inside S(n-k), one per coset: the lexicographically first one-line image.
/// Returned permutations have degree n-k.
std::vector<Permutation> coset_representatives(int n, int k);

long long factorial(int n);
long long binomial(int n, int k);

}  // namespace wba
