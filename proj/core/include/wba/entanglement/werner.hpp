#pragma once

#include <array>
#include <complex>

#include "wba/dense/operator.hpp"
#include "wba/dense/random.hpp"

namespace wba {

/// Coordinates of a U⊗U⊗U-invariant operator on three sites.
///   alphas: coefficients of id, (12), (23), (31), (123), (321);
///   cs:     coefficients of R_+, R_-, R_0, R_1, R_2, R_3;
///   rs:     r_k = tr(rho R_k) = tr(R_k^2) c_k.
struct WernerParams {
  std::array<Complex, 6> alphas{};
  std::array<double, 6> cs{};
  std::array<double, 6> rs{};
  int d = 3;

  static WernerParams from_c(const std::array<double, 6>& cs, int d);
  static WernerParams from_r(const std::array<double, 6>& rs, int d);
  /// Throws when the alphas do not come from real c coefficients.
  static WernerParams from_alpha(const std::array<Complex, 6>& alphas, int d);

  /// Throws when the three coordinate sets disagree beyond tol.
  void check_consistent(double tol = 1e-10) const;
  /// r_+, r_-, r_0 >= 0, r_+ + r_- + r_0 = 1, r_1^2 + r_2^2 + r_3^2 <= r_0^2.
  bool is_valid_state(double tol = 1e-12) const;
};

/// tr(R_k R_k) for k = +, -, 0, 1, 2, 3.
std::array<double, 6> werner_norms(int d);
/// R_+, ..., R_3 as dense operators.
std::array<DenseOperator, 6> werner_basis(int d);
/// The six permutations id, (12), (23), (31), (123), (321).
std::array<DenseOperator, 6> werner_permutations(int d);

/// sum_i alpha_i pi_i, after checking the parameter sets agree.
DenseOperator werner_state(const WernerParams& params);

struct PptConditions {
  std::array<bool, 6> conditions{};
  bool overall = false;
};

/// The six inequalities for rho^{T_1} >= 0 in terms of r = (r+, r-, r0, r1, r2, r3),
/// with F_1 = (1-r1-5r- -r+)(-1-r1+r- +5r+)/3 and F_2 = (1-r1-r- -r+)(1+r1-r- -r+).
PptConditions werner_ppt_conditions(const std::array<double, 6>& rs);

/// Valid state: (r+, r-, r0) Dirichlet(1,1,1), (r1, r2, r3) uniform in the
/// ball of radius r0.
WernerParams random_valid_werner(int d, Rng& rng);

}  // namespace wba
