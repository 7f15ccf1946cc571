#include "wba/entanglement/werner.hpp"

#include <algorithm>
#include <cmath>

#include "wba/dense/operations.hpp"
#include "wba/sym/permutation.hpp"
#include "wba/util/error.hpp"

namespace wba {
namespace {

const double kRoot3 = std::sqrt(3.0);

// alpha = L c in the orders (id, (12), (23), (31), (123), (321)) and (+, -, 0, 1, 2, 3).
Eigen::Matrix<Complex, 6, 6> alpha_from_c_matrix() {
  const Complex i(0.0, 1.0);
  Eigen::Matrix<Complex, 6, 6> l;
  l << 1.0 / 6, 1.0 / 6, 2.0 / 3, 0.0, 0.0, 0.0,             //
      1.0 / 6, -1.0 / 6, 0.0, -1.0 / 3, 1.0 / kRoot3, 0.0,  //
      1.0 / 6, -1.0 / 6, 0.0, 2.0 / 3, 0.0, 0.0,            //
      1.0 / 6, -1.0 / 6, 0.0, -1.0 / 3, -1.0 / kRoot3, 0.0, //
      1.0 / 6, 1.0 / 6, -1.0 / 3, 0.0, 0.0, i / kRoot3,     //
      1.0 / 6, 1.0 / 6, -1.0 / 3, 0.0, 0.0, -i / kRoot3;
  return l;
}

std::array<Complex, 6> alphas_of(const std::array<double, 6>& cs) {
  Eigen::Matrix<Complex, 6, 1> c;
  for (int k = 0; k < 6; ++k) c(k) = cs[static_cast<std::size_t>(k)];
  const Eigen::Matrix<Complex, 6, 1> a = alpha_from_c_matrix() * c;
  std::array<Complex, 6> out;
  for (int k = 0; k < 6; ++k) out[static_cast<std::size_t>(k)] = a(k);
  return out;
}

void check_dimension(int d) {
  if (d < 2) throw Error("Werner parameters need d >= 2");
}

}  // namespace

std::array<double, 6> werner_norms(int d) {
  const double dd = d;
  const double mixed = 2.0 * dd * (dd * dd - 1.0) / 3.0;
  return {dd * (dd + 1) * (dd + 2) / 6.0, dd * (dd - 1) * (dd - 2) / 6.0, mixed, mixed, mixed, mixed};
}

WernerParams WernerParams::from_c(const std::array<double, 6>& cs, int d) {
  check_dimension(d);
  WernerParams p;
  p.d = d;
  p.cs = cs;
  const auto norms = werner_norms(d);
  for (std::size_t k = 0; k < 6; ++k) p.rs[k] = norms[k] * cs[k];
  p.alphas = alphas_of(cs);
  return p;
}

WernerParams WernerParams::from_r(const std::array<double, 6>& rs, int d) {
  check_dimension(d);
  const auto norms = werner_norms(d);
  std::array<double, 6> cs{};
  for (std::size_t k = 0; k < 6; ++k) {
    if (norms[k] == 0.0) {
      // R_- vanishes at d = 2.
      if (std::abs(rs[k]) > 1e-12) throw Error("r_- must be 0 at d=2 (R_- vanishes)");
      cs[k] = 0.0;
    } else {
      cs[k] = rs[k] / norms[k];
    }
  }
  WernerParams p = from_c(cs, d);
  p.rs = rs;
  return p;
}

WernerParams WernerParams::from_alpha(const std::array<Complex, 6>& alphas, int d) {
  check_dimension(d);
  Eigen::Matrix<Complex, 6, 1> a;
  for (int k = 0; k < 6; ++k) a(k) = alphas[static_cast<std::size_t>(k)];
  const Eigen::Matrix<Complex, 6, 1> c = alpha_from_c_matrix().fullPivLu().solve(a);
  std::array<double, 6> cs{};
  for (int k = 0; k < 6; ++k) {
    if (std::abs(c(k).imag()) > 1e-10 * std::max(1.0, std::abs(c(k)))) {
      throw Error("alphas do not describe a hermitian Werner operator (alpha_1..4 real, alpha_5 = conj(alpha_6))");
    }
    cs[static_cast<std::size_t>(k)] = c(k).real();
  }
  WernerParams p = from_c(cs, d);
  p.alphas = alphas;
  p.check_consistent();
  return p;
}

void WernerParams::check_consistent(double tol) const {
  check_dimension(d);
  const auto expect = alphas_of(cs);
  const auto norms = werner_norms(d);
  for (std::size_t k = 0; k < 6; ++k) {
    if (std::abs(expect[k] - alphas[k]) > tol) {
      throw Error("Werner parameters inconsistent: alpha_" + std::to_string(k + 1) + " does not match the c coefficients");
    }
    if (std::abs(norms[k] * cs[k] - rs[k]) > tol) {
      throw Error("Werner parameters inconsistent: r_" + std::to_string(k) + " does not match the c coefficients");
    }
  }
}

bool WernerParams::is_valid_state(double tol) const {
  const double rp = rs[0], rm = rs[1], r0 = rs[2];
  if (rp < -tol || rm < -tol || r0 < -tol) return false;
  if (std::abs(rp + rm + r0 - 1.0) > tol) return false;
  if (d == 2 && std::abs(rm) > tol) return false;
  return rs[3] * rs[3] + rs[4] * rs[4] + rs[5] * rs[5] <= r0 * r0 + tol;
}

std::array<DenseOperator, 6> werner_permutations(int d) {
  return {realize_permutation(Permutation::identity(3), d),
          realize_permutation(Permutation::from_cycles(3, {{1, 2}}), d),
          realize_permutation(Permutation::from_cycles(3, {{2, 3}}), d),
          realize_permutation(Permutation::from_cycles(3, {{3, 1}}), d),
          realize_permutation(Permutation::from_cycles(3, {{1, 2, 3}}), d),
          realize_permutation(Permutation::from_cycles(3, {{3, 2, 1}}), d)};
}

std::array<DenseOperator, 6> werner_basis(int d) {
  const auto p = werner_permutations(d);
  const auto l = alpha_from_c_matrix();
  std::array<DenseOperator, 6> out;
  for (int k = 0; k < 6; ++k) {
    DenseOperator r(3, d);
    for (int i = 0; i < 6; ++i) r += l(i, k) * p[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(k)] = std::move(r);
  }
  return out;
}

DenseOperator werner_state(const WernerParams& params) {
  params.check_consistent();
  const auto p = werner_permutations(params.d);
  DenseOperator rho(3, params.d);
  for (std::size_t i = 0; i < 6; ++i) rho += params.alphas[i] * p[i];
  return rho;
}

PptConditions werner_ppt_conditions(const std::array<double, 6>& rs) {
  const double rp = rs[0], rm = rs[1], r1 = rs[3], r2 = rs[4], r3 = rs[5];
  const double f1 = (1 - r1 - 5 * rm - rp) * (-1 - r1 + rm + 5 * rp) / 3.0;
  const double f2 = (1 - r1 - rm - rp) * (1 + r1 - rm - rp);
  const double q = r2 * r2 + r3 * r3;
  PptConditions out;
  out.conditions = {0 <= rm, 0 <= r1 - rp - rm + 1, 0 <= 1 - r1 - 5 * rm - rp, 0 <= -1 - r1 + rm + 5 * rp, q <= f1, q <= f2};
  out.overall = std::all_of(out.conditions.begin(), out.conditions.end(), [](bool b) { return b; });
  return out;
}

WernerParams random_valid_werner(int d, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::array<double, 3> w{expo(rng), expo(rng), expo(rng)};
  if (d == 2) w[1] = 0.0;
  const double total = w[0] + w[1] + w[2];
  std::array<double, 6> rs{w[0] / total, w[1] / total, w[2] / total, 0, 0, 0};
  std::array<double, 3> v{normal(rng), normal(rng), normal(rng)};
  const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  const double radius = rs[2] * std::cbrt(uniform(rng));
  for (std::size_t i = 0; i < 3; ++i) rs[3 + i] = norm > 0 ? radius * v[i] / norm : 0.0;
  return WernerParams::from_r(rs, d);
}

}  // namespace wba
