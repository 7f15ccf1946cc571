#include "wba/maps/closed_forms.hpp"

#include "wba/dense/operations.hpp"
#include "wba/util/error.hpp"

namespace wba {
namespace {

void check_inputs(std::span<const DenseOperator> x) {
  if (x.size() < 2) throw Error("cycle maps need k >= 2 factors");
  for (const auto& m : x)
    if (m.n() != 1 || m.d() != x.front().d()) throw Error("cycle map factors must be d x d with a common d");
}

Matrix ordered_product(std::span<const DenseOperator> x, int first, int last, int transposed) {
  // Product X_first .. X_last (1-based, either direction) with one factor transposed.
  const int step = first <= last ? 1 : -1;
  Matrix acc = Matrix::Identity(x.front().dim(), x.front().dim());
  for (int t = first;; t += step) {
    const Matrix& m = x[static_cast<std::size_t>(t - 1)].matrix();
    acc = t == transposed ? (acc * m.transpose()).eval() : (acc * m).eval();
    if (t == last) break;
  }
  return acc;
}

}  // namespace

Permutation cycle_permutation(CycleDirection direction, int k) {
  if (k < 1) throw Error("cycle length must be positive");
  std::vector<int> cycle(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) cycle[static_cast<std::size_t>(t)] = direction == CycleDirection::kForward ? t + 1 : k - t;
  return k == 1 ? Permutation::identity(1) : Permutation::from_cycles(k, {cycle});
}

DenseOperator evaluate_cycle_to_one(CycleDirection direction, int j, std::span<const DenseOperator> x) {
  check_inputs(x);
  const int k = static_cast<int>(x.size());
  if (j < 1 || j > k) throw Error("transposed site " + std::to_string(j) + " out of range 1.." + std::to_string(k));
  Matrix out;
  if (direction == CycleDirection::kBackward) {
    if (j != k) out = ordered_product(x, 1, k, j);
    else out = ordered_product(x, 1, k - 1, 0).transpose() * x[static_cast<std::size_t>(k - 1)].matrix();
  } else {
    if (j != 1) out = ordered_product(x, k, 1, j);
    else out = ordered_product(x, k, 2, 0).transpose() * x.front().matrix();
  }
  return DenseOperator::single_site(std::move(out));
}

DenseOperator theta_product(ThetaKind kind, const SiteSubset& s, std::span<const int> labels,
                            std::span<const DenseOperator> factors) {
  if (labels.size() != factors.size() || factors.empty()) throw Error("theta_product: one label per factor required");
  Matrix acc = Matrix::Identity(factors.front().dim(), factors.front().dim());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const bool in_s = s.contains(labels[i]);
    const bool transpose = kind == ThetaKind::kPlain ? in_s : !in_s;
    acc = transpose ? (acc * factors[i].matrix().transpose()).eval() : (acc * factors[i].matrix()).eval();
  }
  return DenseOperator::single_site(std::move(acc));
}

DenseOperator evaluate_cycle_subset(const SiteSubset& s, std::span<const DenseOperator> x) {
  check_inputs(x);
  const int k = static_cast<int>(x.size());
  s.check_range(k);
  std::vector<int> labels;
  std::vector<DenseOperator> ordered;
  if (!s.contains(k)) {
    for (int t = 1; t <= k; ++t) labels.push_back(t);
    return theta_product(ThetaKind::kPlain, s, labels, x);
  }
  for (int t = k - 1; t >= 1; --t) {
    labels.push_back(t);
    ordered.push_back(x[static_cast<std::size_t>(t - 1)]);
  }
  labels.push_back(k);
  ordered.push_back(x[static_cast<std::size_t>(k - 1)]);
  return theta_product(ThetaKind::kBar, s, labels, ordered);
}

DenseOperator evaluate_one_to_many(const DenseOperator& a, int k) {
  if (k < 2) throw Error("one-to-many maps need k >= 2");
  if (a.n() != 1) throw Error("one-to-many maps take a single-site input");
  if (k == 2) return reshuffle_sites(a, 1, 1);
  DenseOperator m = a;
  for (int t = 0; t < k - 2; ++t) m = kron(m, DenseOperator::identity(1, a.d()));
  for (int l = k - 2; l >= 1; --l) m = reshuffle_sites(m, k - 1, l);
  return m;
}

Permutation one_to_many_permutation(int k) {
  if (k < 2) throw Error("one-to-many maps need k >= 2");
  if (k == 2) return Permutation::from_cycles(2, {{1, 2}});
  const int kp = k - 1;
  std::vector<int> cycle;
  for (int v = 2 * kp - 1; v >= kp; --v) cycle.push_back(v);
  return Permutation::from_cycles(2 * kp, {cycle});
}

DenseOperator evaluate_one_to_many_via_pi(const DenseOperator& a, int k) {
  if (a.n() != 1) throw Error("one-to-many maps take a single-site input");
  const Permutation pi = one_to_many_permutation(k);
  DenseOperator m = a;
  for (int t = 0; t < k - 2; ++t) m = kron(m, DenseOperator::identity(1, a.d()));
  return permutation_on_operator(pi, m);
}

}  // namespace wba
