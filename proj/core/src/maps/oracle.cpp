#include "wba/maps/oracle.hpp"

#include "wba/dense/operations.hpp"
#include "wba/util/error.hpp"
#include "wba/util/tolerances.hpp"

namespace wba {

void MapSpec::validate() const {
  if (n_in < 1) throw Error("a map needs at least one input slot");
  if (n_out < 0) throw Error("negative output slot count");
  const int kernel_sites = std::visit([](const auto& k) { return k.n(); }, kernel);
  if (kernel_sites != sites()) {
    throw Error("kernel has " + std::to_string(kernel_sites) + " sites but n_in + n_out = " + std::to_string(sites()));
  }
  if (const auto* dense = std::get_if<DenseOperator>(&kernel); dense != nullptr && dense->d() != d) {
    throw Error("dense kernel dimension " + std::to_string(dense->d()) + " differs from d=" + std::to_string(d));
  }
}

DenseOperator MapSpec::dense_kernel(std::size_t size_guard) const {
  if (const auto* dense = std::get_if<DenseOperator>(&kernel)) return *dense;
  return realize(std::get<WbaElement>(kernel), d, size_guard);
}

DenseOperator contract(const DenseOperator& kernel, std::span<const DenseOperator> factors, const SiteSubset& traced) {
  const int n = kernel.n();
  if (static_cast<int>(factors.size()) != n) {
    throw Error("contract: expected " + std::to_string(n) + " factors, got " + std::to_string(factors.size()));
  }
  traced.check_range(n);
  DenseOperator product = kernel;
  for (int t = 1; t <= n; ++t) {
    const DenseOperator& f = factors[static_cast<std::size_t>(t - 1)];
    if (f.n() != 1 || f.d() != kernel.d()) throw Error("contract: factor " + std::to_string(t) + " is not d x d");
    if (f.matrix().isIdentity(0.0)) continue;
    product = multiply_site_right(product, t, f.matrix());
  }
  if (static_cast<int>(traced.size()) == n) {
    Matrix scalar(1, 1);
    scalar(0, 0) = product.trace();
    return {0, kernel.d(), std::move(scalar)};
  }
  return partial_trace(product, traced);
}

DenseOperator evaluate_oracle(const MapSpec& spec, std::span<const DenseOperator> inputs, std::size_t size_guard) {
  spec.validate();
  if (static_cast<int>(inputs.size()) != spec.n_in) {
    throw Error("map takes " + std::to_string(spec.n_in) + " inputs, got " + std::to_string(inputs.size()));
  }
  std::vector<DenseOperator> factors(inputs.begin(), inputs.end());
  for (int t = 0; t < spec.n_out; ++t) factors.push_back(DenseOperator::identity(1, spec.d));
  return contract(spec.dense_kernel(size_guard), factors, SiteSubset::range(1, spec.n_in));
}

DenseOperator evaluate_oracle(const MapSpec& spec, std::span<const DenseOperator> inputs) {
  return evaluate_oracle(spec, inputs, default_size_guard());
}

}  // namespace wba
