#pragma once

#include <span>

#include "wba/dense/site_subset.hpp"
#include "wba/maps/map_spec.hpp"

namespace wba {

/// tr_traced[kernel (F_1 ⊗ .. ⊗ F_n)] for one single-site factor per site.
/// Tracing every site gives a 0-site (1x1) operator holding the full trace.
DenseOperator contract(const DenseOperator& kernel, std::span<const DenseOperator> factors,
                       const SiteSubset& traced);

/// Ground truth for every closed form: realize the kernel, append identities on
/// the output sites and trace out the inputs. n_out = 0 yields the full trace.
DenseOperator evaluate_oracle(const MapSpec& spec, std::span<const DenseOperator> inputs);
DenseOperator evaluate_oracle(const MapSpec& spec, std::span<const DenseOperator> inputs, std::size_t size_guard);

}  // namespace wba
