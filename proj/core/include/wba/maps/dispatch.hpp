#pragma once

#include <optional>
#include <span>
#include <string>

#include "wba/maps/closed_forms.hpp"
#include "wba/maps/map_spec.hpp"

namespace wba {

/// Normal form (cycle)^{T_S} of a single-term kernel, with its scalar
/// coefficient at spec.d.
struct TransposedCycleForm {
  CycleDirection direction = CycleDirection::kBackward;
  SiteSubset transposed;
  Complex scale = 1.0;
};

/// Recognizes (k..1)^{T_S} with n_out = 1 and (1..k)^{T_k} with n_in = 1.
std::optional<TransposedCycleForm> recognize(const MapSpec& spec);

enum class EvaluationPath { kCycleToOne, kCycleSubset, kOneToMany, kOracle };
std::string to_string(EvaluationPath path);

struct FastResult {
  DenseOperator value;
  EvaluationPath path = EvaluationPath::kOracle;
};

/// Closed form when the kernel is recognized, contraction oracle otherwise.
FastResult fast_evaluate(const MapSpec& spec, std::span<const DenseOperator> inputs);

}  // namespace wba
