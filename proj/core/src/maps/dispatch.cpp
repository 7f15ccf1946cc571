#include "wba/maps/dispatch.hpp"

#include "wba/maps/oracle.hpp"
#include "wba/util/error.hpp"

namespace wba {

std::optional<TransposedCycleForm> recognize(const MapSpec& spec) {
  const auto* element = std::get_if<WbaElement>(&spec.kernel);
  if (element == nullptr || element->size() != 1) return std::nullopt;
  const auto& [diagram, coeff] = *element->terms().begin();
  if (!coeff.is_constant()) return std::nullopt;
  const int k = diagram.n();
  if (k < 2 || k > 16) return std::nullopt;
  const Complex scale = coeff.evaluate(spec.d);
  if (spec.n_out == 1) {
    const Permutation backward = cycle_permutation(CycleDirection::kBackward, k);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      const SiteSubset s = SiteSubset::from_mask(mask, k);
      if (WbaDiagram::from_permutation(backward, s) == diagram) return TransposedCycleForm{CycleDirection::kBackward, s, scale};
    }
  }
  if (spec.n_in == 1) {
    const SiteSubset last{k};
    if (WbaDiagram::from_permutation(cycle_permutation(CycleDirection::kForward, k), last) == diagram) {
      return TransposedCycleForm{CycleDirection::kForward, last, scale};
    }
  }
  return std::nullopt;
}

std::string to_string(EvaluationPath path) {
  switch (path) {
    case EvaluationPath::kCycleToOne: return "cycle_to_one";
    case EvaluationPath::kCycleSubset: return "cycle_subset";
    case EvaluationPath::kOneToMany: return "one_to_many";
    case EvaluationPath::kOracle: return "oracle";
  }
  return "oracle";
}

FastResult fast_evaluate(const MapSpec& spec, std::span<const DenseOperator> inputs) {
  spec.validate();
  if (static_cast<int>(inputs.size()) != spec.n_in) {
    throw Error("map takes " + std::to_string(spec.n_in) + " inputs, got " + std::to_string(inputs.size()));
  }
  const auto form = recognize(spec);
  if (!form) return {evaluate_oracle(spec, inputs), EvaluationPath::kOracle};
  for (const auto& x : inputs)
    if (x.n() != 1 || x.d() != spec.d) throw Error("map inputs must be single-site d x d operators");
  if (form->direction == CycleDirection::kBackward) {
    std::vector<DenseOperator> x(inputs.begin(), inputs.end());
    x.push_back(DenseOperator::identity(1, spec.d));
    if (form->transposed.size() == 1) {
      return {form->scale * evaluate_cycle_to_one(CycleDirection::kBackward, form->transposed.sites().front(), x),
              EvaluationPath::kCycleToOne};
    }
    return {form->scale * evaluate_cycle_subset(form->transposed, x), EvaluationPath::kCycleSubset};
  }
  return {form->scale * evaluate_one_to_many(inputs.front(), spec.sites()), EvaluationPath::kOneToMany};
}

}  // namespace wba
