#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "wba/dense/operator.hpp"
#include "wba/dense/site_subset.hpp"
#include "wba/entanglement/block_positivity.hpp"
#include "wba/entanglement/werner.hpp"

namespace wba {

enum class WernerMapKind { kF, kG };

/// f_S(A) = tr_1[rho^{T_S} A ⊗ 1 ⊗ 1], g_S(A, B) = tr_12[rho^{T_S} A ⊗ B ⊗ 1].
struct WernerMapRow {
  WernerMapKind kind = WernerMapKind::kF;
  SiteSubset transposed;
  std::string name() const;
};

/// The twelve rows f1, f2, f3, f12, f13, f23, g1, ..., g23.
const std::vector<WernerMapRow>& werner_map_rows();
WernerMapRow parse_werner_map_row(std::string_view text);

/// Closed-form evaluation. For f maps B is ignored.
DenseOperator eggeling_werner_map(const WernerMapRow& row, const std::array<Complex, 6>& alphas, const Matrix& a,
                                  const Matrix& b = Matrix());
DenseOperator eggeling_werner_map(const WernerMapRow& row, const WernerParams& params, const Matrix& a,
                                  const Matrix& b = Matrix());
/// Defining trace formula, evaluated densely.
DenseOperator eggeling_werner_trace_form(const WernerMapRow& row, const std::array<Complex, 6>& alphas,
                                         const Matrix& a, const Matrix& b = Matrix());

struct MapPositivityReport {
  PositivityVerdict f_verdict;  // rho^{T_S} across 1|23
  PositivityVerdict g_verdict;  // rho^{T_S} across 1|2|3
  /// Smallest output eigenvalue over sampled PSD inputs (and certificate inputs).
  double f_min_output = 0.0;
  double g_min_output = 0.0;
  bool f_consistent = true;
  bool g_consistent = true;
  /// Block-positive across 1|23 implies block-positive across 1|2|3.
  bool nesting_consistent = true;
  std::vector<std::string> contradictions;
};

/// Cross-checks map positivity on random PSD inputs against block-positivity
/// of rho^{T_S}. A NOT_BLOCK_POSITIVE verdict must come with inputs built
/// from its product state that drive the map output negative.
MapPositivityReport map_positivity_check(const WernerParams& params, const SiteSubset& s, const SearchBudget& budget,
                                      int samples = 50, double tol = 1e-8);

}  // namespace wba
