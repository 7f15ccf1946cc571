#pragma once

#include <string_view>
#include <vector>

#include "wba/entanglement/block_positivity.hpp"

namespace wba {

/// Inclusive grid start, start+step, ..., stop.
struct ScanRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;
  std::vector<double> values() const;
};

/// Parses "start:stop:step" or a single value.
ScanRange parse_scan_range(std::string_view text);

struct ScanRow {
  double alpha = 0.0;
  double beta = 0.0;
  bool analytic_positive = false;
  double min_eig = 0.0;
  double product_min = 0.0;
  Classification classification = Classification::kInconclusive;
};

/// BCS kernel classified on every grid point across 1|23; rows ordered by
/// beta then alpha. Point i uses seed budget.seed + i, so the table does not
/// depend on the thread count.
std::vector<ScanRow> scan_bcs_region(const ScanRange& alpha, const ScanRange& beta, int d, const SearchBudget& budget);

}  // namespace wba
