#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wba/dense/operator.hpp"
#include "wba/dense/site_subset.hpp"

namespace wba {

/// Ordered disjoint blocks covering 1..n, e.g. 1|23.
struct PartitionSpec {
  std::vector<SiteSubset> blocks;

  /// Every site singled out: 1|2|..|n.
  static PartitionSpec singletons(int n);
  void validate(int n) const;
  /// "1|23"; multi-digit labels are comma separated within a block.
  std::string to_string() const;
};

/// Parses "1|23", "1|2|3" or "1,2|3,4".
PartitionSpec parse_partition_spec(std::string_view text);

struct SearchBudget {
  int restarts = 64;
  int iterations = 200;
  double convergence = 1e-12;
  /// Half-width of the band around zero treated as undecided.
  double band = 1e-7;
  /// Random product states evaluated before the see-saw runs.
  int random_samples = 256;
  double eig_tol = 1e-9;
  std::uint64_t seed = 1;
  unsigned parallelism = 1;
};

enum class Classification { kPsd, kWitnessCandidate, kNotBlockPositive, kInconclusive };
std::string to_string(Classification c);

struct PositivityVerdict {
  Classification classification = Classification::kInconclusive;
  double min_eig = 0.0;
  /// Best product-state value found. For PSD operators no search runs and
  /// this holds min_eig, a lower bound on the product minimum.
  double product_min_estimate = 0.0;
  /// One unit vector per block reaching product_min_estimate (absent for PSD).
  std::optional<std::vector<Vector>> violating_product_state;

  bool block_positive() const {
    return classification == Classification::kPsd || classification == Classification::kWitnessCandidate;
  }
};

/// <psi|M|psi> for the product vector with one factor per block.
double product_expectation(const DenseOperator& m, const PartitionSpec& partition, const std::vector<Vector>& factors);

/// Product-state minimum by random sampling plus multi-restart see-saw.
struct ProductSearchResult {
  double value = 0.0;
  std::vector<Vector> factors;
};
ProductSearchResult minimize_over_products(const DenseOperator& m, const PartitionSpec& partition,
                                           const SearchBudget& budget);

/// PSD when min_eig >= -eig_tol; otherwise the product minimum e decides:
/// e >= -band witness candidate, e < -2 band not block-positive (with the
/// violating product state re-evaluated), in between inconclusive.
PositivityVerdict check_block_positive(const DenseOperator& m, const PartitionSpec& partition,
                                       const SearchBudget& budget = {});

}  // namespace wba
