#include "wba/entanglement/scan.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "wba/entanglement/bcs.hpp"
#include "wba/util/error.hpp"
#include "wba/util/parallel.hpp"

namespace wba {
namespace {

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw Error("bad number '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::vector<double> ScanRange::values() const {
  if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop)) throw Error("scan range needs finite bounds and step > 0");
  if (stop < start) throw Error("scan range stop is below start");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 1000000) throw Error("scan range has too many points");
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double v = start + static_cast<double>(i) * step;
    // Snap to a 1e-12 grid so 0.1 steps print as written.
    out.push_back(std::round(v * 1e12) / 1e12);
  }
  return out;
}

ScanRange parse_scan_range(std::string_view text) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) {
    const double v = parse_double(text);
    return {v, v, 1.0};
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos) throw Error("scan range must be start:stop:step, got '" + std::string(text) + "'");
  ScanRange r{parse_double(text.substr(0, first)), parse_double(text.substr(first + 1, second - first - 1)),
              parse_double(text.substr(second + 1))};
  r.values();
  return r;
}

std::vector<ScanRow> scan_bcs_region(const ScanRange& alpha, const ScanRange& beta, int d, const SearchBudget& budget) {
  if (d < 3) throw Error("scan-bcs needs d >= 3");
  const auto alphas = alpha.values();
  const auto betas = beta.values();
  std::vector<ScanRow> rows(alphas.size() * betas.size());
  const PartitionSpec cut = parse_partition_spec("1|23");
  parallel_for(rows.size(), budget.parallelism, [&](std::size_t i) {
    const double b = betas[i / alphas.size()];
    const double a = alphas[i % alphas.size()];
    SearchBudget local = budget;
    local.seed = budget.seed + i;
    local.parallelism = 1;
    const auto verdict = check_block_positive(bcs_kernel(a, b, d), cut, local);
    rows[i] = {a, b, bcs_positivity_condition(a, b, d), verdict.min_eig, verdict.product_min_estimate,
               verdict.classification};
  });
  return rows;
}

}  // namespace wba
