#include "run_config.hpp"

#include <cmath>

#include "wba/util/tolerances.hpp"

namespace wba::cli {

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::kText;
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  throw UsageError("unknown output format '" + std::string(text) + "' (text, json, csv)");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kText: return "text";
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
  }
  return "text";
}

std::size_t RunConfig::effective_size_guard() const { return size_guard == 0 ? default_size_guard() : size_guard; }

void RunConfig::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw UsageError("--tolerance must be a positive number");
  }
  if (parallelism == 0) throw UsageError("--parallelism must be at least 1");
}

void RunConfig::require_dimension(int d, int n) const {
  if (d < 1 || n < 0) throw UsageError("invalid dimensions d=" + std::to_string(d) + " n=" + std::to_string(n));
  const std::size_t guard = effective_size_guard();
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(d);
    if (dim > guard) {
      throw UsageError("task needs d^n = " + std::to_string(d) + "^" + std::to_string(n) + " > size guard " +
                       std::to_string(guard));
    }
  }
}

}  // namespace wba::cli
