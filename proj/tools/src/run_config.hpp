#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "wba/util/error.hpp"

namespace wba::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Malformed or out-of-range flag values; maps to exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { kText, kJson, kCsv };

OutputFormat parse_output_format(std::string_view text);
std::string to_string(OutputFormat f);

/// Settings shared by every subcommand. All numeric defaults live here.
struct RunConfig {
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
  std::size_t size_guard = 0;  // 0 = WBA_SIZE_GUARD or the library default
  OutputFormat format = OutputFormat::kText;
  unsigned parallelism = 1;

  std::size_t effective_size_guard() const;
  void validate() const;
  /// Rejects a task whose dense operators would need d^n > size guard.
  void require_dimension(int d, int n) const;
};

}  // namespace wba::cli
