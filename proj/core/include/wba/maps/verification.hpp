#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wba {

struct VerificationOptions {
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
  int samples = 20;
  int max_k = 5;
  std::vector<int> dims{2, 3};
  /// Groups to run: cycle-to-one, cycle-subset, one-to-many, one-to-many-pi, identities. Empty = all.
  std::vector<std::string> only;
  unsigned parallelism = 1;
};

struct VerificationCase {
  std::string group;
  std::string name;
  double max_deviation = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::vector<VerificationCase> cases;
  bool all_passed() const;
  double max_deviation(const std::string& group) const;
};

/// Closed forms against the contraction oracle on seeded random inputs.
VerificationReport run_verification(const VerificationOptions& options);

const std::vector<std::string>& verification_groups();

}  // namespace wba
