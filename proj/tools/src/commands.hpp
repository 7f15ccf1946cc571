#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace wba::cli {

struct VerifyPropsArgs {
  std::vector<std::string> only;
  int samples = 20;
  int max_k = 5;
  std::vector<int> dims{2, 3};
};

struct ProjectorArgs {
  int n = 4;
  int k = 1;
  int d = 2;
  std::string mu = "[2,1]";
  std::string alpha = "[2]";
  /// Number of map inputs for --emit-map; 0 leaves the map out.
  int emit_map = 0;
  int samples = 20;
};

struct ScanBcsArgs {
  int d = 3;
  std::string alpha = "0:0.5:0.05";
  std::string beta = "-0.5:0.5:0.1";
  std::string out;  // empty: stdout
  int restarts = 64;
  int iterations = 200;
};

struct WernerPptArgs {
  std::string r;  // six numbers r+ r- r0 r1 r2 r3
  int d = 3;
  int random = 0;  // >0: check this many seeded random states instead
};

struct EwMapsArgs {
  std::string row = "all";
  int samples = 50;
  int d = 3;
};

struct ComposeArgs {
  std::string first;
  std::string second;
  int n = 0;
  int d = 0;  // >0: also check the product densely at this d
};

// Each command prints its report to out, diagnostics to err, and returns the
// process exit code. UsageError propagates to the caller (exit 1).
int cmd_verify_props(const RunConfig& config, const VerifyPropsArgs& args, std::ostream& out, std::ostream& err);
int cmd_projector(const RunConfig& config, const ProjectorArgs& args, std::ostream& out, std::ostream& err);
int cmd_scan_bcs(const RunConfig& config, const ScanBcsArgs& args, std::ostream& out, std::ostream& err);
int cmd_werner_ppt(const RunConfig& config, const WernerPptArgs& args, std::ostream& out, std::ostream& err);
int cmd_ew_maps(const RunConfig& config, const EwMapsArgs& args, std::ostream& out, std::ostream& err);
int cmd_compose(const RunConfig& config, const ComposeArgs& args, std::ostream& out, std::ostream& err);

/// Six reals separated by spaces or commas; "a/b" fractions allowed.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace wba::cli
