#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace wba::cli;

void add_common(CLI::App& app, RunConfig& config, std::string& format) {
  app.add_option("--seed", config.seed, "RNG seed");
  app.add_option("--tolerance", config.tolerance, "Deviation tolerance");
  app.add_option("--size-guard", config.size_guard, "Largest d^n allowed (default: WBA_SIZE_GUARD or 4096)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--parallelism", config.parallelism, "Worker threads");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walled Brauer algebra toolkit: diagrams, projectors, positive maps and witnesses"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "text";

  VerifyPropsArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-props", "Closed-form maps against the contraction oracle");
  add_common(*verify_cmd, config, format);
  verify_cmd->add_option("--only", verify.only, "Groups to run (cycle-to-one cycle-subset one-to-many one-to-many-pi identities)")
      ->delimiter(',');
  verify_cmd->add_option("--samples", verify.samples, "Random input tuples per case");
  verify_cmd->add_option("--max-k", verify.max_k, "Largest cycle length");
  verify_cmd->add_option("--dims", verify.dims, "Local dimensions")->delimiter(',');

  ProjectorArgs proj;
  auto* proj_cmd = app.add_subcommand("projector", "Build F_mu(alpha) and check it densely");
  add_common(*proj_cmd, config, format);
  proj_cmd->add_option("--n", proj.n, "Sites");
  proj_cmd->add_option("--k", proj.k, "Transposed sites");
  proj_cmd->add_option("--d", proj.d, "Local dimension");
  proj_cmd->add_option("--mu", proj.mu, "Partition of n-k, e.g. [2,1]");
  proj_cmd->add_option("--alpha", proj.alpha, "Partition of n-2k, e.g. [2]");
  proj_cmd->add_option("--emit-map", proj.emit_map, "Evaluate the induced map with this many inputs");
  proj_cmd->add_option("--samples", proj.samples, "Random PSD input tuples for --emit-map");

  ScanBcsArgs scan;
  auto* scan_cmd = app.add_subcommand("scan-bcs", "Classify the three-site BCS family over an (alpha, beta) grid");
  add_common(*scan_cmd, config, format);
  scan_cmd->add_option("--d", scan.d, "Local dimension (>= 3)");
  scan_cmd->add_option("--alpha", scan.alpha, "start:stop:step");
  scan_cmd->add_option("--beta", scan.beta, "start:stop:step");
  scan_cmd->add_option("--out", scan.out, "Output file (default stdout)");
  scan_cmd->add_option("--restarts", scan.restarts, "See-saw restarts per point");
  scan_cmd->add_option("--iterations", scan.iterations, "See-saw sweeps per restart");

  WernerPptArgs ppt;
  auto* ppt_cmd = app.add_subcommand("werner-ppt", "Partial-transpose inequalities for three-qutrit Werner states");
  add_common(*ppt_cmd, config, format);
  ppt_cmd->add_option("--r", ppt.r, "r+ r- r0 r1 r2 r3 (fractions allowed)");
  ppt_cmd->add_option("--d", ppt.d, "Local dimension");
  ppt_cmd->add_option("--random", ppt.random, "Check this many seeded random states");

  EwMapsArgs ew;
  auto* ew_cmd = app.add_subcommand("ew-maps", "Werner-induced maps: closed forms against trace formulas");
  add_common(*ew_cmd, config, format);
  ew_cmd->add_option("--row", ew.row, "f1..f23, g1..g23 or all");
  ew_cmd->add_option("--samples", ew.samples, "Random instances per row");
  ew_cmd->add_option("--d", ew.d, "Local dimension");

  ComposeArgs comp;
  auto* comp_cmd = app.add_subcommand("compose", "Multiply two diagrams, e.g. \"(1 2)^T{2}\"");
  add_common(*comp_cmd, config, format);
  comp_cmd->add_option("first", comp.first, "Left factor")->required();
  comp_cmd->add_option("second", comp.second, "Right factor (applied first)")->required();
  comp_cmd->add_option("--n", comp.n, "Sites (default: largest label)");
  comp_cmd->add_option("--d", comp.d, "Also check the product densely at this d");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    config.format = parse_output_format(format);
    if (*verify_cmd) return cmd_verify_props(config, verify, std::cout, std::cerr);
    if (*proj_cmd) return cmd_projector(config, proj, std::cout, std::cerr);
    if (*scan_cmd) return cmd_scan_bcs(config, scan, std::cout, std::cerr);
    if (*ppt_cmd) return cmd_werner_ppt(config, ppt, std::cout, std::cerr);
    if (*ew_cmd) return cmd_ew_maps(config, ew, std::cout, std::cerr);
    if (*comp_cmd) return cmd_compose(config, comp, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wba::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
