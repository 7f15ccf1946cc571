#include "commands.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <limits>
#include <random>

#include "output.hpp"
#include "wba/algebra/diagram.hpp"
#include "wba/algebra/projectors.hpp"
#include "wba/dense/operations.hpp"
#include "wba/dense/random.hpp"
#include "wba/entanglement/bcs.hpp"
#include "wba/entanglement/scan.hpp"
#include "wba/entanglement/werner.hpp"
#include "wba/entanglement/werner_maps.hpp"
#include "wba/io/json_io.hpp"
#include "wba/maps/oracle.hpp"
#include "wba/maps/projector_maps.hpp"
#include "wba/maps/verification.hpp"

namespace wba::cli {
namespace {

// Output eigenvalues and the partial-transpose eigencheck use the same floor.
constexpr double kPsdFloor = 1e-8;
constexpr int kHaarSamples = 20;

template <class Fn>
auto parse_flag(const char* flag, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void require_positive(const char* flag, int value) {
  if (value < 1) throw UsageError(std::string(flag) + " must be at least 1");
}

std::string status(bool ok) { return ok ? "PASS" : "FAIL"; }

// U^{⊗ plain} ⊗ conj(U)^{⊗ conjugated}.
DenseOperator unitary_tensor(const Matrix& u, int plain, int conjugated) {
  std::vector<DenseOperator> factors;
  for (int i = 0; i < plain; ++i) factors.push_back(DenseOperator::single_site(u));
  for (int i = 0; i < conjugated; ++i) factors.push_back(DenseOperator::single_site(u.conjugate()));
  return kron(factors);
}

}  // namespace

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const auto slash = token.find('/');
    auto number = [&](std::string_view s) {
      double x = 0.0;
      auto res = std::from_chars(s.data(), s.data() + s.size(), x);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw UsageError("not a number: '" + token + "'");
      return x;
    };
    if (slash == std::string::npos) {
      values.push_back(number(token));
    } else {
      const std::string_view view(token);
      const double den = number(view.substr(slash + 1));
      if (den == 0.0) throw UsageError("zero denominator in '" + token + "'");
      values.push_back(number(view.substr(0, slash)) / den);
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return values;
}

int cmd_verify_props(const RunConfig& config, const VerifyPropsArgs& args, std::ostream& out, std::ostream& err) {
  config.validate();
  const auto& groups = verification_groups();
  for (const auto& g : args.only) {
    if (std::find(groups.begin(), groups.end(), g) == groups.end()) {
      throw UsageError("--only: unknown group '" + g + "'");
    }
  }
  require_positive("--samples", args.samples);
  if (args.max_k < 2) throw UsageError("--max-k must be at least 2");
  if (args.dims.empty()) throw UsageError("--dims is empty");
  for (int d : args.dims) {
    require_positive("--dims", d);
    // Largest kernel in the suite acts on max_k + 1 sites.
    config.require_dimension(d, args.max_k + 1);
  }

  VerificationOptions options;
  options.seed = config.seed;
  options.tolerance = config.tolerance;
  options.samples = args.samples;
  options.max_k = args.max_k;
  options.dims = args.dims;
  options.only = args.only;
  options.parallelism = config.parallelism;
  const VerificationReport report = run_verification(options);

  if (config.format == OutputFormat::kJson) {
    out << report_to_json(report).dump(2) << "\n";
  } else if (config.format == OutputFormat::kCsv) {
    out << "group,case,max_deviation,status\n";
    for (const auto& c : report.cases) {
      out << c.group << ",\"" << c.name << "\"," << format_double(c.max_deviation) << "," << status(c.passed) << "\n";
    }
  } else {
    std::size_t width = 4;
    for (const auto& c : report.cases) width = std::max(width, c.name.size());
    for (const auto& c : report.cases) {
      out << std::left << std::setw(11) << c.group << std::setw(static_cast<int>(width) + 2) << c.name
          << std::setw(24) << format_double(c.max_deviation) << status(c.passed) << "\n";
    }
    out << "\n";
    for (const auto& g : groups) {
      const bool ran = std::any_of(report.cases.begin(), report.cases.end(),
                                   [&](const VerificationCase& c) { return c.group == g; });
      if (!ran) continue;
      out << std::left << std::setw(11) << g << "max deviation " << format_double(report.max_deviation(g)) << "\n";
    }
  }
  const std::size_t failed = static_cast<std::size_t>(std::count_if(
      report.cases.begin(), report.cases.end(), [](const VerificationCase& c) { return !c.passed; }));
  if (failed > 0) {
    err << failed << " of " << report.cases.size() << " cases above tolerance " << format_double(config.tolerance)
        << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_projector(const RunConfig& config, const ProjectorArgs& args, std::ostream& out, std::ostream& err) {
  config.validate();
  require_positive("--n", args.n);
  require_positive("--k", args.k);
  require_positive("--d", args.d);
  require_positive("--samples", args.samples);
  if (args.n < 2 * args.k) throw UsageError("--n must be at least 2k");
  if (args.emit_map < 0 || args.emit_map >= args.n) throw UsageError("--emit-map takes 1..n-1 inputs");
  const Partition mu = parse_flag("--mu", [&] { return parse_partition(args.mu); });
  const Partition alpha = parse_flag("--alpha", [&] { return parse_partition(args.alpha); });
  config.require_dimension(args.d, args.n);

  double g = 0.0;
  WbaElement f(args.n);
  try {
    g = gamma(mu, alpha, args.n, args.k, args.d);
    f = f_projector(mu, alpha, args.n, args.k, args.d);
  } catch (const Error& e) {
    err << "inadmissible labels: " << e.what() << "\n";
    return kExitFailure;
  }
  const std::size_t guard = config.effective_size_guard();
  const DenseOperator fd = realize(f, args.d, guard);
  const double idempotence = sup_distance(fd * fd, fd);

  Rng rng(config.seed);
  double commutant = 0.0;
  for (int i = 0; i < kHaarSamples; ++i) {
    const DenseOperator w = unitary_tensor(random_unitary(args.d, rng), args.n - args.k, args.k);
    commutant = std::max(commutant, sup_distance(fd * w, w * fd));
  }

  Json orthogonality = Json::array();
  double worst_orthogonality = 0.0;
  for (const auto& label : admissible_projectors(args.n, args.k, args.d)) {
    if (label.mu == mu && label.alpha == alpha) continue;
    const DenseOperator other = realize(f_projector(label.mu, label.alpha, args.n, args.k, args.d), args.d, guard);
    const double r = sup_norm(fd * other);
    worst_orthogonality = std::max(worst_orthogonality, r);
    orthogonality.push_back({{"mu", label.mu.to_string()}, {"alpha", label.alpha.to_string()}, {"residual", r}});
  }

  Json map_report;
  bool map_ok = true;
  if (args.emit_map > 0) {
    const int n_in = args.emit_map;
    const MapSpec spec{f, n_in, args.n - n_in, args.d};
    // The two closed forms exist for the n = 4 mixed projector only.
    const bool has_closed_form = args.n == 4 && args.k == 1 && args.d == 2 && mu == Partition({2, 1}) &&
                                 alpha == Partition({2}) && (n_in == 2 || n_in == 3);
    double min_output = std::numeric_limits<double>::infinity();
    double closed_dev = 0.0;
    double truncated_dev = 0.0;
    for (int s = 0; s < args.samples; ++s) {
      std::vector<DenseOperator> inputs;
      for (int i = 0; i < n_in; ++i) inputs.push_back(random_psd(args.d, 1, rng));
      const DenseOperator y = evaluate_oracle(spec, inputs, guard);
      min_output = std::min(min_output, min_eigenvalue(y));
      if (has_closed_form) {
        const Matrix& a = inputs[0].matrix();
        const Matrix& b = inputs[1].matrix();
        if (n_in == 2) {
          closed_dev = std::max(closed_dev, sup_distance(lambda_2to2(a, b), y));
          truncated_dev = std::max(truncated_dev, sup_distance(lambda_2to2_truncated(a, b), y));
        } else {
          const Matrix& c = inputs[2].matrix();
          closed_dev = std::max(closed_dev, sup_distance(lambda_3to1(a, b, c), y));
          truncated_dev = std::max(truncated_dev, sup_distance(lambda_3to1_truncated(a, b, c), y));
        }
      }
    }
    map_ok = min_output >= -kPsdFloor && (!has_closed_form || closed_dev < config.tolerance);
    map_report = {{"inputs", n_in}, {"outputs", args.n - n_in}, {"samples", args.samples},
                  {"min_output_eigenvalue", min_output}};
    if (has_closed_form) {
      map_report["closed_form_deviation"] = closed_dev;
      map_report["nine_term_deviation"] = truncated_dev;
    }
  }

  if (config.format == OutputFormat::kJson) {
    Json j = {{"n", args.n},
              {"k", args.k},
              {"d", args.d},
              {"mu", mu.to_string()},
              {"alpha", alpha.to_string()},
              {"gamma", g},
              {"terms", f.size()},
              {"element", element_to_json(f)},
              {"trace", fd.trace().real()},
              {"idempotence_residual", idempotence},
              {"commutant_residual", commutant},
              {"orthogonality", orthogonality}};
    if (args.emit_map > 0) j["map"] = map_report;
    out << j.dump(2) << "\n";
  } else {
    out << "F_" << mu.to_string() << "(" << alpha.to_string() << ") n=" << args.n << " k=" << args.k
        << " d=" << args.d << "\n";
    out << "gamma " << format_double(g) << "\n";
    out << "terms " << f.size() << "\n";
    out << f.to_string();
    out << "trace " << format_double(fd.trace().real()) << "\n";
    out << "idempotence_residual " << format_double(idempotence) << "\n";
    out << "commutant_residual " << format_double(commutant) << "\n";
    out << "orthogonality_residual " << format_double(worst_orthogonality) << "\n";
    if (args.emit_map > 0) {
      out << "map " << args.emit_map << " -> " << args.n - args.emit_map << " min_output_eigenvalue "
          << format_double(map_report["min_output_eigenvalue"].get<double>()) << "\n";
      if (map_report.contains("closed_form_deviation")) {
        out << "closed_form_deviation " << format_double(map_report["closed_form_deviation"].get<double>()) << "\n";
        out << "nine_term_deviation " << format_double(map_report["nine_term_deviation"].get<double>()) << "\n";
      }
    }
  }
  if (!map_ok) {
    err << "induced map check failed\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_scan_bcs(const RunConfig& config, const ScanBcsArgs& args, std::ostream& out, std::ostream& err) {
  config.validate();
  if (args.d < 3) throw UsageError("--d must be at least 3");
  require_positive("--restarts", args.restarts);
  require_positive("--iterations", args.iterations);
  const ScanRange alpha = parse_flag("--alpha", [&] { return parse_scan_range(args.alpha); });
  const ScanRange beta = parse_flag("--beta", [&] { return parse_scan_range(args.beta); });
  config.require_dimension(args.d, 3);

  SearchBudget budget;
  budget.seed = config.seed;
  budget.restarts = args.restarts;
  budget.iterations = args.iterations;
  budget.parallelism = config.parallelism;
  const std::vector<ScanRow> rows = scan_bcs_region(alpha, beta, args.d, budget);

  // A PSD verdict certifies positivity and a violating product state
  // certifies the opposite; either one disagreeing with the analytic curve
  // is a contradiction.
  Json bad = Json::array();
  for (const auto& r : rows) {
    const bool certified_positive = r.classification == Classification::kPsd;
    const bool certified_negative = r.classification == Classification::kNotBlockPositive;
    if ((r.analytic_positive && certified_negative) || (!r.analytic_positive && certified_positive)) {
      bad.push_back({{"alpha", r.alpha},
                     {"beta", r.beta},
                     {"d", args.d},
                     {"analytic_positive", r.analytic_positive},
                     {"min_eig", r.min_eig},
                     {"product_min", r.product_min},
                     {"class", to_string(r.classification)}});
    }
  }
  if (!bad.empty()) {
    err << "scan contradicts the analytic condition at " << bad.size() << " points\n" << bad.dump(2) << "\n";
    return kExitFailure;
  }

  std::string content;
  if (config.format == OutputFormat::kJson) {
    Json j = Json::array();
    for (const auto& r : rows) {
      j.push_back({{"alpha", r.alpha},
                   {"beta", r.beta},
                   {"analytic_positive", r.analytic_positive},
                   {"min_eig", r.min_eig},
                   {"product_min", r.product_min},
                   {"class", to_string(r.classification)}});
    }
    content = j.dump(2) + "\n";
  } else {
    std::string s = "alpha,beta,analytic_positive,min_eig,product_min,class\n";
    for (const auto& r : rows) {
      s += format_double(r.alpha) + "," + format_double(r.beta) + "," + (r.analytic_positive ? "1" : "0") + "," +
           format_double(r.min_eig) + "," + format_double(r.product_min) + "," + to_string(r.classification) + "\n";
    }
    content = std::move(s);
  }
  if (args.out.empty()) {
    out << content;
  } else {
    write_file_atomically(args.out, content);
    err << "wrote " << rows.size() << " rows to " << args.out << "\n";
  }
  return kExitOk;
}

namespace {

struct PptCheck {
  WernerParams params;
  PptConditions conditions;
  bool valid = false;
  double min_eig = 0.0;
  bool consistent = true;
};

PptCheck check_ppt(const WernerParams& params) {
  PptCheck c;
  c.params = params;
  c.valid = params.is_valid_state();
  c.conditions = werner_ppt_conditions(params.rs);
  c.min_eig = min_eigenvalue(partial_transpose(werner_state(params), SiteSubset::range(1, 1)));
  c.consistent = c.conditions.overall == (c.min_eig >= -kPsdFloor);
  return c;
}

Json ppt_to_json(const PptCheck& c) {
  Json conds = Json::array();
  for (bool b : c.conditions.conditions) conds.push_back(b);
  return {{"params", werner_to_json(c.params)},
          {"valid_state", c.valid},
          {"conditions", conds},
          {"overall", c.conditions.overall},
          {"min_eig_t1", c.min_eig},
          {"consistent", c.consistent}};
}

}  // namespace

int cmd_werner_ppt(const RunConfig& config, const WernerPptArgs& args, std::ostream& out, std::ostream& err) {
  config.validate();
  if (args.d < 2) throw UsageError("--d must be at least 2");
  if (args.random < 0) throw UsageError("--random must be non-negative");
  if (args.random == 0 && args.r.empty()) throw UsageError("give --r or --random");
  config.require_dimension(args.d, 3);

  if (args.random > 0) {
    Rng rng(config.seed);
    int ppt = 0;
    int contradictions = 0;
    Json first;
    for (int i = 0; i < args.random; ++i) {
      const PptCheck c = check_ppt(random_valid_werner(args.d, rng));
      ppt += c.conditions.overall ? 1 : 0;
      if (!c.consistent) {
        if (contradictions == 0) first = ppt_to_json(c);
        ++contradictions;
      }
    }
    Json j = {{"d", args.d}, {"samples", args.random}, {"ppt", ppt}, {"contradictions", contradictions}};
    if (contradictions > 0) j["first_contradiction"] = first;
    out << j.dump(2) << "\n";
    if (contradictions > 0) {
      err << contradictions << " states where the inequalities and the eigencheck disagree\n";
      return kExitFailure;
    }
    return kExitOk;
  }

  const std::vector<double> values = parse_number_list(args.r);
  if (values.size() != 6) throw UsageError("--r takes six numbers r+ r- r0 r1 r2 r3");
  std::array<double, 6> rs{};
  std::copy(values.begin(), values.end(), rs.begin());
  const PptCheck c = check_ppt(parse_flag("--r", [&] { return WernerParams::from_r(rs, args.d); }));
  const Json j = ppt_to_json(c);
  out << j.dump(2) << "\n";
  if (c.valid && !c.consistent) {
    err << "inequalities and eigencheck disagree on a valid state\n" << j.dump() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_ew_maps(const RunConfig& config, const EwMapsArgs& args, std::ostream& out, std::ostream& err) {
  config.validate();
  require_positive("--samples", args.samples);
  if (args.d < 2) throw UsageError("--d must be at least 2");
  config.require_dimension(args.d, 3);
  const auto& rows = werner_map_rows();
  std::vector<std::size_t> selected;
  if (args.row == "all") {
    for (std::size_t i = 0; i < rows.size(); ++i) selected.push_back(i);
  } else {
    const WernerMapRow wanted = parse_flag("--row", [&] { return parse_werner_map_row(args.row); });
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].name() == wanted.name()) selected.push_back(i);
    }
  }

  Json j = Json::array();
  bool ok = true;
  for (std::size_t i : selected) {
    // Seeded per row so a single row reproduces its line of the full table.
    std::seed_seq seq{config.seed, static_cast<std::uint64_t>(i)};
    Rng rng(seq);
    double worst = 0.0;
    for (int s = 0; s < args.samples; ++s) {
      const WernerParams params = random_valid_werner(args.d, rng);
      const Matrix a = random_matrix(args.d, 1, rng).matrix();
      const Matrix b = random_matrix(args.d, 1, rng).matrix();
      worst = std::max(worst, sup_distance(eggeling_werner_map(rows[i], params, a, b),
                                           eggeling_werner_trace_form(rows[i], params.alphas, a, b)));
    }
    const bool passed = worst < config.tolerance;
    ok = ok && passed;
    if (config.format == OutputFormat::kJson) {
      j.push_back({{"row", rows[i].name()}, {"max_deviation", worst}, {"passed", passed}});
    } else {
      out << std::left << std::setw(6) << rows[i].name() << std::setw(24) << format_double(worst) << status(passed)
          << "\n";
    }
  }
  if (config.format == OutputFormat::kJson) out << j.dump(2) << "\n";
  if (!ok) {
    err << "closed form differs from the trace formula beyond " << format_double(config.tolerance) << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_compose(const RunConfig& config, const ComposeArgs& args, std::ostream& out, std::ostream& err) {
  config.validate();
  if (args.n < 0 || args.d < 0) throw UsageError("--n and --d must be non-negative");
  int n = args.n;
  WbaDiagram a = parse_flag("first diagram", [&] { return parse_diagram(args.first, n); });
  WbaDiagram b = parse_flag("second diagram", [&] { return parse_diagram(args.second, n); });
  if (n == 0 && a.n() != b.n()) {
    n = std::max(a.n(), b.n());
    a = a.extended(n);
    b = b.extended(n);
  }
  const DiagramProduct p = compose_diagrams(a, b);

  Json j = {{"first", a.to_string()}, {"second", b.to_string()}, {"n", a.n()},
            {"product", p.diagram.to_string()}, {"loops", p.loops}};
  bool ok = true;
  if (args.d > 0) {
    config.require_dimension(args.d, a.n());
    const std::size_t guard = config.effective_size_guard();
    const DenseOperator lhs = realize(a, args.d, guard) * realize(b, args.d, guard);
    const DenseOperator rhs = std::pow(static_cast<double>(args.d), p.loops) * realize(p.diagram, args.d, guard);
    const double dev = sup_distance(lhs, rhs);
    j["d"] = args.d;
    j["dense_deviation"] = dev;
    ok = dev == 0.0;
  }
  if (config.format == OutputFormat::kJson) {
    out << j.dump(2) << "\n";
  } else {
    out << a.to_string() << " * " << b.to_string() << " = ";
    if (p.loops > 0) out << "d^" << p.loops << " ";
    out << p.diagram.to_string() << "\n";
    out << "loops " << p.loops << "\n";
    if (args.d > 0) out << "dense_deviation " << format_double(j["dense_deviation"].get<double>()) << "\n";
  }
  if (!ok) {
    err << "dense product disagrees with the diagram product\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace wba::cli
