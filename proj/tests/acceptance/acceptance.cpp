// One PASS/FAIL line per acceptance criterion. Tolerances are fixed here and
// the process exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wba/algebra/diagram.hpp"
#include "wba/algebra/element.hpp"
#include "wba/algebra/projectors.hpp"
#include "wba/dense/operations.hpp"
#include "wba/dense/random.hpp"
#include "wba/entanglement/bcs.hpp"
#include "wba/entanglement/block_positivity.hpp"
#include "wba/entanglement/werner.hpp"
#include "wba/entanglement/werner_maps.hpp"
#include "wba/maps/oracle.hpp"
#include "wba/maps/projector_maps.hpp"
#include "wba/maps/verification.hpp"
#include "wba/sym/representation.hpp"

using namespace wba;

namespace {

constexpr double kMapTol = 1e-10;          // closed form vs oracle
constexpr double kProjectorTol = 1e-10;    // idempotence, orthogonality
constexpr double kCommutantTol = 1e-9;     // [F, U..U Ubar..Ubar]
constexpr double kPsdFloor = 1e-8;         // output / partial-transpose eigenvalues
constexpr double kBandFloor = 1e-7;        // see-saw product minimum
constexpr double kThresholdTol = 1e-12;    // threshold against its closed formula
constexpr double kRoundedThresholdTol = 1e-3;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::vector<WbaDiagram> all_s3_diagrams() {
  std::vector<WbaDiagram> out;
  for (const auto& p : enumerate_group(3))
    for (unsigned mask = 0; mask < 8; ++mask) out.push_back(WbaDiagram::from_permutation(p, SiteSubset::from_mask(mask, 3)));
  return out;
}

Outcome criterion1() {
  const auto diagrams = all_s3_diagrams();
  int pairs = 0, bad = 0;
  for (int d : {2, 3}) {
    std::vector<Matrix> dense;
    for (const auto& g : diagrams) {
      dense.push_back(realize(g, d).matrix());
      if (dense.back() != oracle::realize(g, d)) ++bad;
    }
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
      for (std::size_t j = 0; j < diagrams.size(); ++j) {
        const auto p = compose_diagrams(diagrams[i], diagrams[j]);
        const Matrix rhs = std::pow(static_cast<double>(d), p.loops) * realize(p.diagram, d).matrix();
        if (dense[i] * dense[j] != rhs) ++bad;
        ++pairs;
      }
    }
  }
  return {bad == 0, std::to_string(pairs) + " products exact, " + std::to_string(bad) + " mismatches"};
}

Outcome criterion2() {
  const WbaDiagram t = parse_diagram("(12)^T{2}");
  const auto p = compose_diagrams(t, t);
  bool ok = p.loops == 1 && p.diagram == t;
  for (int d : {2, 3, 4}) {
    const DenseOperator r = realize(t, d);
    ok = ok && (r * r).matrix() == (static_cast<double>(d) * r).matrix();
  }
  return {ok, "loops=" + std::to_string(p.loops) + " product " + p.diagram.to_string()};
}

Outcome criterion3() {
  VerificationOptions options;  // k <= 5, d in {2,3}, 20 samples, seed 1
  options.tolerance = kMapTol;
  const auto report = run_verification(options);
  std::set<std::string> names;
  for (const auto& c : report.cases) names.insert(c.name);
  bool literal = true;
  for (const char* need : {"four-to-one", "transposed swap A^T B", "reshuffled product", "one-to-two reshuffle",
                           "three-to-two"}) {
    for (int d : {2, 3}) literal = literal && names.count(std::string(need) + " d=" + std::to_string(d)) == 1;
  }
  double worst = 0.0;
  for (const auto& g : verification_groups()) worst = std::max(worst, report.max_deviation(g));
  return {report.all_passed() && literal,
          std::to_string(report.cases.size()) + " cases, max deviation " + fmt(worst) + (literal ? "" : ", identity missing")};
}

Outcome criterion4() {
  Rng rng(4);
  double idem = 0.0, orth = 0.0, comm = 0.0;
  bool gamma_ok = true;
  int count = 0;
  for (const auto& [n, k] : {std::pair{4, 1}, std::pair{5, 2}}) {
    const int d = 2;
    const auto labels = admissible_projectors(n, k, d);
    std::vector<DenseOperator> dense;
    for (const auto& l : labels) dense.push_back(realize(f_projector(l.mu, l.alpha, n, k, d), d));
    count += static_cast<int>(labels.size());
    std::vector<Matrix> unitaries;
    for (int s = 0; s < 20; ++s) {
      const Matrix u = random_unitary(d, rng);
      std::vector<Matrix> f;
      for (int t = 0; t < n - k; ++t) f.push_back(u);
      for (int t = 0; t < k; ++t) f.push_back(u.conjugate());
      unitaries.push_back(oracle::kron_all(f));
    }
    for (std::size_t i = 0; i < dense.size(); ++i) {
      idem = std::max(idem, sup_distance(dense[i] * dense[i], dense[i]));
      for (std::size_t j = 0; j < dense.size(); ++j)
        if (i != j) orth = std::max(orth, sup_norm(dense[i] * dense[j]));
      for (const auto& w : unitaries) {
        comm = std::max(comm, (dense[i].matrix() * w - w * dense[i].matrix()).cwiseAbs().maxCoeff());
      }
    }
  }
  gamma_ok = gamma(Partition({2, 1}), Partition({2}), 4, 1, 2) == 1.0 &&
             gamma(Partition({2, 1}), Partition({1}), 5, 2, 2) == 3.0 && admissible_projectors(5, 2, 2).size() == 2;
  const bool ok = idem < kProjectorTol && orth < kProjectorTol && comm < kCommutantTol && gamma_ok;
  return {ok, std::to_string(count) + " projectors, idempotence " + fmt(idem) + ", orthogonality " + fmt(orth) +
                  ", commutant " + fmt(comm) + (gamma_ok ? ", gamma 1 and 3" : ", gamma mismatch")};
}

Outcome criterion5() {
  Rng rng(5);
  const WbaElement f = mixed_projector_n4();
  double dev = 0.0, nine_term = 0.0, min_eig = 1e300;
  for (int s = 0; s < 20; ++s) {
    const DenseOperator a = random_psd(2, 1, rng);
    const DenseOperator b = random_psd(2, 1, rng);
    const DenseOperator c = random_psd(2, 1, rng);
    const std::vector<DenseOperator> two{a, b}, three{a, b, c};
    const DenseOperator y2 = evaluate_oracle(MapSpec{f, 2, 2, 2}, two);
    const DenseOperator y3 = evaluate_oracle(MapSpec{f, 3, 1, 2}, three);
    const DenseOperator c2 = lambda_2to2(a.matrix(), b.matrix());
    const DenseOperator c3 = lambda_3to1(a.matrix(), b.matrix(), c.matrix());
    dev = std::max({dev, sup_distance(c2, y2), sup_distance(c3, y3)});
    nine_term = std::max({nine_term, sup_distance(lambda_2to2_truncated(a.matrix(), b.matrix()), y2),
                          sup_distance(lambda_3to1_truncated(a.matrix(), b.matrix(), c.matrix()), y3)});
    min_eig = std::min({min_eig, min_eigenvalue(c2), min_eigenvalue(c3)});
  }
  return {dev < kMapTol && min_eig >= -kPsdFloor,
          "deviation " + fmt(dev) + ", min output eigenvalue " + fmt(min_eig) +
              " (nine-term expansion deviates by " + fmt(nine_term) + ")"};
}

Outcome criterion6() {
  const double beta = -0.1;
  const double thr = bcs_threshold(beta, 3);
  const double formula = (-(2 + 3 * beta) + std::sqrt(9 * beta * beta - 4 * beta + 4)) / 2;
  SearchBudget budget;  // 64 restarts
  const PositivityVerdict v = check_block_positive(bcs_kernel(0.25, beta, 3), parse_partition_spec("1|23"), budget);
  const bool ok = std::abs(thr - formula) < kThresholdTol && std::abs(thr - 0.21) < kRoundedThresholdTol &&
                  v.classification == Classification::kWitnessCandidate && v.min_eig < 0 &&
                  v.product_min_estimate >= -kBandFloor;
  return {ok, "threshold " + std::to_string(thr) + ", " + to_string(v.classification) + ", min eig " + fmt(v.min_eig) +
                  ", product min " + fmt(v.product_min_estimate)};
}

Outcome criterion7() {
  Rng rng(7);
  int contradictions = 0, ppt = 0;
  const int samples = 500;
  for (int i = 0; i < samples; ++i) {
    const WernerParams p = random_valid_werner(3, rng);
    const bool eig = min_eigenvalue(partial_transpose(werner_state(p), SiteSubset{1})) >= -kPsdFloor;
    ppt += eig ? 1 : 0;
    if (eig != werner_ppt_conditions(p.rs).overall) ++contradictions;
  }
  return {contradictions == 0, std::to_string(samples) + " states (" + std::to_string(ppt) + " PPT), " +
                                   std::to_string(contradictions) + " contradictions"};
}

Outcome criterion8() {
  Rng rng(8);
  auto row = [](const char* name) { return parse_werner_map_row(name); };
  double table = 0.0, sym = 0.0;
  for (int i = 0; i < 50; ++i) {
    const WernerParams p = random_valid_werner(3, rng);
    const Matrix a = random_matrix(3, 1, rng).matrix();
    const Matrix b = random_matrix(3, 1, rng).matrix();
    for (const auto& r : werner_map_rows()) {
      table = std::max(table, sup_distance(eggeling_werner_map(r, p, a, b), eggeling_werner_trace_form(r, p.alphas, a, b)));
    }
    const Matrix at = a.transpose(), bt = b.transpose();
    sym = std::max({sym, sup_distance(eggeling_werner_map(row("f3"), p, at), eggeling_werner_map(row("f13"), p, a)),
                    sup_distance(eggeling_werner_map(row("f2"), p, at), eggeling_werner_map(row("f12"), p, a)),
                    sup_distance(eggeling_werner_map(row("g13"), p, at, bt), eggeling_werner_map(row("g23"), p, a, b)),
                    sup_distance(eggeling_werner_map(row("g1"), p, at, bt), eggeling_werner_map(row("g2"), p, a, b))});
  }
  return {table < kMapTol && sym < kMapTol, "12 rows x 50, deviation " + fmt(table) + ", symmetries " + fmt(sym)};
}

Outcome criterion9() {
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    const auto group = enumerate_group(n);
    const auto irreps = partitions_of(n);
    for (const auto& a : irreps) {
      for (const auto& b : irreps) {
        long long s = 0;
        for (const auto& g : group) s += character(a, g) * character(b, g);
        ok = ok && s == (a == b ? factorial(n) : 0);
      }
    }
    for (int d = 1; d <= 3; ++d) {
      long long s = 0;
      for (const auto& a : irreps) s += schur_weyl_multiplicity(a, d) * irrep_dimension(a);
      ok = ok && s == static_cast<long long>(std::pow(d, n));
    }
  }
  double formal = 0.0, dense = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const auto irreps = partitions_of(n);
    GroupAlgebraElement total(n);
    for (const auto& a : irreps) {
      const auto pa = young_projector(a);
      formal = std::max(formal, (pa * pa).distance(pa));
      for (const auto& b : irreps)
        if (!(a == b)) formal = std::max(formal, (pa * young_projector(b)).distance(GroupAlgebraElement(n)));
      total += pa;
    }
    formal = std::max(formal, total.distance(GroupAlgebraElement::identity(n)));
    for (int d : {2, 3}) {
      std::vector<DenseOperator> p;
      DenseOperator sum(n, d);
      for (const auto& a : irreps) {
        p.push_back(realize(WbaElement::lift(young_projector(a), n), d));
        sum += p.back();
      }
      for (std::size_t i = 0; i < p.size(); ++i) {
        dense = std::max(dense, sup_distance(p[i] * p[i], p[i]));
        for (std::size_t j = 0; j < p.size(); ++j)
          if (i != j) dense = std::max(dense, sup_norm(p[i] * p[j]));
      }
      dense = std::max(dense, sup_distance(sum, DenseOperator::identity(n, d)));
    }
  }
  ok = ok && formal < kProjectorTol && dense < kProjectorTol;
  return {ok, "characters and dimension sums exact, Young projectors formal " + fmt(formal) + ", dense " + fmt(dense)};
}

struct Criterion {
  int number;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "diagram products match dense products", 10, criterion1},
      {2, "(12)^T{2} squared is d (12)^T{2}", 10, criterion2},
      {3, "cycle closed forms match the contraction oracle", 60, criterion3},
      {4, "mixed projectors are orthogonal idempotents in the commutant", 30, criterion4},
      {5, "n=4 projector maps match the oracle and are positive", 30, criterion5},
      {6, "BCS threshold and witness point", 60, criterion6},
      {7, "Werner partial-transpose inequalities match the eigencheck", 60, criterion7},
      {8, "Werner map closed forms match trace formulas", 30, criterion8},
      {9, "symmetric group characters and Young projectors", 30, criterion9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] criterion %d: %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.number, c.title, o.detail.c_str(), secs,
                in_time ? "" : ", over time budget");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
