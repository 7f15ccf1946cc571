#include "wba/maps/verification.hpp"

#include <algorithm>
#include <functional>

#include "wba/algebra/diagram.hpp"
#include "wba/dense/operations.hpp"
#include "wba/dense/random.hpp"
#include "wba/maps/closed_forms.hpp"
#include "wba/maps/oracle.hpp"
#include "wba/util/error.hpp"
#include "wba/util/parallel.hpp"

namespace wba {
namespace {

using Sampler = std::function<double(Rng&)>;

struct Task {
  std::string group;
  std::string name;
  Sampler sample;
};

std::vector<DenseOperator> random_inputs(int count, int d, Rng& rng) {
  std::vector<DenseOperator> out;
  for (int i = 0; i < count; ++i) out.push_back(random_matrix(d, 1, rng));
  return out;
}

DenseOperator ident(int d) { return DenseOperator::identity(1, d); }

DenseOperator kernel_of(const std::string& text, int n, int d) { return realize(parse_diagram(text, n), d); }

std::string dir_name(CycleDirection dir) { return dir == CycleDirection::kForward ? "forward" : "backward"; }

void add_cycle_to_one(std::vector<Task>& tasks, const VerificationOptions& o) {
  for (int d : o.dims)
    for (int k = 2; k <= o.max_k; ++k)
      for (CycleDirection dir : {CycleDirection::kBackward, CycleDirection::kForward})
        for (int j = 1; j <= k; ++j) {
          const DenseOperator kernel = realize(WbaDiagram::from_permutation(cycle_permutation(dir, k), {j}), d);
          const SiteSubset traced =
              dir == CycleDirection::kBackward ? SiteSubset::range(1, k - 1) : SiteSubset::range(2, k);
          tasks.push_back({"cycle-to-one",
                           dir_name(dir) + " k=" + std::to_string(k) + " j=" + std::to_string(j) + " d=" + std::to_string(d),
                           [=](Rng& rng) {
                             const auto x = random_inputs(k, d, rng);
                             return sup_distance(evaluate_cycle_to_one(dir, j, x), contract(kernel, x, traced));
                           }});
        }
}

void add_cycle_subset(std::vector<Task>& tasks, const VerificationOptions& o) {
  for (int d : o.dims)
    for (int k = 2; k <= std::min(o.max_k, 4); ++k)
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        const SiteSubset s = SiteSubset::from_mask(mask, k);
        const DenseOperator kernel =
            realize(WbaDiagram::from_permutation(cycle_permutation(CycleDirection::kBackward, k), s), d);
        tasks.push_back({"cycle-subset", "k=" + std::to_string(k) + " S=" + s.to_string() + " d=" + std::to_string(d),
                         [=](Rng& rng) {
                           const auto x = random_inputs(k, d, rng);
                           return sup_distance(evaluate_cycle_subset(s, x),
                                               contract(kernel, x, SiteSubset::range(1, k - 1)));
                         }});
      }
}

DenseOperator one_to_many_oracle(const DenseOperator& kernel, const DenseOperator& a, int k) {
  std::vector<DenseOperator> x{a};
  for (int t = 1; t < k; ++t) x.push_back(ident(a.d()));
  return contract(kernel, x, {1});
}

void add_one_to_many(std::vector<Task>& tasks, const VerificationOptions& o, bool via_pi) {
  for (int d : o.dims)
    for (int k = 2; k <= o.max_k; ++k) {
      const DenseOperator kernel =
          realize(WbaDiagram::from_permutation(cycle_permutation(CycleDirection::kForward, k), {k}), d);
      tasks.push_back({via_pi ? "one-to-many-pi" : "one-to-many", "k=" + std::to_string(k) + " d=" + std::to_string(d),
                       [=](Rng& rng) {
                         const DenseOperator a = random_matrix(d, 1, rng);
                         const DenseOperator truth = one_to_many_oracle(kernel, a, k);
                         if (!via_pi) return sup_distance(evaluate_one_to_many(a, k), truth);
                         const DenseOperator pi_path = evaluate_one_to_many_via_pi(a, k);
                         return std::max(sup_distance(pi_path, truth),
                                         sup_distance(pi_path, evaluate_one_to_many(a, k)));
                       }});
    }
}

void add_identities(std::vector<Task>& tasks, const VerificationOptions& o) {
  for (int d : o.dims) {
    const std::string suffix = " d=" + std::to_string(d);
    tasks.push_back({"identities", "swap trick" + suffix, [=](Rng& rng) {
                       const auto x = random_inputs(2, d, rng);
                       const Complex lhs = contract(kernel_of("(1 2)", 2, d), x, {1, 2})(0, 0);
                       return std::abs(lhs - (x[0].matrix() * x[1].matrix()).trace());
                     }});
    tasks.push_back({"identities", "cycle product ABC" + suffix, [=](Rng& rng) {
                       const auto x = random_inputs(3, d, rng);
                       const Matrix abc = x[0].matrix() * x[1].matrix() * x[2].matrix();
                       return sup_distance(contract(kernel_of("(3 2 1)", 3, d), x, {1, 2}),
                                           DenseOperator::single_site(abc));
                     }});
    tasks.push_back({"identities", "transposed swap A^T B" + suffix, [=](Rng& rng) {
                       const auto x = random_inputs(2, d, rng);
                       return sup_distance(contract(kernel_of("(1 2)^T{1}", 2, d), x, {1}),
                                           DenseOperator::single_site(x[0].matrix().transpose() * x[1].matrix()));
                     }});
    tasks.push_back({"identities", "one-to-two reshuffle" + suffix, [=](Rng& rng) {
                       const DenseOperator a = random_matrix(d, 1, rng);
                       const std::vector<DenseOperator> x{a, ident(d), ident(d)};
                       return sup_distance(contract(kernel_of("(1 2 3)^T{2}", 3, d), x, {1}),
                                           reshuffle_bipartite(kron(ident(d), a)));
                     }});
    tasks.push_back({"identities", "reshuffled product" + suffix, [=](Rng& rng) {
                       const DenseOperator a = random_matrix(d, 2, rng);
                       const DenseOperator b = random_matrix(d, 2, rng);
                       const DenseOperator lhs =
                           reshuffle_bipartite(reshuffle_bipartite(a) * reshuffle_bipartite(b));
                       const DenseOperator rhs = partial_trace(kernel_of("(2 3)^T{3}", 4, d) * kron(a, b), {2, 3});
                       return sup_distance(lhs, rhs);
                     }});
    tasks.push_back({"identities", "four-to-one" + suffix, [=](Rng& rng) {
                       const auto x = random_inputs(5, d, rng);
                       const Matrix expect = (x[0].matrix() * x[1].matrix() * x[2].matrix() * x[3].matrix())
                                                 .transpose() *
                                             x[4].matrix();
                       return sup_distance(contract(kernel_of("(5 4 3 2 1)^T{5}", 5, d), x, {1, 2, 3, 4}),
                                           DenseOperator::single_site(expect));
                     }});
    tasks.push_back({"identities", "three-to-two" + suffix, [=](Rng& rng) {
                       auto x = random_inputs(3, d, rng);
                       const Matrix inner = x[2].matrix() * x[1].matrix().transpose() * x[0].matrix();
                       const DenseOperator expect =
                           partial_transpose(reshuffle_bipartite(kron(DenseOperator::single_site(inner), ident(d))), {2});
                       x.push_back(ident(d));
                       x.push_back(ident(d));
                       return sup_distance(contract(kernel_of("(1 2 3 4 5)^T{2}", 5, d), x, {1, 2, 3}), expect);
                     }});
    tasks.push_back({"identities", "one-to-three chain" + suffix, [=](Rng& rng) {
                       const DenseOperator a = random_matrix(d, 1, rng);
                       const std::vector<DenseOperator> x{a, ident(d), ident(d), ident(d)};
                       const DenseOperator base = kron(kron(a, ident(d)), ident(d));
                       const DenseOperator expect = reshuffle_sites(reshuffle_sites(base, 3, 2), 3, 1);
                       return sup_distance(contract(kernel_of("(1 2 3 4)^T{4}", 4, d), x, {1}), expect);
                     }});
  }
}

}  // namespace

const std::vector<std::string>& verification_groups() {
  static const std::vector<std::string> groups{"cycle-to-one", "cycle-subset", "one-to-many", "one-to-many-pi", "identities"};
  return groups;
}

bool VerificationReport::all_passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.passed; });
}

double VerificationReport::max_deviation(const std::string& group) const {
  double worst = 0.0;
  for (const auto& c : cases)
    if (c.group == group) worst = std::max(worst, c.max_deviation);
  return worst;
}

VerificationReport run_verification(const VerificationOptions& options) {
  if (options.samples < 1) throw Error("verification needs at least one sample");
  if (options.max_k < 2) throw Error("verification needs max_k >= 2");
  for (const auto& g : options.only)
    if (std::find(verification_groups().begin(), verification_groups().end(), g) == verification_groups().end()) {
      throw Error("unknown verification group '" + g + "'");
    }
  auto wanted = [&](const std::string& g) {
    return options.only.empty() || std::find(options.only.begin(), options.only.end(), g) != options.only.end();
  };
  std::vector<Task> tasks;
  if (wanted("cycle-to-one")) add_cycle_to_one(tasks, options);
  if (wanted("cycle-subset")) add_cycle_subset(tasks, options);
  if (wanted("one-to-many")) add_one_to_many(tasks, options, false);
  if (wanted("one-to-many-pi")) add_one_to_many(tasks, options, true);
  if (wanted("identities")) add_identities(tasks, options);

  VerificationReport report;
  report.cases.resize(tasks.size());
  parallel_for(tasks.size(), options.parallelism, [&](std::size_t i) {
    std::seed_seq seq{options.seed, static_cast<std::uint64_t>(i)};
    Rng rng(seq);
    double worst = 0.0;
    for (int s = 0; s < options.samples; ++s) worst = std::max(worst, tasks[i].sample(rng));
    report.cases[i] = {tasks[i].group, tasks[i].name, worst, worst <= options.tolerance};
  });
  return report;
}

}  // namespace wba
