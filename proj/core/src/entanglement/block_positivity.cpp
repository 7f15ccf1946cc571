#include "wba/entanglement/block_positivity.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "wba/dense/operations.hpp"
#include "wba/dense/random.hpp"
#include "wba/util/error.hpp"
#include "wba/util/parallel.hpp"

namespace wba {
namespace {

// For every full basis index, the block-local index of each block.
struct BlockLayout {
  int n = 0;
  int d = 0;
  std::vector<Eigen::Index> block_dim;
  std::vector<std::vector<Eigen::Index>> local;  // local[b][full]

  BlockLayout(const PartitionSpec& partition, int n_, int d_) : n(n_), d(d_) {
    const auto dim = static_cast<std::size_t>(checked_dimension(d, n));
    for (const auto& block : partition.blocks) {
      block_dim.push_back(static_cast<Eigen::Index>(checked_dimension(d, static_cast<int>(block.size()))));
      std::vector<Eigen::Index> idx(dim);
      for (std::size_t full = 0; full < dim; ++full) {
        const auto digits = unpack_index(full, n, d);
        Eigen::Index v = 0;
        for (int s : block) v = v * d + digits[static_cast<std::size_t>(s - 1)];
        idx[full] = v;
      }
      local.push_back(std::move(idx));
    }
  }

  Vector product(const std::vector<Vector>& factors) const {
    const auto dim = static_cast<Eigen::Index>(local.front().size());
    Vector psi(dim);
    for (Eigen::Index full = 0; full < dim; ++full) {
      Complex amp = 1.0;
      for (std::size_t b = 0; b < factors.size(); ++b) amp *= factors[b](local[b][static_cast<std::size_t>(full)]);
      psi(full) = amp;
    }
    return psi;
  }

  // Columns x of V: the product vector with block b replaced by basis state x.
  Matrix isometry(std::size_t b, const std::vector<Vector>& factors) const {
    const auto dim = static_cast<Eigen::Index>(local.front().size());
    Matrix v = Matrix::Zero(dim, block_dim[b]);
    for (Eigen::Index full = 0; full < dim; ++full) {
      Complex amp = 1.0;
      for (std::size_t c = 0; c < factors.size(); ++c)
        if (c != b) amp *= factors[c](local[c][static_cast<std::size_t>(full)]);
      v(full, local[b][static_cast<std::size_t>(full)]) = amp;
    }
    return v;
  }
};

double expectation(const Matrix& m, const Vector& psi) { return psi.dot(m * psi).real(); }

std::vector<Vector> random_factors(const BlockLayout& layout, Rng& rng) {
  std::vector<Vector> out;
  for (Eigen::Index dim : layout.block_dim) out.push_back(random_unit_vector(dim, rng));
  return out;
}

ProductSearchResult see_saw(const Matrix& m, const BlockLayout& layout, std::vector<Vector> factors,
                            const SearchBudget& budget) {
  double value = expectation(m, layout.product(factors));
  for (int it = 0; it < budget.iterations; ++it) {
    const double before = value;
    for (std::size_t b = 0; b < factors.size(); ++b) {
      const Matrix v = layout.isometry(b, factors);
      Matrix eff = v.adjoint() * m * v;
      eff = 0.5 * (eff + eff.adjoint()).eval();
      Eigen::SelfAdjointEigenSolver<Matrix> solver(eff);
      factors[b] = solver.eigenvectors().col(0).normalized();
      value = solver.eigenvalues()(0);
    }
    if (before - value < budget.convergence) break;
  }
  value = expectation(m, layout.product(factors));
  return {value, std::move(factors)};
}

}  // namespace

PartitionSpec PartitionSpec::singletons(int n) {
  PartitionSpec p;
  for (int s = 1; s <= n; ++s) p.blocks.push_back(SiteSubset{s});
  return p;
}

void PartitionSpec::validate(int n) const {
  std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
  for (const auto& block : blocks) {
    if (block.empty()) throw Error("partition has an empty block");
    block.check_range(n);
    for (int s : block)
      if (seen[static_cast<std::size_t>(s)]++) throw Error("site " + std::to_string(s) + " appears in two blocks");
  }
  for (int s = 1; s <= n; ++s)
    if (!seen[static_cast<std::size_t>(s)]) throw Error("partition " + to_string() + " misses site " + std::to_string(s));
}

std::string PartitionSpec::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += '|';
    const bool wide = blocks[b].max_site() > 9;
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i && wide) out += ',';
      out += std::to_string(blocks[b].sites()[i]);
    }
  }
  return out;
}

PartitionSpec parse_partition_spec(std::string_view text) {
  PartitionSpec p;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto bar = text.find('|', start);
    const auto piece = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    p.blocks.push_back(parse_site_subset(piece));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return p;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::kPsd: return "PSD";
    case Classification::kWitnessCandidate: return "WITNESS_CANDIDATE";
    case Classification::kNotBlockPositive: return "NOT_BLOCK_POSITIVE";
    case Classification::kInconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

double product_expectation(const DenseOperator& m, const PartitionSpec& partition, const std::vector<Vector>& factors) {
  partition.validate(m.n());
  const BlockLayout layout(partition, m.n(), m.d());
  if (factors.size() != partition.blocks.size()) throw Error("one factor per block required");
  for (std::size_t b = 0; b < factors.size(); ++b)
    if (factors[b].size() != layout.block_dim[b]) throw Error("factor dimension does not match its block");
  return expectation(m.matrix(), layout.product(factors));
}

ProductSearchResult minimize_over_products(const DenseOperator& m, const PartitionSpec& partition,
                                           const SearchBudget& budget) {
  partition.validate(m.n());
  if (!m.is_hermitian(1e-10 * std::max(1.0, sup_norm(m)))) throw Error("block-positivity needs a hermitian operator");
  const BlockLayout layout(partition, m.n(), m.d());
  const Matrix h = 0.5 * (m.matrix() + m.matrix().adjoint());

  ProductSearchResult best{std::numeric_limits<double>::infinity(), {}};
  {
    Rng rng(budget.seed);
    for (int s = 0; s < budget.random_samples; ++s) {
      auto factors = random_factors(layout, rng);
      const double v = expectation(h, layout.product(factors));
      if (v < best.value) best = {v, std::move(factors)};
    }
  }
  const int restarts = std::max(1, budget.restarts);
  std::vector<ProductSearchResult> runs(static_cast<std::size_t>(restarts));
  parallel_for(runs.size(), budget.parallelism, [&](std::size_t r) {
    std::seed_seq seq{budget.seed, static_cast<std::uint64_t>(r) + 1};
    Rng rng(seq);
    // Restart 0 refines the best random sample.
    auto start = r == 0 && !best.factors.empty() ? best.factors : random_factors(layout, rng);
    runs[r] = see_saw(h, layout, std::move(start), budget);
  });
  for (auto& run : runs)
    if (run.value < best.value) best = std::move(run);
  return best;
}

PositivityVerdict check_block_positive(const DenseOperator& m, const PartitionSpec& partition,
                                       const SearchBudget& budget) {
  partition.validate(m.n());
  PositivityVerdict verdict;
  verdict.min_eig = min_eigenvalue(m);
  if (verdict.min_eig >= -budget.eig_tol) {
    verdict.classification = Classification::kPsd;
    verdict.product_min_estimate = verdict.min_eig;
    return verdict;
  }
  auto search = minimize_over_products(m, partition, budget);
  verdict.product_min_estimate = search.value;
  if (search.value >= -budget.band) {
    verdict.classification = Classification::kWitnessCandidate;
  } else if (search.value < -2.0 * budget.band) {
    // Certificate is re-evaluated from scratch before it is trusted.
    const double check = product_expectation(m, partition, search.factors);
    verdict.classification = check < -budget.band ? Classification::kNotBlockPositive : Classification::kInconclusive;
  } else {
    verdict.classification = Classification::kInconclusive;
  }
  verdict.violating_product_state = std::move(search.factors);
  return verdict;
}

}  // namespace wba
