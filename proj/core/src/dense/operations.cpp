#include "wba/dense/operations.hpp"

#include <Eigen/Eigenvalues>
#include <string>

#include "wba/util/error.hpp"

namespace wba {
namespace {

std::vector<std::size_t> strides(int n, int d) {
  std::vector<std::size_t> s(static_cast<std::size_t>(n));
  std::size_t w = 1;
  for (int t = n - 1; t >= 0; --t) {
    s[static_cast<std::size_t>(t)] = w;
    w *= static_cast<std::size_t>(d);
  }
  return s;
}

// Offsets sum_t digit_t * stride(site_t) for every digit assignment of `sites`.
std::vector<std::size_t> site_offsets(const std::vector<int>& sites, int n, int d) {
  const auto st = strides(n, d);
  std::vector<std::size_t> out{0};
  for (int s : sites) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * static_cast<std::size_t>(d));
    for (std::size_t base : out)
      for (int a = 0; a < d; ++a) next.push_back(base + static_cast<std::size_t>(a) * st[static_cast<std::size_t>(s - 1)]);
    out = std::move(next);
  }
  return out;
}

void check_site(int site, int n, const char* what) {
  if (site < 1 || site > n) {
    throw Error(std::string(what) + " site " + std::to_string(site) + " out of range 1.." + std::to_string(n));
  }
}

double hermiticity_defect(const Matrix& m) {
  return sup_norm(m - m.adjoint()) / std::max(1.0, sup_norm(m));
}

}  // namespace

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  if (a.d() != b.d()) throw Error("kron: local dimensions differ");
  const Eigen::Index ra = a.dim();
  const Eigen::Index rb = b.dim();
  Matrix out(ra * rb, ra * rb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ra; ++j) out.block(i * rb, j * rb, rb, rb) = a(i, j) * b.matrix();
  return {a.n() + b.n(), a.d(), std::move(out)};
}

DenseOperator kron(std::span<const DenseOperator> factors) {
  if (factors.empty()) throw Error("kron needs at least one factor");
  DenseOperator out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

DenseOperator partial_trace(const DenseOperator& m, const SiteSubset& over) {
  const int n = m.n();
  const int d = m.d();
  over.check_range(n);
  if (over.empty()) return m;
  if (static_cast<int>(over.size()) == n) throw Error("partial_trace over every site; use the full trace");
  const std::vector<int> kept = over.complement(n).sites();
  const auto keep_off = site_offsets(kept, n, d);
  const auto trace_off = site_offsets(over.sites(), n, d);
  const auto dim = static_cast<Eigen::Index>(keep_off.size());
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      Complex acc{};
      for (std::size_t t : trace_off) {
        acc += m.matrix()(static_cast<Eigen::Index>(keep_off[static_cast<std::size_t>(a)] + t),
                          static_cast<Eigen::Index>(keep_off[static_cast<std::size_t>(b)] + t));
      }
      out(a, b) = acc;
    }
  }
  return {static_cast<int>(kept.size()), d, std::move(out)};
}

DenseOperator permute_legs(const DenseOperator& m, const std::vector<int>& source) {
  const int n = m.n();
  const int d = m.d();
  if (static_cast<int>(source.size()) != 2 * n) throw Error("permute_legs: need one source per leg");
  const auto st = strides(n, d);
  // Input leg L lands on output leg dest[L]; leg weight gives its index contribution.
  std::vector<int> dest(static_cast<std::size_t>(2 * n), -1);
  for (int out_leg = 0; out_leg < 2 * n; ++out_leg) {
    const int in_leg = source[static_cast<std::size_t>(out_leg)];
    if (in_leg < 0 || in_leg >= 2 * n || dest[static_cast<std::size_t>(in_leg)] != -1) {
      throw Error("permute_legs: source is not a permutation of the legs");
    }
    dest[static_cast<std::size_t>(in_leg)] = out_leg;
  }
  const Eigen::Index dim = m.dim();
  std::vector<std::size_t> row_part(static_cast<std::size_t>(dim), 0), col_part(static_cast<std::size_t>(dim), 0);
  std::vector<std::size_t> row_part_c(static_cast<std::size_t>(dim), 0), col_part_c(static_cast<std::size_t>(dim), 0);
  // Contribution of an input row index (ket legs) and input column index (bra
  // legs) to the output row and output column separately.
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    const auto digits = unpack_index(static_cast<std::size_t>(idx), n, d);
    for (int t = 0; t < n; ++t) {
      const auto v = static_cast<std::size_t>(digits[static_cast<std::size_t>(t)]);
      const int to_ket = dest[static_cast<std::size_t>(t)];
      const int to_bra = dest[static_cast<std::size_t>(n + t)];
      auto add = [&](int out_leg, std::size_t& r, std::size_t& c) {
        if (out_leg < n) r += v * st[static_cast<std::size_t>(out_leg)];
        else c += v * st[static_cast<std::size_t>(out_leg - n)];
      };
      add(to_ket, row_part[static_cast<std::size_t>(idx)], row_part_c[static_cast<std::size_t>(idx)]);
      add(to_bra, col_part[static_cast<std::size_t>(idx)], col_part_c[static_cast<std::size_t>(idx)]);
    }
  }
  Matrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto orow = row_part[static_cast<std::size_t>(r)] + col_part[static_cast<std::size_t>(c)];
      const auto ocol = row_part_c[static_cast<std::size_t>(r)] + col_part_c[static_cast<std::size_t>(c)];
      out(static_cast<Eigen::Index>(orow), static_cast<Eigen::Index>(ocol)) = m.matrix()(r, c);
    }
  }
  return {n, d, std::move(out)};
}

DenseOperator partial_transpose(const DenseOperator& m, const SiteSubset& over) {
  const int n = m.n();
  over.check_range(n);
  if (over.empty()) return m;
  std::vector<int> source(static_cast<std::size_t>(2 * n));
  for (int leg = 0; leg < 2 * n; ++leg) source[static_cast<std::size_t>(leg)] = leg;
  for (int s : over) std::swap(source[static_cast<std::size_t>(s - 1)], source[static_cast<std::size_t>(n + s - 1)]);
  return permute_legs(m, source);
}

DenseOperator reshuffle_sites(const DenseOperator& m, int ket_site, int bra_site) {
  const int n = m.n();
  check_site(ket_site, n, "reshuffle ket");
  check_site(bra_site, n, "reshuffle bra");
  std::vector<int> source(static_cast<std::size_t>(2 * n));
  for (int leg = 0; leg < 2 * n; ++leg) source[static_cast<std::size_t>(leg)] = leg;
  std::swap(source[static_cast<std::size_t>(ket_site - 1)], source[static_cast<std::size_t>(n + bra_site - 1)]);
  return permute_legs(m, source);
}

DenseOperator reshuffle_bipartite(const DenseOperator& m) {
  if (m.n() != 2) throw Error("reshuffle_bipartite needs a two-site operator; use reshuffle_sites");
  return reshuffle_sites(m, 2, 1);
}

Vector tau(const DenseOperator& m) {
  const Eigen::Index dim = m.dim();
  Vector v(dim * dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) v(r * dim + c) = m(r, c);
  return v;
}

DenseOperator tau_inverse(const Vector& v, int n, int d) {
  const auto dim = static_cast<Eigen::Index>(checked_dimension(d, n));
  if (v.size() != dim * dim) throw Error("tau_inverse: vector length does not match (n, d)");
  Matrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = v(r * dim + c);
  return {n, d, std::move(m)};
}

DenseOperator permutation_on_operator(const Permutation& pi, const DenseOperator& m) {
  if (pi.degree() != 2 * m.n()) {
    throw Error("permutation_on_operator: need a permutation of degree " + std::to_string(2 * m.n()) + ", got " +
                std::to_string(pi.degree()));
  }
  std::vector<int> source(static_cast<std::size_t>(2 * m.n()));
  for (int t = 0; t < 2 * m.n(); ++t) source[static_cast<std::size_t>(pi.image0(t))] = t;
  return permute_legs(m, source);
}

DenseOperator multiply_site_right(const DenseOperator& m, int site, const Matrix& x) {
  const int n = m.n();
  const int d = m.d();
  check_site(site, n, "multiply_site_right");
  if (x.rows() != d || x.cols() != d) throw Error("multiply_site_right: factor must be d x d");
  const auto stride = static_cast<Eigen::Index>(strides(n, d)[static_cast<std::size_t>(site - 1)]);
  const Eigen::Index dim = m.dim();
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const Eigen::Index digit = (c / stride) % d;
    const Eigen::Index base = c - digit * stride;
    for (Eigen::Index a = 0; a < d; ++a) {
      const Complex w = x(a, digit);
      if (w != Complex{}) out.col(c) += w * m.matrix().col(base + a * stride);
    }
  }
  return {n, d, std::move(out)};
}

DenseOperator realize_permutation(const Permutation& p, int d) {
  const int n = p.degree();
  DenseOperator out(n, d);
  Matrix m = Matrix::Zero(out.dim(), out.dim());
  const auto st = strides(n, d);
  for (Eigen::Index j = 0; j < out.dim(); ++j) {
    const auto digits = unpack_index(static_cast<std::size_t>(j), n, d);
    std::size_t row = 0;
    for (int t = 0; t < n; ++t) row += static_cast<std::size_t>(digits[static_cast<std::size_t>(t)]) *
                                       st[static_cast<std::size_t>(p.image0(t))];
    m(static_cast<Eigen::Index>(row), j) = 1.0;
  }
  return {n, d, std::move(m)};
}

Eigen::VectorXd eigenvalues(const DenseOperator& m) {
  const double defect = hermiticity_defect(m.matrix());
  if (defect > 1e-10) throw Error("eigenvalues: operator is not hermitian (defect " + std::to_string(defect) + ")");
  const Matrix h = 0.5 * (m.matrix() + m.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("hermitian eigensolver did not converge");
  return solver.eigenvalues();
}

double min_eigenvalue(const DenseOperator& m) { return eigenvalues(m)(0); }

}  // namespace wba
