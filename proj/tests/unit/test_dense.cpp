#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wba/dense/operations.hpp"
#include "wba/dense/random.hpp"
#include "wba/dense/site_subset.hpp"
#include "wba/sym/permutation.hpp"
#include "wba/util/error.hpp"

using namespace wba;

namespace {

double dist(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

DenseOperator random_op(int n, int d, Rng& rng) {
  const auto dim = static_cast<Eigen::Index>(checked_dimension(d, n));
  return {n, d, random_gaussian_matrix(dim, dim, rng)};
}

std::vector<int> as_vector(const SiteSubset& s) { return s.sites(); }

}  // namespace

TEST(SiteSubset, ParseAndComplement) {
  EXPECT_EQ(parse_site_subset("1,3"), SiteSubset({1, 3}));
  EXPECT_EQ(parse_site_subset("{3,1}"), SiteSubset({1, 3}));
  EXPECT_EQ(parse_site_subset("13"), SiteSubset({1, 3}));
  EXPECT_TRUE(parse_site_subset("{}").empty());
  EXPECT_EQ(SiteSubset({1, 3}).complement(4), SiteSubset({2, 4}));
  EXPECT_EQ(SiteSubset::from_mask(0b101, 3), SiteSubset({1, 3}));
  EXPECT_EQ(SiteSubset({2, 1}).to_string(), "{1,2}");
  EXPECT_THROW(SiteSubset({0}).check_range(3), Error);
  EXPECT_THROW(SiteSubset({4}).check_range(3), Error);
}

TEST(DenseOperator, IndexPackingIsBigEndian) {
  EXPECT_EQ(pack_index({1, 0, 2}, 3), 11u);
  EXPECT_EQ(unpack_index(11, 3, 3), (std::vector<int>{1, 0, 2}));
  for (std::size_t i = 0; i < 27; ++i) EXPECT_EQ(pack_index(unpack_index(i, 3, 3), 3), i);
}

TEST(DenseOperator, ShapeChecks) {
  EXPECT_THROW(DenseOperator(2, 2, Matrix::Zero(3, 3)), Error);
  EXPECT_EQ(DenseOperator(0, 3).dim(), 1);
  EXPECT_THROW(DenseOperator(1, 2) + DenseOperator(1, 3), Error);
  EXPECT_EQ(DenseOperator::identity(3, 2).trace(), Complex(8.0));
}

TEST(DenseOps, KronMatchesOracle) {
  Rng rng(7);
  std::vector<DenseOperator> f{random_op(1, 2, rng), random_op(1, 2, rng), random_op(1, 2, rng)};
  const Matrix expect = oracle::kron_all({f[0].matrix(), f[1].matrix(), f[2].matrix()});
  EXPECT_LT(dist(kron(f).matrix(), expect), 1e-14);
  EXPECT_LT(dist(kron(f[0], kron(f[1], f[2])).matrix(), expect), 1e-14);
  const DenseOperator ab = kron(random_op(2, 3, rng), random_op(1, 3, rng));
  EXPECT_EQ(ab.n(), 3);
}

class PartialOps : public ::testing::TestWithParam<std::tuple<int, int, unsigned>> {};

TEST_P(PartialOps, TransposeAndTraceMatchOracle) {
  const auto [n, d, mask] = GetParam();
  Rng rng(100 + mask);
  const DenseOperator m = random_op(n, d, rng);
  const SiteSubset s = SiteSubset::from_mask(mask, n);
  EXPECT_LT(dist(partial_transpose(m, s).matrix(), oracle::partial_transpose(m.matrix(), n, d, as_vector(s))), 1e-15);
  // T_S twice is the identity.
  EXPECT_EQ(partial_transpose(partial_transpose(m, s), s).matrix(), m.matrix());
  if (static_cast<int>(s.size()) < n) {
    EXPECT_LT(dist(partial_trace(m, s).matrix(), oracle::partial_trace(m.matrix(), n, d, as_vector(s))), 1e-12);
  } else {
    EXPECT_THROW(partial_trace(m, s), Error);
  }
}

INSTANTIATE_TEST_SUITE_P(Subsets, PartialOps,
                         ::testing::Combine(::testing::Values(2, 3), ::testing::Values(2, 3),
                                            ::testing::Values(0u, 1u, 2u, 3u, 5u, 6u)));

TEST(DenseOps, FullPartialTransposeIsTranspose) {
  Rng rng(3);
  const DenseOperator m = random_op(3, 2, rng);
  EXPECT_EQ(partial_transpose(m, SiteSubset::range(1, 3)).matrix(), m.matrix().transpose());
}

TEST(DenseOps, PartialTraceOfProduct) {
  Rng rng(4);
  const DenseOperator a = random_op(1, 3, rng);
  const DenseOperator b = random_op(2, 3, rng);
  const DenseOperator t = partial_trace(kron(a, b), SiteSubset{1});
  EXPECT_LT(dist(t.matrix(), a.trace() * b.matrix()), 1e-12);
}

TEST(DenseOps, ReshuffleBipartite) {
  Rng rng(5);
  const DenseOperator a = random_op(1, 3, rng);
  const DenseOperator b = random_op(1, 3, rng);
  // (A ⊗ B)^R = |A>><<B*| in the row-major vectorization.
  const Matrix va = Eigen::Map<const Matrix>(Matrix(a.matrix().transpose()).data(), 9, 1);
  const Matrix vb = Eigen::Map<const Matrix>(Matrix(b.matrix().transpose()).data(), 9, 1);
  EXPECT_LT(dist(reshuffle_bipartite(kron(a, b)).matrix(), va * vb.transpose()), 1e-14);
  const DenseOperator m = random_op(2, 3, rng);
  EXPECT_EQ(reshuffle_bipartite(reshuffle_bipartite(m)).matrix(), m.matrix());
  EXPECT_EQ(reshuffle_sites(m, 2, 1).matrix(), reshuffle_bipartite(m).matrix());
  EXPECT_THROW(reshuffle_bipartite(random_op(3, 2, rng)), Error);
}

TEST(DenseOps, ReshuffleSameSiteIsPartialTranspose) {
  Rng rng(6);
  const DenseOperator m = random_op(3, 2, rng);
  for (int s = 1; s <= 3; ++s) EXPECT_EQ(reshuffle_sites(m, s, s).matrix(), partial_transpose(m, SiteSubset{s}).matrix());
}

TEST(DenseOps, SwapTrick) {
  Rng rng(8);
  const DenseOperator a = random_op(1, 3, rng);
  const DenseOperator b = random_op(1, 3, rng);
  const DenseOperator swap = realize_permutation(parse_permutation("(1 2)"), 3);
  EXPECT_LT(std::abs((swap * kron(a, b)).trace() - (a * b).trace()), 1e-12);
}

TEST(DenseOps, TauRoundTrip) {
  Rng rng(9);
  const DenseOperator m = random_op(2, 2, rng);
  const Vector v = tau(m);
  ASSERT_EQ(v.size(), 16);
  EXPECT_EQ(tau_inverse(v, 2, 2).matrix(), m.matrix());
  // Row-major: the first d^n entries are the first row.
  EXPECT_EQ(v(1), m(0, 1));
}

TEST(DenseOps, PermutationRealizationMatchesOracle) {
  for (int d : {2, 3}) {
    for (const auto& p : enumerate_group(3)) {
      EXPECT_EQ(realize_permutation(p, d).matrix(), oracle::permutation_operator(p, d)) << p.to_string();
      for (const auto& q : enumerate_group(3)) {
        EXPECT_EQ((realize_permutation(p, d) * realize_permutation(q, d)).matrix(),
                  realize_permutation(p * q, d).matrix());
      }
    }
  }
}

TEST(DenseOps, PermutationActsOnProductVectors) {
  Rng rng(10);
  const Permutation p = parse_permutation("(1 2 3)");
  std::vector<Vector> v{random_unit_vector(2, rng), random_unit_vector(2, rng), random_unit_vector(2, rng)};
  const Matrix before = oracle::kron_all({v[0], v[1], v[2]});
  // Vector in slot t moves to slot p(t): slot 2 holds v_1, slot 3 holds v_2, slot 1 holds v_3.
  const Matrix after = oracle::kron_all({v[2], v[0], v[1]});
  EXPECT_LT(dist(realize_permutation(p, 2).matrix() * before, after), 1e-14);
}

TEST(DenseOps, PermutationOnOperatorActsOnVectorization) {
  Rng rng(11);
  const DenseOperator m = random_op(2, 2, rng);
  for (const auto& pi : enumerate_group(4)) {
    const Vector moved = realize_permutation(pi, 2).matrix() * tau(m);
    EXPECT_LT(dist(tau(permutation_on_operator(pi, m)), moved), 1e-14) << pi.to_string();
  }
  EXPECT_THROW(permutation_on_operator(parse_permutation("(1 2)"), m), Error);
}

TEST(DenseOps, PermuteLegsIdentityAndSwap) {
  Rng rng(12);
  const DenseOperator m = random_op(2, 2, rng);
  EXPECT_EQ(permute_legs(m, {0, 1, 2, 3}).matrix(), m.matrix());
  // Exchanging ket and bra of both sites is the full transpose.
  EXPECT_EQ(permute_legs(m, {2, 3, 0, 1}).matrix(), m.matrix().transpose());
}

TEST(DenseOps, MultiplySiteRight) {
  Rng rng(13);
  const DenseOperator m = random_op(2, 3, rng);
  const DenseOperator x = random_op(1, 3, rng);
  const Matrix expect = m.matrix() * oracle::kron(Matrix::Identity(3, 3), x.matrix());
  EXPECT_LT(dist(multiply_site_right(m, 2, x.matrix()).matrix(), expect), 1e-13);
}

TEST(DenseOps, Eigenvalues) {
  const DenseOperator swap = realize_permutation(parse_permutation("(1 2)"), 3);
  EXPECT_NEAR(min_eigenvalue(swap), -1.0, 1e-12);
  const auto ev = eigenvalues(swap);
  EXPECT_EQ((ev.array() > 0).count(), 6);
  Rng rng(14);
  EXPECT_THROW(min_eigenvalue(random_op(2, 2, rng)), Error);
}

TEST(Random, PsdAndUnitary) {
  Rng rng(15);
  for (int i = 0; i < 10; ++i) {
    const DenseOperator p = random_psd(3, 1, rng);
    EXPECT_TRUE(p.is_hermitian(1e-12));
    EXPECT_GE(min_eigenvalue(p), -1e-12);
    const Matrix u = random_unitary(3, rng);
    EXPECT_LT(dist(u * u.adjoint(), Matrix::Identity(3, 3)), 1e-12);
  }
  EXPECT_EQ(random_psd(2, 2, 42).matrix(), random_psd(2, 2, 42).matrix());
  EXPECT_NEAR(random_unit_vector(5, rng).norm(), 1.0, 1e-14);
}

TEST(DenseOperator, Norms) {
  const DenseOperator a(1, 2, Matrix{{1, Complex(0, -3)}, {2, 0}});
  EXPECT_DOUBLE_EQ(sup_norm(a), 3.0);
  EXPECT_DOUBLE_EQ(sup_distance(a, DenseOperator(1, 2)), 3.0);
  EXPECT_FALSE(a.is_hermitian(1e-12));
  EXPECT_THROW(checked_dimension(2, 80), Error);
}
