#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

#include "qmem/linalg.hpp"
#include "qmem/quantum.hpp"

using namespace qmem;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Matrix half_zero_minus_plus() {
  // (|0><0| - |+><+|) / 2
  return Matrix{{0.25, -0.25}, {-0.25, -0.25}};
}

std::vector<double> eigen_oracle(const HermitianMatrix& h) {
  const auto n = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXcd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) e(i, j) = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e, Eigen::EigenvaluesOnly);
  std::vector<double> out(h.dim());
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

}  // namespace

TEST(HermitianEigenvalues, Diagonal) {
  const auto mu = hermitian_eigenvalues(HermitianMatrix::diagonal(std::vector<double>{1.0, -1.0}));
  ASSERT_EQ(mu.size(), 2u);
  EXPECT_DOUBLE_EQ(mu[0], -1.0);
  EXPECT_DOUBLE_EQ(mu[1], 1.0);
}

TEST(HermitianEigenvalues, ZeroMatrix) {
  for (double v : hermitian_eigenvalues(HermitianMatrix::zero(3))) EXPECT_EQ(v, 0.0);
}

TEST(HermitianEigenvalues, ZeroMinusPlusClosedForm) {
  const auto mu = hermitian_eigenvalues(half_zero_minus_plus());
  const double r = 1.0 / (2.0 * std::sqrt(2.0));
  EXPECT_NEAR(mu[0], -r, 1e-12);
  EXPECT_NEAR(mu[1], r, 1e-12);
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
  Matrix m{{1.0, 2.0}, {0.0, 1.0}};
  EXPECT_THROW(hermitian_eigenvalues(m), validation_error);
  EXPECT_THROW(HermitianMatrix(Matrix(0)), validation_error);
}

TEST(HermitianEigenvalues, SymmetrizesSmallDrift) {
  Matrix m{{1.0, cplx(0.5, 1e-12)}, {0.5, 2.0}};
  const HermitianMatrix h(m);
  EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
}

TEST(HermitianEigenvalues, PropertyAgainstEigenAndReconstruction) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + rng.below(8);
    const HermitianMatrix h = random_hermitian(d, rng);
    const EigenSystem es = hermitian_eigensystem(h);
    const auto oracle = eigen_oracle(h);
    double sum = 0.0;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      EXPECT_NEAR(es.values[i], oracle[i], 1e-9);
      if (i > 0) EXPECT_LE(es.values[i - 1], es.values[i]);
      sum += es.values[i];
      abs_sum += std::abs(es.values[i]);
    }
    EXPECT_NEAR(sum, h.trace(), 1e-9);
    EXPECT_GE(abs_sum + 1e-12, std::abs(h.trace()));

    const std::vector<double> vals = es.values;
    const Matrix rebuilt = es.vectors * Matrix::diagonal(vals) * es.vectors.adjoint();
    EXPECT_LE((rebuilt - h.matrix()).frobenius_norm(), 1e-9 * static_cast<double>(d));
  }
}

TEST(TraceProduct, Examples) {
  const auto p0 = DensityMatrix::basis_state(2, 0);
  const auto p1 = DensityMatrix::basis_state(2, 1);
  EXPECT_EQ(trace_product(p0, p1), 0.0);
  EXPECT_NEAR(trace_product(p0, p0), 1.0, 1e-15);

  // Bloch formula (1 + v.v') / 2 with v.v' = -1/3
  const auto tetra = tetrahedron_family();
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) EXPECT_NEAR(trace_product(tetra.state(a), tetra.state(b)), 1.0 / 3.0, 1e-12);
}

TEST(TraceProduct, DimensionMismatch) {
  EXPECT_THROW(trace_product(HermitianMatrix::identity(2), HermitianMatrix::identity(3)), validation_error);
}

TEST(AbsEigenvalueSum, Examples) {
  EXPECT_NEAR(abs_eigenvalue_sum(HermitianMatrix::diagonal(std::vector<double>{0.3, -0.3})), 0.6, 1e-15);
  EXPECT_NEAR(abs_eigenvalue_sum(HermitianMatrix(half_zero_minus_plus())), kInvSqrt2, 1e-12);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const Matrix g = random_gaussian_matrix(3, rng);
    const HermitianMatrix psd(g * g.adjoint());
    EXPECT_NEAR(abs_eigenvalue_sum(psd), psd.trace(), 1e-9);
  }
}

TEST(SchurCheck, HermitianIsEquality) {
  Rng rng(2);
  const HermitianMatrix h = random_hermitian(4, rng);
  const SchurCheck c = schur_check(h.matrix());
  EXPECT_TRUE(c.normal);
  EXPECT_NEAR(c.lhs, c.rhs, 1e-9);
}

TEST(SchurCheck, Nilpotent) {
  const SchurCheck c = schur_check(Matrix{{0.0, 1.0}, {0.0, 0.0}});
  EXPECT_NEAR(c.lhs, 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(c.rhs, 1.0);
  EXPECT_FALSE(c.normal);
}

TEST(SchurCheck, PropertyRandomMatrices) {
  Rng rng(3);
  int strict = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + rng.below(8);
    const Matrix m = t % 4 == 0 ? random_normal_matrix(d, rng) : random_gaussian_matrix(d, rng);
    const SchurCheck c = schur_check(m);
    const double scale = std::max(1.0, c.rhs);
    EXPECT_LE(c.lhs, c.rhs + 1e-9 * scale);
    if (c.normal) EXPECT_NEAR(c.lhs, c.rhs, 1e-9 * scale);
    if (d == 4 && !c.normal && c.lhs < c.rhs - 1e-6) ++strict;
  }
  EXPECT_GT(strict, 0);
}

TEST(TraceJensen, PropertyRandomNormalMatrices) {
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + rng.below(8);
    const Matrix m = random_normal_matrix(d, rng);
    EXPECT_TRUE(schur_check(m).normal);
    const TraceJensenCheck c = trace_jensen_check(m);
    EXPECT_LE(c.lhs, c.rhs + 1e-9 * std::max(1.0, c.rhs));
  }
}

TEST(RandomUnitary, IsUnitary) {
  Rng rng(6);
  for (std::size_t d = 1; d <= 8; ++d) {
    const Matrix u = random_unitary(d, rng);
    EXPECT_LE((u * u.adjoint() - Matrix::identity(d)).frobenius_norm(), 1e-12);
  }
}
