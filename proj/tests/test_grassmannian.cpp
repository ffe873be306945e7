#include <gtest/gtest.h>

#include <complex>

#include "oracle.hpp"
#include "spinv/errors.hpp"
#include "spinv/grassmannian.hpp"
#include "spinv/sampling.hpp"
#include "spinv/symplectic.hpp"

using namespace spinv;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

const Matrix kSwap{{0, 1}, {1, 0}};

SampleConfig config(std::size_t n, std::uint64_t seed) {
  SampleConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST(FixLocus, Examples) {
  EXPECT_EQ(fix_locus(standard_involution(3)), Subspace::coordinate(6, 0, 3));
  EXPECT_EQ(fix_locus(kSwap), Subspace(Matrix{{1}, {1}}));
  EXPECT_EQ(fix_locus(Matrix{{1, 2}, {0, -1}}), Subspace(Matrix{{1}, {0}}));
  EXPECT_THROW(fix_locus(Matrix::identity(2)), DomainError);
}

TEST(ChartCoordinates, StandardInvolutionIsZeroSection) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const ChartPoint p = chart_coordinates(standard_involution(n));
    EXPECT_EQ(p.base, Subspace::coordinate(2 * n, 0, n));
    EXPECT_TRUE(p.coordinate.is_zero());
    EXPECT_EQ(involution_from_chart(p), standard_involution(n));
  }
}

TEST(ChartCoordinates, ShearFamilyHasCoordinateHalfT) {
  for (std::int64_t num : {-5, -1, 0, 2, 3, 7}) {
    const Rational t = q(num, 3);
    const Matrix s{{1, t}, {0, -1}};
    const ChartPoint p = chart_coordinates(s);
    EXPECT_EQ(p.base, Subspace(Matrix{{1}, {0}}));
    ASSERT_EQ(p.coordinate.rows(), 1u);
    EXPECT_EQ(p.coordinate(0, 0), t / 2);
    // With F = e₁ and G = Ωe₁ = (0, −1), the vector G + F·(t/2) must be a −1 eigenvector of S.
    const oracle::Rows v{{t / 2}, {-1}};
    const auto sv = oracle::mul(oracle::rows_of(s), v);
    EXPECT_EQ(sv, (oracle::Rows{{-t / 2}, {1}}));
  }
}

TEST(InvolutionFromChart, Examples) {
  EXPECT_EQ(involution_from_chart({Subspace::coordinate(4, 0, 2), Matrix(2, 2)}), standard_involution(2));
  const Matrix s = involution_from_chart({Subspace(Matrix{{1}, {0}}), Matrix{{1}}});
  EXPECT_EQ(s, (Matrix{{1, 2}, {0, -1}}));
}

TEST(InvolutionFromChart, Errors) {
  EXPECT_THROW(involution_from_chart({Subspace::coordinate(4, 0, 2), Matrix{{0, 1}, {0, 0}}}), DomainError);
  const Subspace not_lagrangian(Matrix{{1, 0}, {0, 0}, {0, 1}, {0, 0}});
  EXPECT_THROW(involution_from_chart({not_lagrangian, Matrix(2, 2)}), DomainError);
  EXPECT_THROW(involution_from_chart({Subspace::coordinate(4, 0, 2), Matrix(1, 1)}), DimensionError);
}

TEST(Charts, RoundTripAndFibre) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const Matrix s = sample_anti_symplectic_involution(config(n, seed));
    const ChartPoint p = chart_coordinates(s);
    EXPECT_TRUE(p.coordinate.is_symmetric());
    EXPECT_EQ(involution_from_chart(p), s);

    const Subspace l = sample_lagrangian(config(n, seed + 99));
    const Matrix m = sample_integer_matrix(config(n, seed + 7), n, n);
    const Matrix a = m + m.transpose();
    const Matrix s2 = involution_from_chart({l, a});
    EXPECT_EQ(fix_locus(s2), l);
    EXPECT_EQ(chart_coordinates(s2).coordinate, a);
  }
}

TEST(SymmetricUnitary, ExactExamples) {
  using namespace std::complex_literals;
  const ComplexFloatMatrix r = to_symmetric_unitary(standard_involution(2));
  EXPECT_TRUE(r.values.isApprox(Eigen::MatrixXcd::Identity(2, 2)));
  const ComplexFloatMatrix swap = to_symmetric_unitary(kSwap);
  EXPECT_EQ(swap.values(0, 0), 1.0i);
  const ComplexFloatMatrix minus = to_symmetric_unitary(-standard_involution(1));
  EXPECT_EQ(minus.values(0, 0), std::complex<double>(-1.0));

  EXPECT_THROW(to_symmetric_unitary(Matrix{{1, 2}, {0, -1}}), DomainError);  // not orthogonal
  EXPECT_THROW(to_symmetric_unitary(Matrix::identity(2)), DomainError);
}

TEST(SymmetricUnitary, InverseExamples) {
  using namespace std::complex_literals;
  Eigen::MatrixXcd one = Eigen::MatrixXcd::Identity(2, 2);
  EXPECT_TRUE(from_symmetric_unitary({one}).isApprox(to_float(standard_involution(2))));
  Eigen::MatrixXcd i(1, 1);
  i(0, 0) = 1.0i;
  EXPECT_TRUE(from_symmetric_unitary({i}).isApprox(to_float(kSwap)));
}

TEST(SymmetricUnitary, ToleranceViolationsReportNorm) {
  Eigen::MatrixXcd not_unitary(1, 1);
  not_unitary(0, 0) = 2.0;
  try {
    from_symmetric_unitary({not_unitary});
    FAIL();
  } catch (const ToleranceError& e) {
    EXPECT_NEAR(e.norm(), 3.0, 1e-12);
  }
  Eigen::MatrixXcd not_symmetric(2, 2);
  not_symmetric << 0, 1, -1, 0;  // unitary, antisymmetric
  EXPECT_THROW(from_symmetric_unitary({not_symmetric}), ToleranceError);
  Eigen::MatrixXd almost = to_float(kSwap);
  almost(0, 1) += 1e-6;
  EXPECT_THROW(to_symmetric_unitary(almost), ToleranceError);
  EXPECT_NO_THROW(to_symmetric_unitary(almost, 1e-5));
}

TEST(SymmetricUnitary, SampledRoundTrip) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const ComplexFloatMatrix theta = sample_symmetric_unitary(config(n, seed));
    const Eigen::MatrixXd s = from_symmetric_unitary(theta);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    const Eigen::MatrixXd om = to_float(omega_matrix(n));
    EXPECT_LE(inf_norm(s.transpose() * s - id), 1e-9);
    EXPECT_LE(inf_norm(s * s - id), 1e-9);
    EXPECT_LE(inf_norm(s.transpose() * om * s + om), 1e-9);
    EXPECT_LE(inf_norm(to_symmetric_unitary(s).values - theta.values), 1e-8);
  }
}
