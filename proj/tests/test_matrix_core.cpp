#include <gtest/gtest.h>

#include "oracle.hpp"
#include "spinv/errors.hpp"
#include "spinv/sampling.hpp"
#include "spinv/symplectic.hpp"

using namespace spinv;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

const Matrix kSwap{{0, 1}, {1, 0}};

}  // namespace

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("2/4"), q(1, 2));
  EXPECT_EQ(parse_rational("-6/3"), q(-2));
  EXPECT_EQ(parse_rational("+7"), q(7));
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_EQ(parse_rational("-2/-4"), q(1, 2));
  EXPECT_EQ(parse_rational("3/-6"), q(-1, 2));
}

TEST(Rational, RejectsMalformedLiterals) {
  for (const char* bad : {"", "1/0", "1/", "/2", "1.5", "1/--2", "a", "--1", "1/-0", "1 /2"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(Matrix, InverseAndDeterminantAgreeWithOracle) {
  SampleConfig cfg;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    cfg.n = 1 + seed % 4;
    cfg.seed = seed;
    const Matrix m = sample_invertible(cfg);
    EXPECT_EQ(determinant(m), oracle::det(oracle::rows_of(m)));
    EXPECT_EQ(oracle::mul(oracle::rows_of(m), oracle::rows_of(inverse(m))), oracle::identity(cfg.n));
  }
  EXPECT_THROW(inverse(Matrix{{1, 2}, {2, 4}}), SingularMatrixError);
}

TEST(Matrix, NullSpaceAndColumnEchelon) {
  const Matrix m{{1, 2, 3}, {2, 4, 6}};
  const Matrix k = null_space(m);
  EXPECT_EQ(k.cols(), 2u);
  EXPECT_TRUE((m * k).is_zero());
  EXPECT_EQ(column_echelon(Matrix{{0, 0}, {-1, 2}}), (Matrix{{0}, {1}}));
  EXPECT_EQ(column_echelon(Matrix{{2, 4}, {2, 4}}), (Matrix{{1}, {1}}));
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega({1, 0}, {0, 1}), 1);
  EXPECT_EQ(omega({1, 0}, {1, 0}), 0);
  EXPECT_EQ(omega({1, 1}, {q(-1, 2), q(1, 2)}), 1);
  EXPECT_THROW(omega({1, 0}, {1, 0, 0, 0}), DimensionError);
  EXPECT_THROW(omega({1, 0, 0}, {1, 0, 0}), DimensionError);
}

TEST(StandardForms, Identities) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto f = StandardForms::of(n);
    EXPECT_EQ(f.omega * f.omega, -Matrix::identity(2 * n));
    EXPECT_EQ(f.r * f.r, Matrix::identity(2 * n));
    EXPECT_TRUE(is_anti_symplectic(f.r).verdict());
    EXPECT_EQ(oracle::rows_of(f.omega), oracle::omega(n));
  }
}

TEST(IsSymplectic, Examples) {
  EXPECT_TRUE(is_symplectic(Matrix::identity(4)).verdict());
  EXPECT_TRUE(is_symplectic(Matrix{{1, 1}, {0, 1}}).verdict());

  const PredicateReport r = is_symplectic(Matrix{{2, 0}, {0, 2}});
  ASSERT_FALSE(r.verdict());
  ASSERT_EQ(r.violations.size(), 2u);
  EXPECT_EQ(r.violations[0].row, 0u);
  EXPECT_EQ(r.violations[0].col, 1u);
  EXPECT_EQ(r.violations[0].residual, 3);
  EXPECT_EQ(r.violations[1].residual, -3);
}

TEST(IsSymplectic, DimensionErrors) {
  EXPECT_THROW(is_symplectic(Matrix::identity(3)), DimensionError);
  EXPECT_THROW(is_symplectic(Matrix(2, 4)), DimensionError);
}

TEST(BlockReport, Examples) {
  EXPECT_TRUE(symplectic_block_report(embed_gl(Matrix{{1, 2}, {3, 5}})).verdict());
  EXPECT_TRUE(symplectic_block_report(omega_matrix(2)).verdict());
  const PredicateReport r = symplectic_block_report(Matrix{{1, 0}, {1, 2}});
  ASSERT_FALSE(r.verdict());
  EXPECT_EQ(r.violations[0].condition, "AtD-CtB-I");
  EXPECT_EQ(r.violations[0].residual, 1);  // AᵀD − CᵀB = 2
}

TEST(BlockReport, AgreesWithDefiningPredicate) {
  SampleConfig cfg;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    cfg.n = 1 + seed % 4;
    cfg.seed = seed;
    Matrix m = sample_symplectic(cfg);
    EXPECT_TRUE(symplectic_block_report(m).verdict());
    m(seed % m.rows(), (seed / 3) % m.cols()) += q(1, 3);
    EXPECT_EQ(is_symplectic(m).verdict(), symplectic_block_report(m).verdict());
  }
}

// The variant ADᵀ − CᵀB = 𝟙 (with AᵀC, BᵀD symmetric) is not equivalent to
// MᵀΩM = Ω once n ≥ 2.
TEST(BlockReport, TransposedVariantIsNotEquivalent) {
  const Matrix b0{{1, 0}, {0, 0}};
  const Matrix c0{{0, 1}, {1, 0}};
  Matrix upper = Matrix::identity(4), lower = Matrix::identity(4);
  upper.set_block(0, 2, b0);
  lower.set_block(2, 0, c0);
  const Matrix m = upper * lower;
  ASSERT_TRUE(is_symplectic(m).verdict());
  const Matrix a = m.block(0, 0, 2, 2), b = m.block(0, 2, 2, 2), c = m.block(2, 0, 2, 2), d = m.block(2, 2, 2, 2);
  EXPECT_NE(a * d.transpose() - c.transpose() * b, Matrix::identity(2));
  EXPECT_EQ(a.transpose() * d - c.transpose() * b, Matrix::identity(2));
}

TEST(IsAntiSymplectic, Examples) {
  EXPECT_TRUE(is_anti_symplectic(standard_involution(3)).verdict());
  Matrix flip(4, 4);
  flip.set_block(0, 2, Matrix::identity(2));
  flip.set_block(2, 0, Matrix::identity(2));
  EXPECT_TRUE(is_anti_symplectic(flip).verdict());
  EXPECT_FALSE(is_anti_symplectic(Matrix::identity(2)).verdict());
}

TEST(IsInvolution, Examples) {
  EXPECT_TRUE(is_involution(standard_involution(2)).verdict());
  EXPECT_FALSE(is_involution(omega_matrix(2)).verdict());
  EXPECT_TRUE(is_involution(Matrix{{1, 2}, {0, -1}}).verdict());
  EXPECT_THROW(is_involution(Matrix(2, 3)), DimensionError);
}

TEST(IsInA, Examples) {
  EXPECT_TRUE(is_in_A(standard_involution(2)));
  Matrix flip(4, 4);
  flip.set_block(0, 2, Matrix::identity(2));
  flip.set_block(2, 0, Matrix::identity(2));
  EXPECT_TRUE(is_in_A(flip));
  EXPECT_FALSE(is_in_A(Matrix{{1, 0}, {0, -2}}));
}

TEST(IsInSpR, Examples) {
  EXPECT_TRUE(is_in_SpR(Matrix::identity(2)));
  for (int num : {-3, 0, 1, 7}) EXPECT_TRUE(is_in_SpR(Matrix{{1, q(num, 5)}, {0, 1}}));
  EXPECT_FALSE(is_in_SpR(Matrix{{2, 0}, {0, q(1, 2)}}));
  EXPECT_THROW(is_in_SpR(Matrix{{2, 0}, {0, 2}}), NotSymplecticError);
  EXPECT_THROW(is_in_SpR(Matrix::identity(3)), DimensionError);
}

TEST(EmbedGl, Examples) {
  EXPECT_EQ(embed_gl(Matrix::identity(2)), Matrix::identity(4));
  EXPECT_EQ(embed_gl(Matrix{{2}}), (Matrix{{2, 0}, {0, q(1, 2)}}));
  const Matrix a{{1, 1}, {0, 1}};
  Matrix expected(4, 4);
  expected.set_block(0, 0, a);
  expected.set_block(2, 2, Matrix{{1, 0}, {-1, 1}});
  EXPECT_EQ(embed_gl(a), expected);
  EXPECT_THROW(embed_gl(Matrix{{1, 1}, {1, 1}}), SingularMatrixError);
}

TEST(GlWitness, Examples) {
  const Matrix a{{2, 1}, {1, 1}};
  EXPECT_TRUE(commutes_with_R(embed_gl(a)));
  EXPECT_EQ(gl_witness(embed_gl(a)), a);
  EXPECT_FALSE(commutes_with_R(omega_matrix(1)));
  EXPECT_FALSE(gl_witness(Matrix{{1, 1}, {0, 1}}).has_value());
  EXPECT_THROW(commutes_with_R(Matrix{{2, 0}, {0, 2}}), NotSymplecticError);
}

TEST(GroupProperties, ClosureAndConjugationStability) {
  SampleConfig cfg;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    cfg.n = 1 + seed % 4;
    cfg.seed = seed;
    const Matrix a = sample_symplectic(cfg);
    cfg.seed += 1000;
    const Matrix b = sample_symplectic(cfg);
    const Matrix s = sample_anti_symplectic_involution(cfg);
    EXPECT_TRUE(is_symplectic(inverse(a)).verdict());
    EXPECT_EQ(symplectic_inverse(a), inverse(a));
    EXPECT_TRUE(is_symplectic(a * b).verdict());
    EXPECT_TRUE(is_in_A(inverse(a) * s * a));
  }
}
