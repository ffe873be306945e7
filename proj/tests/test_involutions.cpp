#include <gtest/gtest.h>

#include "oracle.hpp"
#include "spinv/errors.hpp"
#include "spinv/involutions.hpp"
#include "spinv/sampling.hpp"
#include "spinv/symplectic.hpp"

using namespace spinv;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

const Matrix kSwap{{0, 1}, {1, 0}};
const Matrix kPsiInverse{{1, q(-1, 2)}, {1, q(1, 2)}};

SampleConfig config(std::size_t n, std::uint64_t seed) {
  SampleConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST(SpRToInvolution, Examples) {
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(sp_r_to_involution(Matrix::identity(2 * n)), standard_involution(n));
  const Matrix rotation{{q(3, 5), q(-4, 5)}, {q(4, 5), q(3, 5)}};
  const Matrix s = sp_r_to_involution(rotation);
  EXPECT_EQ(s, (Matrix{{q(3, 5), q(-4, 5)}, {q(-4, 5), q(-3, 5)}}));
  EXPECT_TRUE(is_in_A(s));
  EXPECT_EQ(involution_to_sp_r(s), rotation);
  EXPECT_THROW(sp_r_to_involution(Matrix{{2, 0}, {0, q(1, 2)}}), DomainError);
}

TEST(InvolutionToSpR, Examples) {
  EXPECT_EQ(involution_to_sp_r(standard_involution(2)), Matrix::identity(4));
  const Matrix psi = involution_to_sp_r(kSwap);
  EXPECT_EQ(psi, omega_matrix(1));
  EXPECT_TRUE(is_in_SpR(psi));
  EXPECT_EQ(sp_r_to_involution(psi), kSwap);
  EXPECT_THROW(involution_to_sp_r(Matrix::identity(2)), DomainError);
}

TEST(ConjugationMap, Examples) {
  EXPECT_EQ(conjugation_map(Matrix::identity(4)), standard_involution(2));
  EXPECT_EQ(conjugation_map(embed_gl(Matrix{{2, 1}, {7, 4}})), standard_involution(2));

  const Matrix psi = inverse(kPsiInverse);
  EXPECT_EQ(conjugation_map(psi), kSwap);
  // ψ⁻¹Rψ recomputed by the oracle with ψ from the adjugate formula.
  const auto psi_rows = oracle::inverse2(oracle::rows_of(kPsiInverse));
  EXPECT_EQ(oracle::mul(oracle::rows_of(kPsiInverse), oracle::r_matrix(1), psi_rows), oracle::rows_of(kSwap));

  EXPECT_THROW(conjugation_map(Matrix{{2, 0}, {0, 2}}), NotSymplecticError);
}

TEST(EigenspaceSplit, Examples) {
  const EigenSplit r = eigenspace_split(standard_involution(3));
  EXPECT_EQ(r.plus, Subspace::coordinate(6, 0, 3));
  EXPECT_EQ(r.minus, Subspace::coordinate(6, 3, 3));

  const EigenSplit swap = eigenspace_split(kSwap);
  EXPECT_EQ(swap.plus, Subspace(Matrix{{1}, {1}}));
  EXPECT_EQ(swap.minus, Subspace(Matrix{{1}, {-1}}));

  const EigenSplit shear = eigenspace_split(Matrix{{1, 2}, {0, -1}});
  EXPECT_EQ(shear.plus, Subspace(Matrix{{1}, {0}}));
  EXPECT_EQ(shear.minus, Subspace(Matrix{{-1}, {1}}));

  EXPECT_THROW(eigenspace_split(omega_matrix(1)), DomainError);
}

TEST(ConjugateToR, Examples) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(conjugate_to_R(standard_involution(n)), Matrix::identity(2 * n));

  const Matrix psi = conjugate_to_R(kSwap);
  EXPECT_EQ(inverse(psi), kPsiInverse);
  const auto psi_rows = oracle::rows_of(psi);
  EXPECT_EQ(oracle::mul(oracle::inverse2(psi_rows), oracle::r_matrix(1), psi_rows), oracle::rows_of(kSwap));

  EXPECT_THROW(conjugate_to_R(Matrix{{1, 0}, {0, -2}}), DomainError);
}

TEST(ConjugateToR, SurjectiveOnSamples) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const Matrix s = sample_anti_symplectic_involution(config(n, seed));
    const Matrix psi = conjugate_to_R(s);
    EXPECT_TRUE(is_symplectic(psi).verdict());
    EXPECT_EQ(conjugation_map(psi), s);
  }
}

TEST(CosetWitness, Examples) {
  const Matrix psi = sample_symplectic(config(2, 11));
  EXPECT_EQ(coset_witness(psi, psi), Matrix::identity(2));

  const Matrix b{{1, 2}, {0, -1}};
  EXPECT_EQ(coset_witness(embed_gl(b) * psi, psi), b);

  const Matrix psi_r = conjugate_to_R(standard_involution(1));
  const Matrix psi_swap = conjugate_to_R(kSwap);
  EXPECT_FALSE(coset_witness(psi_r, psi_swap).has_value());
  EXPECT_THROW(coset_witness(Matrix{{2, 0}, {0, 2}}, psi_r), NotSymplecticError);
}

TEST(CosetWitness, InjectivityOnSamples) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const Matrix psi = sample_symplectic(config(n, seed));
    const Matrix a = sample_invertible(config(n, seed + 500));
    EXPECT_EQ(conjugation_map(embed_gl(a) * psi), conjugation_map(psi));
    EXPECT_EQ(coset_witness(embed_gl(a) * psi, psi), a);
  }
}

TEST(Bijection, SpRAndInvolutionsAreMutuallyInverse) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const Matrix psi = sample_sp_r(config(n, seed));
    const Matrix s = sample_anti_symplectic_involution(config(n, seed + 1));
    EXPECT_EQ(involution_to_sp_r(sp_r_to_involution(psi)), psi);
    EXPECT_EQ(sp_r_to_involution(involution_to_sp_r(s)), s);
  }
}
