#pragma once

#include <cstdint>
#include <optional>

#include "spinv/grassmannian.hpp"
#include "spinv/lagrangian.hpp"
#include "spinv/matrix.hpp"

namespace spinv {

enum class Generator { UpperShear, LowerShear, GlEmbedding, Omega };

/// Parameters of the seeded samplers. Randomness comes from std::mt19937_64,
/// whose output sequence is fixed by the C++ standard; bounded integers are
/// drawn by rejection from its raw 64-bit output, so exact samples are
/// identical on every platform.
struct SampleConfig {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::size_t word_length = 6;
  std::int64_t entry_bound = 3;
  // Use this generator for every letter of the word instead of drawing one.
  std::optional<Generator> forced_generator;

  // Throws DomainError.
  void validate() const;
};

// Seed for the `index`-th sample of stream `stream`, derived from `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

/// Product of word_length generators: [[𝟙,B],[0,𝟙]], [[𝟙,0],[C,𝟙]] with B, C
/// symmetric integer matrices, embed_gl(A) with A unimodular, and Ω.
Matrix sample_symplectic(const SampleConfig& cfg);

// ψ⁻¹Rψ for ψ = sample_symplectic(cfg).
Matrix sample_anti_symplectic_involution(const SampleConfig& cfg);

// R·S for S = sample_anti_symplectic_involution(cfg).
Matrix sample_sp_r(const SampleConfig& cfg);

// ψ·span(e₁..eₙ) for ψ = sample_symplectic(cfg).
Subspace sample_lagrangian(const SampleConfig& cfg);

// Integer matrix with entries uniform in [−entry_bound, entry_bound].
Matrix sample_integer_matrix(const SampleConfig& cfg, std::size_t rows, std::size_t cols);

// sample_integer_matrix(n×n), redrawn from the same stream until nonsingular.
Matrix sample_invertible(const SampleConfig& cfg);

// UUᵀ with U the unitary factor of a QR decomposition of a complex Gaussian matrix.
ComplexFloatMatrix sample_symmetric_unitary(const SampleConfig& cfg);

}  // namespace spinv
