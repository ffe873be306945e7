#pragma once

#include <optional>

#include "spinv/lagrangian.hpp"
#include "spinv/matrix.hpp"

namespace spinv {

/// The ±1 eigenspaces of an anti-symplectic involution. Both are Lagrangian
/// and together they span the whole space.
struct EigenSplit {
  Subspace plus;
  Subspace minus;
};

// ψ ↦ Rψ from Sp^R(n) onto the anti-symplectic involutions.
Matrix sp_r_to_involution(const Matrix& psi);
// S ↦ RS, the inverse of sp_r_to_involution.
Matrix involution_to_sp_r(const Matrix& s);

// ψ ↦ ψ⁻¹Rψ. Constant on left cosets of the embedded Gl(n).
Matrix conjugation_map(const Matrix& psi);

// plus = span ½(𝟙+S), minus = span ½(𝟙−S).
EigenSplit eigenspace_split(const Matrix& s);

/// A symplectic ψ with ψ⁻¹Rψ = S. ψ⁻¹ has columns v₁..vₙ, w₁..wₙ taken from
/// the symplectic basis adapted to the eigenspace splitting (V₁, V₋₁).
Matrix conjugate_to_R(const Matrix& s);

/// The block A with ψ₁ψ₂⁻¹ = embed_gl(A) when ψ₁ and ψ₂ have the same image
/// under conjugation_map; nullopt otherwise.
std::optional<Matrix> coset_witness(const Matrix& psi1, const Matrix& psi2);

}  // namespace spinv
