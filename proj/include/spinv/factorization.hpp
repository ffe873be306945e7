#pragma once

#include <span>

#include "spinv/matrix.hpp"

namespace spinv {

/// φ = T·S with T and S anti-symplectic involutions.
struct InvolutionPair {
  Matrix t;
  Matrix s;
};

// SφS = φ⁻¹, equivalently (φS)² = 𝟙. Requires S ∈ 𝒜(n) and φ ∈ Sp(n).
bool reverses(const Matrix& s, const Matrix& phi);

/// Closed-form factorization of a 2×2 matrix of determinant 1.
///
/// S = [[p, q], [r, −p]] with tr(φS) = 0 and p² + qr = 1:
///   b ≠ 0:         S = [[1, 0], [(d−a)/b, −1]]
///   b = 0, c ≠ 0:  S = [[1, (d−a)/c], [0, −1]]
///   b = c = 0:     S = [[0, 1], [1, 0]]
/// and T = φS.
InvolutionPair factor_sl2(const Matrix& phi);

struct BlockFactorization {
  Matrix phi;
  InvolutionPair pair;
};

// Direct sum of 2×2 blocks: block i acts on coordinates (q_i, p_i).
BlockFactorization factor_block_diagonal(std::span<const Matrix> blocks);

struct Normalization {
  Matrix psi;
  Matrix phi_tilde;
};

/// ψ = conjugate_to_R(S) and φ̃ = ψφψ⁻¹ ∈ Sp^R(n), for φ reversed by S.
Normalization normalize_to_SpR(const Matrix& phi, const Matrix& s);

}  // namespace spinv
