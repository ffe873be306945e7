#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spinv/matrix.hpp"

namespace spinv {

/// The matrix of the symplectic form and the standard anti-symplectic
/// involution, both in the (q_1..q_n, p_1..p_n) coordinate ordering.
struct StandardForms {
  std::size_t n;
  Matrix omega;  // [[0, I], [-I, 0]]
  Matrix r;      // [[I, 0], [0, -I]]

  static StandardForms of(std::size_t n);
};

Matrix omega_matrix(std::size_t n);
Matrix standard_involution(std::size_t n);

// Half-dimension of a square matrix of even size. Throws DimensionError.
std::size_t half_dimension(const Matrix& m);

/// ω(v, w) = vᵀΩw.
Rational omega(const Vector& v, const Vector& w);

struct Violation {
  std::string condition;
  std::size_t row;
  std::size_t col;
  Rational residual;
};

struct PredicateReport {
  std::vector<Violation> violations;

  bool verdict() const { return violations.empty(); }
  explicit operator bool() const { return verdict(); }
};

// MᵀΩM = Ω; residuals are entries of MᵀΩM − Ω.
PredicateReport is_symplectic(const Matrix& m);

/// Block form of the symplectic condition for M = [[A, B], [C, D]]:
///   AᵀD − CᵀB = 𝟙,  AᵀC symmetric,  BᵀD symmetric.
/// Its verdict always agrees with is_symplectic.
PredicateReport symplectic_block_report(const Matrix& m);

// MᵀΩM = −Ω.
PredicateReport is_anti_symplectic(const Matrix& m);

// M² = 𝟙. Only requires a square matrix.
PredicateReport is_involution(const Matrix& m);

bool is_in_A(const Matrix& m);

// RMR = M⁻¹. Throws NotSymplecticError for a non-symplectic input.
bool is_in_SpR(const Matrix& m);

// M⁻¹ for a symplectic M, computed as Ω⁻¹MᵀΩ.
Matrix symplectic_inverse(const Matrix& m);

// [[A, 0], [0, (Aᵀ)⁻¹]]. Throws SingularMatrixError.
Matrix embed_gl(const Matrix& a);

// Both throw NotSymplecticError for a non-symplectic input.
bool commutes_with_R(const Matrix& m);
std::optional<Matrix> gl_witness(const Matrix& m);

// Throws NotSymplecticError naming `what` unless m is symplectic.
void require_symplectic(const Matrix& m, const std::string& what);
// Throws DomainError naming `what` unless m is an anti-symplectic involution.
void require_in_A(const Matrix& m, const std::string& what);

}  // namespace spinv
