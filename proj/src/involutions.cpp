#include "spinv/involutions.hpp"

#include "spinv/errors.hpp"
#include "spinv/symplectic.hpp"

namespace spinv {

Matrix sp_r_to_involution(const Matrix& psi) {
  if (!is_in_SpR(psi)) throw DomainError("input is not in Sp^R(n)");
  return standard_involution(psi.rows() / 2) * psi;
}

Matrix involution_to_sp_r(const Matrix& s) {
  half_dimension(s);
  require_in_A(s, "input");
  return standard_involution(s.rows() / 2) * s;
}

Matrix conjugation_map(const Matrix& psi) {
  const std::size_t n = half_dimension(psi);
  require_symplectic(psi, "input");
  return symplectic_inverse(psi) * standard_involution(n) * psi;
}

EigenSplit eigenspace_split(const Matrix& s) {
  const std::size_t n = half_dimension(s);
  require_in_A(s, "input");
  const Matrix id = Matrix::identity(2 * n);
  const Rational half = make_rational(1, 2);
  EigenSplit split{Subspace::span_of(half * (id + s)), Subspace::span_of(half * (id - s))};
  if (!is_lagrangian(split.plus) || !is_lagrangian(split.minus))
    throw InvariantViolation("eigenspace of an anti-symplectic involution is not Lagrangian");
  return split;
}

Matrix conjugate_to_R(const Matrix& s) {
  const EigenSplit split = eigenspace_split(s);
  const Matrix psi_inv = assemble_psi_inverse(symplectic_basis_from_splitting(split.plus, split.minus));
  const Matrix psi = symplectic_inverse(psi_inv);
  if (psi_inv * standard_involution(s.rows() / 2) * psi != s)
    throw InvariantViolation("conjugate_to_R: ψ⁻¹Rψ differs from the input");
  return psi;
}

std::optional<Matrix> coset_witness(const Matrix& psi1, const Matrix& psi2) {
  if (psi1.rows() != psi2.rows()) throw DimensionError("coset_witness: inputs differ in size");
  const Matrix image1 = conjugation_map(psi1);
  if (image1 != conjugation_map(psi2)) return std::nullopt;
  const auto a = gl_witness(psi1 * symplectic_inverse(psi2));
  if (!a) throw InvariantViolation("equal conjugation images but ψ₁ψ₂⁻¹ does not commute with R");
  return a;
}

}  // namespace spinv
