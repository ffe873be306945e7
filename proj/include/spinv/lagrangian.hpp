#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spinv/matrix.hpp"
#include "spinv/symplectic.hpp"

namespace spinv {

/// Column span of a full-column-rank rational matrix.
///
/// The stored basis is always the reduced column echelon form, so two
/// subspaces are equal exactly when their stored bases are equal.
class Subspace {
 public:
  // Throws DomainError if the columns are linearly dependent.
  explicit Subspace(const Matrix& basis);

  // Span of the nonzero columns after echelon reduction; dependent columns allowed.
  static Subspace span_of(const Matrix& generators);
  // span(e_first, ..., e_{first+count-1}) in dimension `ambient`.
  static Subspace coordinate(std::size_t ambient, std::size_t first, std::size_t count);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  struct Canonical {};
  Subspace(Matrix echelon, Canonical) : basis_(std::move(echelon)) {}
  Matrix basis_;
};

struct SymplecticBasis {
  std::vector<Vector> v;
  std::vector<Vector> w;
};

// ω(vᵢ,vⱼ) = ω(wᵢ,wⱼ) = 0 and ω(vᵢ,wⱼ) = δᵢⱼ; violation rows/cols are (i, j).
PredicateReport check_symplectic_basis(const SymplecticBasis& b);

bool is_lagrangian(const Subspace& l);

/// Projections of v onto l1 along l2 and onto l2 along l1.
/// Throws DomainError if l1 ⊕ l2 is not the whole space.
std::pair<Vector, Vector> project_along(const Subspace& l1, const Subspace& l2, const Vector& v);

/// Symplectic basis adapted to a Lagrangian splitting l1 ⊕ l2.
///
/// Inductive construction: v_{k+1} is the first echelon basis vector of
/// l1 ∩ ⋂_{i≤k} ker ω(·, wᵢ); ŵ is the basic solution (free coordinates zero)
/// of ω(vᵢ, ŵ) = δ_{i,k+1} for i ≤ k+1; w_{k+1} is the projection of ŵ onto
/// l2 along l1.
SymplecticBasis symplectic_basis_from_splitting(const Subspace& l1, const Subspace& l2);

// Columns (v_1..v_n, w_1..w_n). Throws DomainError if the input is not a symplectic basis.
Matrix assemble_psi_inverse(const SymplecticBasis& b);

// ΩL for a basis of L.
Matrix omega_image(const Matrix& basis);

}  // namespace spinv
