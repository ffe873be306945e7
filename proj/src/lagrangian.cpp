#include "spinv/lagrangian.hpp"

#include <string>

#include "spinv/errors.hpp"

namespace spinv {

Subspace::Subspace(const Matrix& basis) : basis_(column_echelon(basis)) {
  if (basis_.cols() != basis.cols())
    throw DomainError("subspace basis has rank " + std::to_string(basis_.cols()) + " but " +
                      std::to_string(basis.cols()) + " columns");
}

Subspace Subspace::span_of(const Matrix& generators) {
  return Subspace(column_echelon(generators), Canonical{});
}

Subspace Subspace::coordinate(std::size_t ambient, std::size_t first, std::size_t count) {
  Matrix b(ambient, count);
  for (std::size_t j = 0; j < count; ++j) b(first + j, j) = 1;
  return Subspace(b);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) throw DimensionError("contains: vector has wrong length");
  return rank(hcat(basis_, Matrix::column(v))) == dim();
}

Matrix omega_image(const Matrix& basis) { return omega_matrix(basis.rows() / 2) * basis; }

bool is_lagrangian(const Subspace& l) {
  if (l.ambient_dim() == 0 || l.ambient_dim() % 2 != 0)
    throw DimensionError("is_lagrangian: ambient dimension must be even and nonzero");
  if (2 * l.dim() != l.ambient_dim()) return false;
  return (l.basis().transpose() * omega_image(l.basis())).is_zero();
}

namespace {

void require_complementary(const Subspace& l1, const Subspace& l2) {
  if (l1.ambient_dim() != l2.ambient_dim())
    throw DimensionError("subspaces live in different ambient spaces");
  if (l1.dim() + l2.dim() != l1.ambient_dim() || rank(hcat(l1.basis(), l2.basis())) != l1.ambient_dim())
    throw DomainError("subspaces are not complementary");
}

// Coefficients of v in the concatenated basis [l1 | l2] split into the two components.
std::pair<Vector, Vector> split_with(const Matrix& joint_inverse, const Subspace& l1,
                                     const Subspace& l2, const Vector& v) {
  const Vector coeff = joint_inverse * v;
  const std::size_t k = l1.dim();
  Vector p1(v.size()), p2(v.size());
  for (std::size_t j = 0; j < coeff.size(); ++j) {
    if (sgn(coeff[j]) == 0) continue;
    const Matrix& b = j < k ? l1.basis() : l2.basis();
    const std::size_t c = j < k ? j : j - k;
    Vector& target = j < k ? p1 : p2;
    for (std::size_t i = 0; i < v.size(); ++i) target[i] += coeff[j] * b(i, c);
  }
  return {std::move(p1), std::move(p2)};
}

}  // namespace

std::pair<Vector, Vector> project_along(const Subspace& l1, const Subspace& l2, const Vector& v) {
  require_complementary(l1, l2);
  if (v.size() != l1.ambient_dim()) throw DimensionError("project_along: vector has wrong length");
  return split_with(inverse(hcat(l1.basis(), l2.basis())), l1, l2, v);
}

PredicateReport check_symplectic_basis(const SymplecticBasis& b) {
  PredicateReport report;
  const std::size_t n = b.v.size();
  if (b.w.size() != n || n == 0) throw DimensionError("symplectic basis needs n v's and n w's, n >= 1");
  for (const auto& x : b.v)
    if (x.size() != 2 * n) throw DimensionError("symplectic basis vector has wrong length");
  for (const auto& x : b.w)
    if (x.size() != 2 * n) throw DimensionError("symplectic basis vector has wrong length");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (Rational r = omega(b.v[i], b.v[j]); sgn(r) != 0) report.violations.push_back({"omega(v,v)", i, j, r});
      if (Rational r = omega(b.w[i], b.w[j]); sgn(r) != 0) report.violations.push_back({"omega(w,w)", i, j, r});
      Rational r = omega(b.v[i], b.w[j]) - (i == j ? 1 : 0);
      if (sgn(r) != 0) report.violations.push_back({"omega(v,w)-delta", i, j, r});
    }
  return report;
}

SymplecticBasis symplectic_basis_from_splitting(const Subspace& l1, const Subspace& l2) {
  if (!is_lagrangian(l1)) throw DomainError("first subspace is not Lagrangian");
  if (!is_lagrangian(l2)) throw DomainError("second subspace is not Lagrangian");
  require_complementary(l1, l2);

  const std::size_t n = l1.dim();
  const Matrix joint_inverse = inverse(hcat(l1.basis(), l2.basis()));
  const Matrix& f1 = l1.basis();
  SymplecticBasis out;
  for (std::size_t k = 0; k < n; ++k) {
    // Constraints ω(F₁c, wᵢ) = 0 on coefficients c, one row per earlier wᵢ.
    Matrix constraints(k, n);
    for (std::size_t i = 0; i < k; ++i) {
      const Vector row = f1.transpose() * (omega_matrix(n) * out.w[i]);
      for (std::size_t j = 0; j < n; ++j) constraints(i, j) = row[j];
    }
    const Matrix kernel = k == 0 ? f1 : column_echelon(f1 * null_space(constraints));
    if (kernel.cols() == 0) throw InvariantViolation("empty kernel in symplectic basis construction");
    Vector v = kernel.col(0);

    // ŵ solves ω(vᵢ, ŵ) = δ_{i,k+1} for i ≤ k+1; free coordinates are set to
    // zero, so each pivot sits at the first coordinate available to it.
    out.v.push_back(std::move(v));
    Matrix pairing(k + 1, 2 * n + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      const Vector covector = omega_matrix(n).transpose() * out.v[i];
      for (std::size_t j = 0; j < 2 * n; ++j) pairing(i, j) = covector[j];
    }
    pairing(k, 2 * n) = 1;
    const RowEchelon ech = row_reduce(pairing);
    if (ech.rank() != k + 1 || ech.pivot_columns.back() == 2 * n)
      throw InvariantViolation("dependent vectors chosen in symplectic basis construction");
    Vector w_hat(2 * n);
    for (std::size_t r = 0; r <= k; ++r) w_hat[ech.pivot_columns[r]] = ech.reduced(r, 2 * n);

    out.w.push_back(split_with(joint_inverse, l1, l2, w_hat).second);
  }
  if (!check_symplectic_basis(out)) throw InvariantViolation("constructed basis is not symplectic");
  return out;
}

Matrix assemble_psi_inverse(const SymplecticBasis& b) {
  if (!check_symplectic_basis(b)) throw DomainError("input is not a symplectic basis");
  std::vector<Vector> cols = b.v;
  cols.insert(cols.end(), b.w.begin(), b.w.end());
  return Matrix::from_columns(cols, 2 * b.v.size());
}

}  // namespace spinv
