#pragma once

#include <Eigen/Dense>

#include "spinv/lagrangian.hpp"
#include "spinv/matrix.hpp"

namespace spinv {

/// A point of TΛ(n): a Lagrangian base L with its canonical echelon basis F,
/// and a symmetric n×n coordinate A.
struct ChartPoint {
  Subspace base;
  Matrix coordinate;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// n×n complex matrix with the tolerance its predicates use.
struct ComplexFloatMatrix {
  Eigen::MatrixXcd values;
  double tolerance = kDefaultTolerance;
};

// The +1 eigenspace of S, in echelon form.
Subspace fix_locus(const Matrix& s);

/// Chart of the fibre over L = Fix(S). With G = ΩF spanning L^⊥, the −1
/// eigenspace is the span of G + F·M for a unique M, and the coordinate is
/// (FᵀF)·M, which is symmetric.
ChartPoint chart_coordinates(const Matrix& s);

// Inverse of chart_coordinates. Throws DomainError on a non-Lagrangian base
// or a non-symmetric coordinate.
Matrix involution_from_chart(const ChartPoint& p);

/// θ with S(v) = θ·conj(v) under ℝ^{2n} ≅ ℂⁿ, (x, y) ↦ x + iy.
/// Requires S ∈ 𝒜(n) and SᵀS = 𝟙 exactly.
ComplexFloatMatrix to_symmetric_unitary(const Matrix& s, double tolerance = kDefaultTolerance);

// Floating-point variant: S must be orthogonal, anti-symplectic and an
// involution within the tolerance. Throws ToleranceError otherwise.
ComplexFloatMatrix to_symmetric_unitary(const Eigen::MatrixXd& s, double tolerance = kDefaultTolerance);

// The real matrix [[Re θ, Im θ], [Im θ, −Re θ]] of v ↦ θ·conj(v).
// Throws ToleranceError if θ is not unitary and symmetric within tolerance.
Eigen::MatrixXd from_symmetric_unitary(const ComplexFloatMatrix& theta);

Eigen::MatrixXd to_float(const Matrix& m);

// ∞-norm (maximum absolute row sum).
template <typename Derived>
double inf_norm(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().rowwise().sum().maxCoeff());
}

}  // namespace spinv
