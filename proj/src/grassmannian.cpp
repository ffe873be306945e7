#include "spinv/grassmannian.hpp"

#include "spinv/errors.hpp"
#include "spinv/involutions.hpp"
#include "spinv/symplectic.hpp"

namespace spinv {

Subspace fix_locus(const Matrix& s) { return eigenspace_split(s).plus; }

ChartPoint chart_coordinates(const Matrix& s) {
  const std::size_t n = s.rows() / 2;
  EigenSplit split = eigenspace_split(s);
  const Matrix& f = split.plus.basis();
  const Matrix g = omega_image(f);
  // V₋₁ = F·X + G·Y; transversality to L makes Y invertible and M = X·Y⁻¹.
  const Matrix xy = solve(hcat(f, g), split.minus.basis());
  const Matrix x = xy.block(0, 0, n, n);
  const Matrix y = xy.block(n, 0, n, n);
  Matrix coordinate = f.transpose() * f * x * inverse(y);
  if (!coordinate.is_symmetric()) throw InvariantViolation("chart coordinate is not symmetric");
  return {std::move(split.plus), std::move(coordinate)};
}

Matrix involution_from_chart(const ChartPoint& p) {
  if (!is_lagrangian(p.base)) throw DomainError("chart base is not Lagrangian");
  const std::size_t n = p.base.dim();
  if (p.coordinate.rows() != n || p.coordinate.cols() != n)
    throw DimensionError("chart coordinate must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!p.coordinate.is_symmetric()) throw DomainError("chart coordinate is not symmetric");

  const Matrix& f = p.base.basis();
  const Matrix m = solve(f.transpose() * f, p.coordinate);
  const Matrix minus = omega_image(f) + f * m;
  const Matrix frame = hcat(f, minus);
  Matrix s = frame * standard_involution(n) * inverse(frame);
  if (!is_in_A(s)) throw InvariantViolation("reconstructed involution is not in A(n)");
  return s;
}

Eigen::MatrixXd to_float(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

namespace {

ComplexFloatMatrix theta_from_columns(const Eigen::MatrixXd& s, double tolerance) {
  const Eigen::Index n = s.rows() / 2;
  ComplexFloatMatrix theta{Eigen::MatrixXcd(n, n), tolerance};
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) theta.values(i, j) = {s(i, j), s(n + i, j)};
  return theta;
}

}  // namespace

ComplexFloatMatrix to_symmetric_unitary(const Matrix& s, double tolerance) {
  half_dimension(s);
  require_in_A(s, "input");
  if (s.transpose() * s != Matrix::identity(s.rows())) throw DomainError("input is not orthogonal");
  return theta_from_columns(to_float(s), tolerance);
}

ComplexFloatMatrix to_symmetric_unitary(const Eigen::MatrixXd& s, double tolerance) {
  if (s.rows() != s.cols() || s.rows() == 0 || s.rows() % 2 != 0)
    throw DimensionError("expected a nonempty square matrix of even size");
  const Eigen::Index dim = s.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
  const Eigen::MatrixXd om = to_float(omega_matrix(dim / 2));
  if (double e = inf_norm(s.transpose() * s - id); e > tolerance)
    throw ToleranceError("input is not orthogonal within tolerance", e);
  if (double e = inf_norm(s * s - id); e > tolerance)
    throw ToleranceError("input is not an involution within tolerance", e);
  if (double e = inf_norm(s.transpose() * om * s + om); e > tolerance)
    throw ToleranceError("input is not anti-symplectic within tolerance", e);
  return theta_from_columns(s, tolerance);
}

Eigen::MatrixXd from_symmetric_unitary(const ComplexFloatMatrix& theta) {
  const Eigen::MatrixXcd& t = theta.values;
  if (t.rows() != t.cols() || t.rows() == 0) throw DimensionError("theta must be nonempty and square");
  const Eigen::Index n = t.rows();
  if (double e = inf_norm(Eigen::MatrixXcd(t * t.adjoint() - Eigen::MatrixXcd::Identity(n, n)));
      e > theta.tolerance)
    throw ToleranceError("theta is not unitary within tolerance", e);
  if (double e = inf_norm(Eigen::MatrixXcd(t - t.transpose())); e > theta.tolerance)
    throw ToleranceError("theta is not symmetric within tolerance", e);
  Eigen::MatrixXd s(2 * n, 2 * n);
  s << t.real(), t.imag(), t.imag(), -t.real();
  return s;
}

}  // namespace spinv
