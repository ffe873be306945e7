#include "spinv/symplectic.hpp"

#include "spinv/errors.hpp"

namespace spinv {

namespace {

void collect(PredicateReport& report, const std::string& condition, const Matrix& residual) {
  for (std::size_t i = 0; i < residual.rows(); ++i)
    for (std::size_t j = 0; j < residual.cols(); ++j)
      if (sgn(residual(i, j)) != 0) report.violations.push_back({condition, i, j, residual(i, j)});
}

// Ω M without forming Ω: rows n.. of M go up, rows ..n go down negated.
Matrix omega_times(const Matrix& m) {
  const std::size_t n = m.rows() / 2;
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = m(n + i, j);
      out(n + i, j) = -m(i, j);
    }
  return out;
}

Matrix gram(const Matrix& m) { return m.transpose() * omega_times(m); }

}  // namespace

StandardForms StandardForms::of(std::size_t n) {
  return StandardForms{n, omega_matrix(n), standard_involution(n)};
}

Matrix omega_matrix(std::size_t n) {
  Matrix o(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    o(i, n + i) = 1;
    o(n + i, i) = -1;
  }
  return o;
}

Matrix standard_involution(std::size_t n) {
  Matrix r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    r(i, i) = 1;
    r(n + i, n + i) = -1;
  }
  return r;
}

std::size_t half_dimension(const Matrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0 || m.rows() == 0)
    throw DimensionError("expected a nonempty square matrix of even size, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  return m.rows() / 2;
}

Rational omega(const Vector& v, const Vector& w) {
  if (v.size() != w.size() || v.size() % 2 != 0 || v.empty())
    throw DimensionError("omega: vectors must share an even, nonzero length");
  const std::size_t n = v.size() / 2;
  Rational s;
  for (std::size_t i = 0; i < n; ++i) s += v[i] * w[n + i] - v[n + i] * w[i];
  return s;
}

PredicateReport is_symplectic(const Matrix& m) {
  const std::size_t n = half_dimension(m);
  PredicateReport report;
  collect(report, "MtOmegaM-Omega", gram(m) - omega_matrix(n));
  return report;
}

PredicateReport symplectic_block_report(const Matrix& m) {
  const std::size_t n = half_dimension(m);
  const Matrix a = m.block(0, 0, n, n);
  const Matrix b = m.block(0, n, n, n);
  const Matrix c = m.block(n, 0, n, n);
  const Matrix d = m.block(n, n, n, n);
  PredicateReport report;
  collect(report, "AtD-CtB-I", a.transpose() * d - c.transpose() * b - Matrix::identity(n));
  const Matrix atc = a.transpose() * c;
  collect(report, "AtC-CtA", atc - atc.transpose());
  const Matrix btd = b.transpose() * d;
  collect(report, "BtD-DtB", btd - btd.transpose());
  return report;
}

PredicateReport is_anti_symplectic(const Matrix& m) {
  const std::size_t n = half_dimension(m);
  PredicateReport report;
  collect(report, "MtOmegaM+Omega", gram(m) + omega_matrix(n));
  return report;
}

PredicateReport is_involution(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("is_involution: matrix is not square");
  PredicateReport report;
  collect(report, "M2-I", m * m - Matrix::identity(m.rows()));
  return report;
}

bool is_in_A(const Matrix& m) { return is_anti_symplectic(m).verdict() && is_involution(m).verdict(); }

Matrix symplectic_inverse(const Matrix& m) {
  // −Ω(MᵀΩ) with MᵀΩ = −(ΩM)ᵀ
  return omega_times(omega_times(m).transpose());
}

void require_symplectic(const Matrix& m, const std::string& what) {
  if (!is_symplectic(m)) throw NotSymplecticError(what + " is not symplectic");
}

void require_in_A(const Matrix& m, const std::string& what) {
  if (!is_anti_symplectic(m)) throw DomainError(what + " is not anti-symplectic");
  if (!is_involution(m)) throw DomainError(what + " is not an involution");
}

bool is_in_SpR(const Matrix& m) {
  const std::size_t n = half_dimension(m);
  require_symplectic(m, "is_in_SpR input");
  const Matrix r = standard_involution(n);
  return r * m * r == symplectic_inverse(m);
}

Matrix embed_gl(const Matrix& a) {
  if (!a.is_square() || a.rows() == 0) throw DimensionError("embed_gl: expected nonempty square block");
  return block_diag(a, inverse(a.transpose()));
}

bool commutes_with_R(const Matrix& m) {
  const std::size_t n = half_dimension(m);
  require_symplectic(m, "commutes_with_R input");
  const Matrix r = standard_involution(n);
  return r * m == m * r;
}

std::optional<Matrix> gl_witness(const Matrix& m) {
  if (!commutes_with_R(m)) return std::nullopt;
  return m.block(0, 0, m.rows() / 2, m.rows() / 2);
}

}  // namespace spinv
