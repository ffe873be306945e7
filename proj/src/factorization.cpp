#include "spinv/factorization.hpp"

#include <string>

#include "spinv/errors.hpp"
#include "spinv/involutions.hpp"
#include "spinv/symplectic.hpp"

namespace spinv {

bool reverses(const Matrix& s, const Matrix& phi) {
  if (s.rows() != phi.rows()) throw DimensionError("reverses: inputs differ in size");
  half_dimension(s);
  require_in_A(s, "S");
  require_symplectic(phi, "phi");
  return s * phi * s == symplectic_inverse(phi);
}

InvolutionPair factor_sl2(const Matrix& phi) {
  if (phi.rows() != 2 || phi.cols() != 2) throw DimensionError("factor_sl2: expected a 2x2 matrix");
  if (determinant(phi) != 1) throw DomainError("factor_sl2: determinant is not 1");
  const Rational& a = phi(0, 0);
  const Rational& b = phi(0, 1);
  const Rational& c = phi(1, 0);
  const Rational& d = phi(1, 1);

  Matrix s;
  if (sgn(b) != 0)
    s = Matrix{{1, 0}, {(d - a) / b, -1}};
  else if (sgn(c) != 0)
    s = Matrix{{1, (d - a) / c}, {0, -1}};
  else
    s = Matrix{{0, 1}, {1, 0}};
  InvolutionPair pair{phi * s, s};
  if (!is_in_A(pair.t) || !is_in_A(pair.s))
    throw InvariantViolation("factor_sl2 produced a factor outside A(1)");
  return pair;
}

namespace {

Matrix assemble_blocks(std::span<const Matrix> blocks) {
  const std::size_t n = blocks.size();
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = blocks[i](0, 0);
    m(i, n + i) = blocks[i](0, 1);
    m(n + i, i) = blocks[i](1, 0);
    m(n + i, n + i) = blocks[i](1, 1);
  }
  return m;
}

}  // namespace

BlockFactorization factor_block_diagonal(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw DimensionError("factor_block_diagonal: no blocks");
  std::vector<Matrix> ts, ss;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].rows() != 2 || blocks[i].cols() != 2)
      throw DimensionError("block " + std::to_string(i) + " is not 2x2");
    if (determinant(blocks[i]) != 1)
      throw DomainError("block " + std::to_string(i) + " has determinant != 1");
    auto pair = factor_sl2(blocks[i]);
    ts.push_back(std::move(pair.t));
    ss.push_back(std::move(pair.s));
  }
  BlockFactorization out{assemble_blocks(blocks), {assemble_blocks(ts), assemble_blocks(ss)}};
  if (out.pair.t * out.pair.s != out.phi) throw InvariantViolation("block factors do not multiply to phi");
  return out;
}

Normalization normalize_to_SpR(const Matrix& phi, const Matrix& s) {
  if (!reverses(s, phi)) throw DomainError("precondition failed: S*phi*S != phi^-1");
  Matrix psi = conjugate_to_R(s);
  Matrix phi_tilde = psi * phi * symplectic_inverse(psi);
  if (!is_in_SpR(phi_tilde)) throw InvariantViolation("normalized matrix is not in Sp^R(n)");
  return {std::move(psi), std::move(phi_tilde)};
}

}  // namespace spinv
