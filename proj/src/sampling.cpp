#include "spinv/sampling.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "spinv/errors.hpp"
#include "spinv/involutions.hpp"
#include "spinv/symplectic.hpp"

namespace spinv {

namespace {

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, k).
  std::uint64_t below(std::uint64_t k) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % k;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % k;
  }

  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform on (0, 1) with 53 random bits.
  double unit_open() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  double gaussian() {
    if (spare_) {
      double g = *spare_;
      spare_.reset();
      return g;
    }
    const double r = std::sqrt(-2.0 * std::log(unit_open()));
    const double phase = 2.0 * std::numbers::pi * unit_open();
    spare_ = r * std::sin(phase);
    return r * std::cos(phase);
  }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

Matrix random_symmetric(Draws& draws, std::size_t n, std::int64_t bound) {
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      b(i, j) = draws.in_range(-bound, bound);
      b(j, i) = b(i, j);
    }
  return b;
}

// Sign diagonal times n+1 integer elementary shears; determinant ±1.
Matrix random_unimodular(Draws& draws, std::size_t n, std::int64_t bound) {
  Matrix a = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    if (draws.below(2) == 1) a(i, i) = -1;
  if (n == 1) return a;
  for (std::size_t step = 0; step <= n; ++step) {
    const std::size_t i = draws.below(n);
    std::size_t j = draws.below(n - 1);
    if (j >= i) ++j;
    Matrix e = Matrix::identity(n);
    e(i, j) = draws.in_range(-bound, bound);
    a = a * e;
  }
  return a;
}

Matrix generator_matrix(Generator g, Draws& draws, const SampleConfig& cfg) {
  const std::size_t n = cfg.n;
  switch (g) {
    case Generator::UpperShear: {
      Matrix m = Matrix::identity(2 * n);
      m.set_block(0, n, random_symmetric(draws, n, cfg.entry_bound));
      return m;
    }
    case Generator::LowerShear: {
      Matrix m = Matrix::identity(2 * n);
      m.set_block(n, 0, random_symmetric(draws, n, cfg.entry_bound));
      return m;
    }
    case Generator::GlEmbedding:
      return embed_gl(random_unimodular(draws, n, cfg.entry_bound));
    case Generator::Omega:
      return omega_matrix(n);
  }
  throw InvariantViolation("unknown generator");
}

}  // namespace

void SampleConfig::validate() const {
  if (n < 1) throw DomainError("sample config: n must be at least 1");
  if (word_length < 1) throw DomainError("sample config: word_length must be at least 1");
  if (entry_bound < 1) throw DomainError("sample config: entry_bound must be positive");
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
  // splitmix64 finalizer over a combined key
  std::uint64_t z = base ^ (stream * 0x9e3779b97f4a7c15ULL) ^ (index * 0xbf58476d1ce4e5b9ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix sample_symplectic(const SampleConfig& cfg) {
  cfg.validate();
  Draws draws(cfg.seed);
  Matrix product = Matrix::identity(2 * cfg.n);
  for (std::size_t k = 0; k < cfg.word_length; ++k) {
    const Generator g = cfg.forced_generator ? *cfg.forced_generator
                                             : static_cast<Generator>(draws.below(4));
    product = product * generator_matrix(g, draws, cfg);
  }
  return product;
}

Matrix sample_anti_symplectic_involution(const SampleConfig& cfg) {
  const Matrix psi = sample_symplectic(cfg);
  return symplectic_inverse(psi) * standard_involution(cfg.n) * psi;
}

Matrix sample_sp_r(const SampleConfig& cfg) {
  return involution_to_sp_r(sample_anti_symplectic_involution(cfg));
}

Subspace sample_lagrangian(const SampleConfig& cfg) {
  const Matrix psi = sample_symplectic(cfg);
  return Subspace(psi * Subspace::coordinate(2 * cfg.n, 0, cfg.n).basis());
}

Matrix sample_integer_matrix(const SampleConfig& cfg, std::size_t rows, std::size_t cols) {
  cfg.validate();
  Draws draws(cfg.seed);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = draws.in_range(-cfg.entry_bound, cfg.entry_bound);
  return m;
}

Matrix sample_invertible(const SampleConfig& cfg) {
  cfg.validate();
  Draws draws(cfg.seed);
  for (;;) {
    Matrix m(cfg.n, cfg.n);
    for (auto i = 0u; i < cfg.n; ++i)
      for (auto j = 0u; j < cfg.n; ++j) m(i, j) = draws.in_range(-cfg.entry_bound, cfg.entry_bound);
    if (sgn(determinant(m)) != 0) return m;
  }
}

ComplexFloatMatrix sample_symmetric_unitary(const SampleConfig& cfg) {
  cfg.validate();
  Draws draws(cfg.seed);
  const auto n = static_cast<Eigen::Index>(cfg.n);
  Eigen::MatrixXcd z(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = draws.gaussian();
      const double im = draws.gaussian();
      z(i, j) = {re, im};
    }
  const Eigen::MatrixXcd u = Eigen::HouseholderQR<Eigen::MatrixXcd>(z).householderQ();
  ComplexFloatMatrix theta{Eigen::MatrixXcd::Zero(n, n), kDefaultTolerance};
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      std::complex<double> s = 0;
      for (Eigen::Index k = 0; k < n; ++k) s += u(i, k) * u(j, k);
      theta.values(i, j) = s;
      theta.values(j, i) = s;
    }
  return theta;
}

}  // namespace spinv
