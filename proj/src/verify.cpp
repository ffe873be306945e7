#include "spinv/verify.hpp"

#include <algorithm>
#include <functional>

#include "spinv/errors.hpp"
#include "spinv/factorization.hpp"
#include "spinv/grassmannian.hpp"
#include "spinv/involutions.hpp"
#include "spinv/sampling.hpp"
#include "spinv/symplectic.hpp"

namespace spinv {

namespace {

// Seeds for independent draws within one trial.
class Trial {
 public:
  Trial(std::size_t n, std::uint64_t seed) : n_(n), seed_(seed) {}

  std::size_t n() const { return n_; }

  SampleConfig next(std::size_t n) {
    SampleConfig cfg;
    cfg.n = n;
    cfg.seed = derive_seed(seed_, 0, counter_++);
    return cfg;
  }
  SampleConfig next() { return next(n_); }

 private:
  std::size_t n_;
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

using Check = std::function<void(Trial&)>;

void expect(bool condition, const char* what) {
  if (!condition) throw InvariantViolation(what);
}

std::pair<Subspace, Subspace> sample_splitting(Trial& t) {
  const std::size_t n = t.n();
  const Matrix psi = sample_symplectic(t.next());
  return {Subspace(psi * Subspace::coordinate(2 * n, 0, n).basis()),
          Subspace(psi * Subspace::coordinate(2 * n, n, n).basis())};
}

BlockFactorization sample_block_factorization(Trial& t) {
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < t.n(); ++i) blocks.push_back(sample_symplectic(t.next(1)));
  return factor_block_diagonal(blocks);
}

Matrix random_symmetric(Trial& t) {
  const Matrix m = sample_integer_matrix(t.next(), t.n(), t.n());
  return m + m.transpose();
}

const std::vector<std::pair<std::string, Check>>& battery() {
  static const std::vector<std::pair<std::string, Check>> checks = {
      {"core.block_report_agrees",
       [](Trial& t) {
         Matrix m = sample_symplectic(t.next());
         expect(is_symplectic(m).verdict() && symplectic_block_report(m).verdict(), "symplectic sample");
         m(0, m.cols() - 1) += 1;
         expect(is_symplectic(m).verdict() == symplectic_block_report(m).verdict(), "perturbed sample");
       }},
      {"core.group_closure",
       [](Trial& t) {
         const Matrix a = sample_symplectic(t.next());
         const Matrix b = sample_symplectic(t.next());
         expect(is_symplectic(inverse(a)).verdict(), "inverse");
         expect(is_symplectic(a * b).verdict(), "product");
       }},
      {"core.conjugation_stability",
       [](Trial& t) {
         const Matrix s = sample_anti_symplectic_involution(t.next());
         const Matrix psi = sample_symplectic(t.next());
         expect(is_in_A(inverse(psi) * s * psi), "conjugate of an involution");
       }},
      {"core.gl_embedding_roundtrip",
       [](Trial& t) {
         const Matrix a = sample_invertible(t.next());
         const Matrix e = embed_gl(a);
         expect(is_symplectic(e).verdict() && commutes_with_R(e), "embedding");
         expect(gl_witness(e) == a, "witness");
       }},
      {"core.omega_bilinear_antisymmetric",
       [](Trial& t) {
         const auto cols = sample_integer_matrix(t.next(), 2 * t.n(), 3).columns();
         const Matrix ab = sample_integer_matrix(t.next(), 1, 2);
         const Vector &u = cols[0], &v = cols[1], &w = cols[2];
         const Rational a = ab(0, 0) / 2, b = ab(0, 1);
         expect(omega(v, w) == -omega(w, v), "antisymmetry");
         expect(sgn(omega(v, v)) == 0, "alternating");
         expect(omega(a * u + b * v, w) == a * omega(u, w) + b * omega(v, w), "linearity");
       }},
      {"lagrangian.symplectic_basis",
       [](Trial& t) {
         const auto [l1, l2] = sample_splitting(t);
         const SymplecticBasis b = symplectic_basis_from_splitting(l1, l2);
         expect(check_symplectic_basis(b).verdict(), "basis invariants");
         expect(Subspace(Matrix::from_columns(b.v, 2 * t.n())) == l1, "v spans L1");
         expect(Subspace(Matrix::from_columns(b.w, 2 * t.n())) == l2, "w spans L2");
       }},
      {"lagrangian.assembled_psi_symplectic",
       [](Trial& t) {
         const auto [l1, l2] = sample_splitting(t);
         expect(is_symplectic(assemble_psi_inverse(symplectic_basis_from_splitting(l1, l2))).verdict(),
                "assembled matrix");
       }},
      {"lagrangian.projection_identities",
       [](Trial& t) {
         const auto [l1, l2] = sample_splitting(t);
         const Vector v = sample_integer_matrix(t.next(), 2 * t.n(), 1).col(0);
         const auto [p1, p2] = project_along(l1, l2, v);
         expect(p1 + p2 == v, "sum");
         expect(l1.contains(p1) && l2.contains(p2), "membership");
         const auto [q1, q2] = project_along(l1, l2, p1);
         expect(q1 == p1 && is_zero(q2), "idempotence");
       }},
      {"lagrangian.omega_image_is_orthogonal_complement",
       [](Trial& t) {
         const Subspace l = sample_lagrangian(t.next());
         const Matrix g = omega_image(l.basis());
         expect((l.basis().transpose() * g).is_zero(), "orthogonality");
         expect(rank(hcat(l.basis(), g)) == 2 * t.n(), "complement");
       }},
      {"involutions.bijection",
       [](Trial& t) {
         const Matrix psi = sample_sp_r(t.next());
         const Matrix s = sample_anti_symplectic_involution(t.next());
         const Matrix image = sp_r_to_involution(psi);
         expect(is_in_A(image) && involution_to_sp_r(image) == psi, "Sp^R round trip");
         const Matrix back = involution_to_sp_r(s);
         expect(is_in_SpR(back) && sp_r_to_involution(back) == s, "A round trip");
       }},
      {"involutions.surjectivity",
       [](Trial& t) {
         const Matrix s = sample_anti_symplectic_involution(t.next());
         const Matrix psi = conjugate_to_R(s);
         expect(is_symplectic(psi).verdict(), "psi symplectic");
         expect(inverse(psi) * standard_involution(t.n()) * psi == s, "psi^-1 R psi = S");
       }},
      {"involutions.injectivity",
       [](Trial& t) {
         const Matrix psi = sample_symplectic(t.next());
         const Matrix a = sample_invertible(t.next());
         expect(coset_witness(embed_gl(a) * psi, psi) == a, "witness");
       }},
      {"involutions.distinct_loci_separate",
       [](Trial& t) {
         const Matrix s1 = sample_anti_symplectic_involution(t.next());
         Matrix s2 = sample_anti_symplectic_involution(t.next());
         while (fix_locus(s2) == fix_locus(s1)) s2 = sample_anti_symplectic_involution(t.next());
         const Matrix psi1 = conjugate_to_R(s1);
         const Matrix psi2 = conjugate_to_R(s2);
         expect(conjugation_map(psi1) != conjugation_map(psi2), "images differ");
         expect(!coset_witness(psi1, psi2), "no witness");
       }},
      {"involutions.eigen_split_valid",
       [](Trial& t) {
         const EigenSplit split = eigenspace_split(sample_anti_symplectic_involution(t.next()));
         expect(is_lagrangian(split.plus) && is_lagrangian(split.minus), "Lagrangian");
         expect(rank(hcat(split.plus.basis(), split.minus.basis())) == 2 * t.n(), "complementary");
       }},
      {"involutions.coset_well_defined",
       [](Trial& t) {
         const Matrix psi = sample_symplectic(t.next());
         const Matrix a = sample_invertible(t.next());
         expect(conjugation_map(embed_gl(a) * psi) == conjugation_map(psi), "left Gl invariance");
       }},
      {"factorization.sl2_closed_form",
       [](Trial& t) {
         const Matrix phi = sample_symplectic(t.next(1));
         const InvolutionPair p = factor_sl2(phi);
         const Matrix id = Matrix::identity(2);
         expect(p.s * p.s == id && p.t * p.t == id, "involutions");
         expect(determinant(p.s) == -1 && determinant(p.t) == -1, "determinants");
         expect(p.t * p.s == phi, "product");
       }},
      {"factorization.normalize_block_diagonal",
       [](Trial& t) {
         const BlockFactorization f = sample_block_factorization(t);
         const Normalization norm = normalize_to_SpR(f.phi, f.pair.s);
         const Matrix r = standard_involution(t.n());
         expect(is_symplectic(norm.psi).verdict(), "psi symplectic");
         expect(norm.phi_tilde == norm.psi * f.phi * inverse(norm.psi), "conjugate");
         expect(r * norm.phi_tilde * r == inverse(norm.phi_tilde), "R phi~ R = phi~^-1");
       }},
      {"factorization.conjugation_invariants",
       [](Trial& t) {
         const BlockFactorization f = sample_block_factorization(t);
         const Matrix phi_tilde = normalize_to_SpR(f.phi, f.pair.s).phi_tilde;
         expect(trace(phi_tilde) == trace(f.phi), "trace");
         const Matrix id = Matrix::identity(2 * t.n());
         for (int lambda : {0, 1, -1, 2})
           expect(determinant(phi_tilde - Rational(lambda) * id) == determinant(f.phi - Rational(lambda) * id),
                  "characteristic polynomial");
       }},
      {"factorization.reverses_iff_involution",
       [](Trial& t) {
         const BlockFactorization f = sample_block_factorization(t);
         expect(reverses(f.pair.s, f.phi) && is_involution(f.phi * f.pair.s).verdict(), "factored pair");
         const Matrix s = sample_anti_symplectic_involution(t.next());
         const Matrix phi = sample_symplectic(t.next());
         expect(reverses(s, phi) == is_involution(phi * s).verdict(), "random pair");
       }},
      {"grassmannian.chart_roundtrip",
       [](Trial& t) {
         const Matrix s = sample_anti_symplectic_involution(t.next());
         const ChartPoint p = chart_coordinates(s);
         const Matrix back = involution_from_chart(p);
         expect(back == s, "involution -> chart -> involution");
         const ChartPoint q = chart_coordinates(back);
         expect(q.base == p.base && q.coordinate == p.coordinate, "chart -> involution -> chart");
       }},
      {"grassmannian.fix_locus_fiber",
       [](Trial& t) {
         const Subspace l = sample_lagrangian(t.next());
         const Matrix a = random_symmetric(t);
         const Matrix s = involution_from_chart({l, a});
         expect(fix_locus(s) == l, "fibre over L");
         expect(chart_coordinates(s).coordinate == a, "coordinate recovered");
       }},
      {"grassmannian.coordinate_symmetric",
       [](Trial& t) {
         expect(chart_coordinates(sample_anti_symplectic_involution(t.next())).coordinate.is_symmetric(),
                "symmetric coordinate");
       }},
      {"grassmannian.unitary_bridge",
       [](Trial& t) {
         const ComplexFloatMatrix theta = sample_symmetric_unitary(t.next());
         const double eps = theta.tolerance;
         const auto n = static_cast<Eigen::Index>(t.n());
         expect(inf_norm(Eigen::MatrixXcd(theta.values * theta.values.adjoint() -
                                          Eigen::MatrixXcd::Identity(n, n))) <= eps,
                "unitary");
         expect(inf_norm(Eigen::MatrixXcd(theta.values - theta.values.transpose())) <= eps, "symmetric");
         const Eigen::MatrixXd s = from_symmetric_unitary(theta);
         const ComplexFloatMatrix back = to_symmetric_unitary(s, eps);
         expect(inf_norm(Eigen::MatrixXcd(back.values - theta.values)) <= 10 * eps, "round trip");
       }},
      {"sampling.membership",
       [](Trial& t) {
         const SampleConfig cfg = t.next();
         expect(is_symplectic(sample_symplectic(cfg)).verdict(), "Sp(n)");
         expect(is_in_A(sample_anti_symplectic_involution(cfg)), "A(n)");
         expect(is_in_SpR(sample_sp_r(cfg)), "Sp^R(n)");
         expect(is_lagrangian(sample_lagrangian(cfg)), "Lagrangian");
       }},
      {"sampling.determinism",
       [](Trial& t) {
         const SampleConfig cfg = t.next();
         expect(sample_symplectic(cfg) == sample_symplectic(cfg), "Sp(n)");
         expect(sample_symmetric_unitary(cfg).values == sample_symmetric_unitary(cfg).values, "theta");
       }},
  };
  return checks;
}

constexpr std::size_t kMaxReportedFailures = 3;

}  // namespace

bool VerifySummary::all_passed() const {
  for (const auto& [name, tally] : properties)
    if (tally.failed != 0) return false;
  return true;
}

std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& [name, check] : battery()) names.push_back(name);
  std::sort(names.begin(), names.end());
  return names;
}

VerifySummary run_verification(const VerifyConfig& cfg) {
  if (cfg.n_max < 1) throw DomainError("verify: n-max must be at least 1");
  VerifySummary summary{cfg, {}};
  const auto& checks = battery();
  for (std::size_t p = 0; p < checks.size(); ++p) {
    const auto& [name, check] = checks[p];
    PropertyTally& tally = summary.properties[name];
    for (std::size_t n = 1; n <= cfg.n_max; ++n)
      for (std::size_t k = 0; k < cfg.trials; ++k) {
        Trial trial(n, derive_seed(cfg.seed, p, n * cfg.trials + k));
        try {
          check(trial);
          ++tally.passed;
        } catch (const std::exception& e) {
          ++tally.failed;
          if (tally.failures.size() < kMaxReportedFailures)
            tally.failures.push_back("n=" + std::to_string(n) + " trial=" + std::to_string(k) + ": " + e.what());
        }
      }
  }
  return summary;
}

Json summary_to_json(const VerifySummary& summary) {
  Json props = Json::object();
  for (const auto& [name, tally] : summary.properties) {
    props[name] = {{"passed", tally.passed}, {"failed", tally.failed}};
    if (!tally.failures.empty()) props[name]["failures"] = tally.failures;
  }
  return {{"n_max", summary.config.n_max},
          {"trials", summary.config.trials},
          {"seed", summary.config.seed},
          {"all_passed", summary.all_passed()},
          {"properties", std::move(props)}};
}

}  // namespace spinv
