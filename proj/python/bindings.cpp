#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinv/errors.hpp"
#include "spinv/factorization.hpp"
#include "spinv/grassmannian.hpp"
#include "spinv/involutions.hpp"
#include "spinv/sampling.hpp"
#include "spinv/symplectic.hpp"
#include "spinv/verify.hpp"

namespace py = pybind11;
using namespace spinv;

// Matrices cross the boundary as nested lists of rational strings.
using Wire = std::vector<std::vector<std::string>>;

namespace {

Matrix from_wire(const Wire& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = parse_rational(rows[i][j]);
  }
  return m;
}

Wire to_wire(const Matrix& m) {
  Wire rows(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = to_string(m(i, j));
  return rows;
}

std::vector<std::string> to_wire(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vector vector_from_wire(const std::vector<std::string>& v) {
  Vector out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

std::optional<Wire> to_wire(const std::optional<Matrix>& m) {
  if (!m) return std::nullopt;
  return to_wire(*m);
}

SampleConfig config(std::size_t n, std::uint64_t seed, std::size_t word_length) {
  SampleConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.word_length = word_length;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_spinv, m) {
  m.doc() = "Exact symplectic linear algebra over the rationals";

  auto error = py::register_exception<Error>(m, "Error");
  auto domain = py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<NotSymplecticError>(m, "NotSymplecticError", domain.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", error.ptr());

  m.def("omega", [](const std::vector<std::string>& v, const std::vector<std::string>& w) {
    return to_string(omega(vector_from_wire(v), vector_from_wire(w)));
  });
  m.def("is_symplectic", [](const Wire& x) { return is_symplectic(from_wire(x)).verdict(); });
  m.def("is_anti_symplectic", [](const Wire& x) { return is_anti_symplectic(from_wire(x)).verdict(); });
  m.def("is_involution", [](const Wire& x) { return is_involution(from_wire(x)).verdict(); });
  m.def("is_in_A", [](const Wire& x) { return is_in_A(from_wire(x)); });
  m.def("is_in_SpR", [](const Wire& x) { return is_in_SpR(from_wire(x)); });
  m.def("embed_gl", [](const Wire& a) { return to_wire(embed_gl(from_wire(a))); });
  m.def("gl_witness", [](const Wire& x) { return to_wire(gl_witness(from_wire(x))); });
  m.def("omega_matrix", [](std::size_t n) { return to_wire(omega_matrix(n)); });
  m.def("standard_involution", [](std::size_t n) { return to_wire(standard_involution(n)); });

  m.def("symplectic_basis_from_splitting", [](const Wire& l1, const Wire& l2) {
    const SymplecticBasis b = symplectic_basis_from_splitting(Subspace(from_wire(l1)), Subspace(from_wire(l2)));
    std::vector<std::vector<std::string>> v, w;
    for (const auto& x : b.v) v.push_back(to_wire(x));
    for (const auto& x : b.w) w.push_back(to_wire(x));
    return py::make_tuple(v, w);
  });

  m.def("sp_r_to_involution", [](const Wire& x) { return to_wire(sp_r_to_involution(from_wire(x))); });
  m.def("involution_to_sp_r", [](const Wire& x) { return to_wire(involution_to_sp_r(from_wire(x))); });
  m.def("conjugation_map", [](const Wire& x) { return to_wire(conjugation_map(from_wire(x))); });
  m.def("conjugate_to_R", [](const Wire& x) { return to_wire(conjugate_to_R(from_wire(x))); });
  m.def("eigenspace_split", [](const Wire& x) {
    const EigenSplit s = eigenspace_split(from_wire(x));
    return py::make_tuple(to_wire(s.plus.basis()), to_wire(s.minus.basis()));
  });
  m.def("coset_witness", [](const Wire& a, const Wire& b) {
    return to_wire(coset_witness(from_wire(a), from_wire(b)));
  });

  m.def("reverses", [](const Wire& s, const Wire& phi) { return reverses(from_wire(s), from_wire(phi)); });
  m.def("factor_sl2", [](const Wire& phi) {
    const InvolutionPair p = factor_sl2(from_wire(phi));
    return py::make_tuple(to_wire(p.t), to_wire(p.s));
  });
  m.def("factor_block_diagonal", [](const std::vector<Wire>& blocks) {
    std::vector<Matrix> bs;
    for (const auto& b : blocks) bs.push_back(from_wire(b));
    const BlockFactorization f = factor_block_diagonal(bs);
    return py::make_tuple(to_wire(f.phi), to_wire(f.pair.t), to_wire(f.pair.s));
  });
  m.def("normalize_to_SpR", [](const Wire& phi, const Wire& s) {
    const Normalization r = normalize_to_SpR(from_wire(phi), from_wire(s));
    return py::make_tuple(to_wire(r.psi), to_wire(r.phi_tilde));
  });

  m.def("fix_locus", [](const Wire& s) { return to_wire(fix_locus(from_wire(s)).basis()); });
  m.def("chart_coordinates", [](const Wire& s) {
    const ChartPoint p = chart_coordinates(from_wire(s));
    return py::make_tuple(to_wire(p.base.basis()), to_wire(p.coordinate));
  });
  m.def("involution_from_chart", [](const Wire& base, const Wire& coordinate) {
    return to_wire(involution_from_chart({Subspace(from_wire(base)), from_wire(coordinate)}));
  });
  m.def(
      "to_symmetric_unitary",
      [](const Eigen::MatrixXd& s, double tol) { return to_symmetric_unitary(s, tol).values; },
      py::arg("s"), py::arg("tol") = kDefaultTolerance);
  m.def(
      "from_symmetric_unitary",
      [](const Eigen::MatrixXcd& theta, double tol) { return from_symmetric_unitary({theta, tol}); },
      py::arg("theta"), py::arg("tol") = kDefaultTolerance);

  m.def("sample_symplectic", [](std::size_t n, std::uint64_t seed, std::size_t wl) {
    return to_wire(sample_symplectic(config(n, seed, wl)));
  }, py::arg("n"), py::arg("seed"), py::arg("word_length") = 6);
  m.def("sample_anti_symplectic_involution", [](std::size_t n, std::uint64_t seed, std::size_t wl) {
    return to_wire(sample_anti_symplectic_involution(config(n, seed, wl)));
  }, py::arg("n"), py::arg("seed"), py::arg("word_length") = 6);
  m.def("sample_sp_r", [](std::size_t n, std::uint64_t seed, std::size_t wl) {
    return to_wire(sample_sp_r(config(n, seed, wl)));
  }, py::arg("n"), py::arg("seed"), py::arg("word_length") = 6);
  m.def("sample_lagrangian", [](std::size_t n, std::uint64_t seed, std::size_t wl) {
    return to_wire(sample_lagrangian(config(n, seed, wl)).basis());
  }, py::arg("n"), py::arg("seed"), py::arg("word_length") = 6);
  m.def("sample_symmetric_unitary", [](std::size_t n, std::uint64_t seed) {
    return sample_symmetric_unitary(config(n, seed, 6)).values;
  }, py::arg("n"), py::arg("seed"));

  m.def("verify", [](std::size_t n_max, std::size_t trials, std::uint64_t seed) {
    const VerifySummary s = run_verification({n_max, trials, seed});
    py::dict counts;
    for (const auto& [name, tally] : s.properties) counts[py::str(name)] = py::make_tuple(tally.passed, tally.failed);
    return py::make_tuple(s.all_passed(), counts);
  }, py::arg("n_max") = 2, py::arg("trials") = 10, py::arg("seed") = 0);
}
