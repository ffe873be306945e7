#include "spinv/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "spinv/errors.hpp"
#include "spinv/factorization.hpp"
#include "spinv/grassmannian.hpp"
#include "spinv/involutions.hpp"
#include "spinv/sampling.hpp"
#include "spinv/symplectic.hpp"
#include "spinv/verify.hpp"

namespace spinv::cli {

namespace {

Json read_json(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return Json::parse(in);
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Json report_to_json(const std::string& predicate, const PredicateReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"condition", v.condition}, {"row", v.row}, {"col", v.col},
                          {"residual", to_string(v.residual)}});
  return {{"predicate", predicate}, {"verdict", report.verdict()}, {"violations", std::move(violations)}};
}

Json basis_to_json(const SymplecticBasis& b) {
  Json v = Json::array(), w = Json::array();
  for (const auto& x : b.v) v.push_back(vector_to_json(x));
  for (const auto& x : b.w) w.push_back(vector_to_json(x));
  return {{"v", std::move(v)}, {"w", std::move(w)}, {"psi_inverse", matrix_to_json(assemble_psi_inverse(b))}};
}

struct Options {
  // check
  bool symplectic = false, anti_symplectic = false, involution = false, sp_r = false, gl_embedded = false;
  std::vector<std::string> files;
  double tol = kDefaultTolerance;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::size_t word_length = 6;
  std::size_t n_max = 4;
  std::size_t trials = 200;
};

CommandOutcome run_check(const Options& o, std::istream& in) {
  const int selected = o.symplectic + o.anti_symplectic + o.involution + o.sp_r + o.gl_embedded;
  if (selected != 1) throw CLI::ValidationError("check", "exactly one predicate flag is required");
  const Matrix m = matrix_from_json(read_json(o.files.at(0), in));
  Json payload;
  bool verdict;
  if (o.symplectic) {
    payload = report_to_json("symplectic", is_symplectic(m));
  } else if (o.anti_symplectic) {
    payload = report_to_json("anti-symplectic", is_anti_symplectic(m));
  } else if (o.involution) {
    payload = report_to_json("involution", is_involution(m));
  } else if (o.sp_r) {
    payload = {{"predicate", "sp-r"}, {"verdict", is_in_SpR(m)}};
  } else {
    const auto witness = gl_witness(m);
    payload = {{"predicate", "gl-embedded"}, {"verdict", witness.has_value()}};
    if (witness) payload["witness"] = matrix_to_json(*witness);
  }
  verdict = payload["verdict"].get<bool>();
  return {verdict ? kSuccess : kPredicateFalse, std::move(payload), {}, {}};
}

CommandOutcome ok(Json payload) { return {kSuccess, std::move(payload), {}, {}}; }

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const CLI::ParseError*>(&e) || dynamic_cast<const ParseError*>(&e)) return kParseError;
  if (dynamic_cast<const DomainError*>(&e)) return kDomainError;
  return kInvariantFailure;
}

CommandOutcome run(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Exact symplectic linear algebra: anti-symplectic involutions, Sp^R(n), Lagrangian charts",
               "spinv"};
  app.require_subcommand(1);
  Options o;
  std::function<CommandOutcome()> action;

  auto* check = app.add_subcommand("check", "Membership predicates for a matrix");
  check->add_flag("--symplectic", o.symplectic, "M^T Omega M = Omega");
  check->add_flag("--anti-symplectic", o.anti_symplectic, "M^T Omega M = -Omega");
  check->add_flag("--involution", o.involution, "M^2 = 1");
  check->add_flag("--sp-r", o.sp_r, "symplectic with R M R = M^-1");
  check->add_flag("--gl-embedded", o.gl_embedded, "symplectic and commutes with R; prints the Gl(n) block");
  check->add_option("file", o.files, "matrix JSON")->required()->expected(1);
  check->callback([&] { action = [&] { return run_check(o, in); }; });

  auto* split = app.add_subcommand("split", "Eigenspaces of an anti-symplectic involution");
  split->add_option("file", o.files, "involution JSON")->required()->expected(1);
  split->callback([&] {
    action = [&] {
      const EigenSplit s = eigenspace_split(matrix_from_json(read_json(o.files[0], in)));
      return ok({{"plus", subspace_to_json(s.plus)}, {"minus", subspace_to_json(s.minus)}});
    };
  });

  auto* basis = app.add_subcommand("basis", "Symplectic basis adapted to a Lagrangian splitting");
  basis->add_option("files", o.files, "L1.json L2.json")->required()->expected(2);
  basis->callback([&] {
    action = [&] {
      const Subspace l1 = subspace_from_json(read_json(o.files[0], in));
      const Subspace l2 = subspace_from_json(read_json(o.files[1], in));
      return ok(basis_to_json(symplectic_basis_from_splitting(l1, l2)));
    };
  });

  auto* conjugate = app.add_subcommand("conjugate", "Conjugation to and from R");
  conjugate->require_subcommand(1);
  auto* to_r = conjugate->add_subcommand("to-r", "psi with psi^-1 R psi = S");
  to_r->add_option("file", o.files, "involution JSON")->required()->expected(1);
  to_r->callback([&] {
    action = [&] {
      const Matrix psi = conjugate_to_R(matrix_from_json(read_json(o.files[0], in)));
      return ok({{"psi", matrix_to_json(psi)}, {"psi_inverse", matrix_to_json(symplectic_inverse(psi))}});
    };
  });
  auto* of = conjugate->add_subcommand("of", "psi^-1 R psi for symplectic psi");
  of->add_option("file", o.files, "symplectic JSON")->required()->expected(1);
  of->callback([&] {
    action = [&] { return ok(matrix_to_json(conjugation_map(matrix_from_json(read_json(o.files[0], in))))); };
  });

  auto* factor = app.add_subcommand("factor", "Factor into two anti-symplectic involutions");
  factor->require_subcommand(1);
  auto* sl2 = factor->add_subcommand("sl2", "2x2 matrix of determinant 1");
  sl2->add_option("file", o.files, "matrix JSON")->required()->expected(1);
  sl2->callback([&] {
    action = [&] {
      const InvolutionPair p = factor_sl2(matrix_from_json(read_json(o.files[0], in)));
      return ok({{"T", matrix_to_json(p.t)}, {"S", matrix_to_json(p.s)}});
    };
  });
  auto* blocks = factor->add_subcommand("blocks", "Block-diagonal direct sum of 2x2 blocks");
  blocks->add_option("files", o.files, "block JSON files")->required()->expected(1, -1);
  blocks->callback([&] {
    action = [&] {
      std::vector<Matrix> bs;
      for (const auto& f : o.files) bs.push_back(matrix_from_json(read_json(f, in)));
      const BlockFactorization r = factor_block_diagonal(bs);
      return ok({{"phi", matrix_to_json(r.phi)}, {"T", matrix_to_json(r.pair.t)}, {"S", matrix_to_json(r.pair.s)}});
    };
  });

  auto* normalize = app.add_subcommand("normalize", "Conjugate phi into Sp^R(n) given S reversing it");
  normalize->add_option("files", o.files, "PHI.json S.json")->required()->expected(2);
  normalize->callback([&] {
    action = [&] {
      const Matrix phi = matrix_from_json(read_json(o.files[0], in));
      const Matrix s = matrix_from_json(read_json(o.files[1], in));
      const Normalization r = normalize_to_SpR(phi, s);
      return ok({{"psi", matrix_to_json(r.psi)}, {"phi_tilde", matrix_to_json(r.phi_tilde)}});
    };
  });

  auto* chart = app.add_subcommand("chart", "Tangent-bundle charts of the Lagrangian Grassmannian");
  chart->require_subcommand(1);
  auto* coords = chart->add_subcommand("coords", "Chart point of an involution");
  coords->add_option("file", o.files, "involution JSON")->required()->expected(1);
  coords->callback([&] {
    action = [&] {
      const ChartPoint p = chart_coordinates(matrix_from_json(read_json(o.files[0], in)));
      return ok({{"base", subspace_to_json(p.base)}, {"coordinate", matrix_to_json(p.coordinate)}});
    };
  });
  auto* chart_inv = chart->add_subcommand("involution", "Involution of a chart point");
  chart_inv->add_option("files", o.files, "L.json A.json")->required()->expected(2);
  chart_inv->callback([&] {
    action = [&] {
      const Subspace l = subspace_from_json(read_json(o.files[0], in));
      const Matrix a = matrix_from_json(read_json(o.files[1], in));
      return ok(matrix_to_json(involution_from_chart({l, a})));
    };
  });

  auto* unitary = app.add_subcommand("unitary", "Orthogonal involutions and symmetric unitaries");
  unitary->require_subcommand(1);
  unitary->add_option("--tol", o.tol, "tolerance for floating-point predicates")
      ->check(CLI::PositiveNumber);
  auto* to_theta = unitary->add_subcommand("to-theta", "theta with S v = theta conj(v)");
  to_theta->fallthrough();
  to_theta->add_option("file", o.files, "orthogonal involution JSON (exact or decimal)")->required()->expected(1);
  to_theta->callback([&] {
    action = [&] {
      const Json j = read_json(o.files[0], in);
      const ComplexFloatMatrix theta = has_exact_entries(j) ? to_symmetric_unitary(matrix_from_json(j), o.tol)
                                                            : to_symmetric_unitary(float_matrix_from_json(j), o.tol);
      return ok(complex_matrix_to_json(theta.values));
    };
  });
  auto* from_theta = unitary->add_subcommand("from-theta", "Real matrix of v -> theta conj(v)");
  from_theta->fallthrough();
  from_theta->add_option("file", o.files, "complex matrix JSON")->required()->expected(1);
  from_theta->callback([&] {
    action = [&] {
      const ComplexFloatMatrix theta{complex_matrix_from_json(read_json(o.files[0], in)), o.tol};
      return ok(float_matrix_to_json(from_symmetric_unitary(theta)));
    };
  });

  auto* sample = app.add_subcommand("sample", "Seeded samples");
  sample->require_subcommand(1);
  sample->add_option("--n", o.n, "half-dimension")->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed, "64-bit seed");
  sample->add_option("--word-length", o.word_length, "generators per symplectic word")->check(CLI::PositiveNumber);
  auto sample_cfg = [&] {
    SampleConfig cfg;
    cfg.n = o.n;
    cfg.seed = o.seed;
    cfg.word_length = o.word_length;
    return cfg;
  };
  for (const char* kind : {"sp", "inv", "spr", "lag", "theta"}) {
    auto* sub = sample->add_subcommand(kind);
    sub->fallthrough();
    sub->callback([&, kind = std::string(kind)] {
      action = [&, kind] {
        const SampleConfig cfg = sample_cfg();
        if (kind == "sp") return ok(matrix_to_json(sample_symplectic(cfg)));
        if (kind == "inv") return ok(matrix_to_json(sample_anti_symplectic_involution(cfg)));
        if (kind == "spr") return ok(matrix_to_json(sample_sp_r(cfg)));
        if (kind == "lag") return ok(subspace_to_json(sample_lagrangian(cfg)));
        return ok(complex_matrix_to_json(sample_symmetric_unitary(cfg).values));
      };
    });
  }

  auto* verify = app.add_subcommand("verify", "Run every property suite");
  verify->add_option("--n-max", o.n_max, "largest half-dimension")->check(CLI::PositiveNumber);
  verify->add_option("--trials", o.trials, "samples per property and n");
  verify->add_option("--seed", o.seed, "base seed");
  verify->callback([&] {
    action = [&] {
      const VerifySummary s = run_verification({o.n_max, o.trials, o.seed});
      CommandOutcome out{s.all_passed() ? kSuccess : kInvariantFailure, summary_to_json(s), {}, {}};
      if (!s.all_passed()) out.diagnostics = "verify: property failures detected";
      return out;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    return {kSuccess, nullptr, {}, os.str()};
  } catch (const CLI::ParseError& e) {
    return {kParseError, nullptr, e.what(), {}};
  }

  if (!action) return {kParseError, nullptr, "no subcommand given", {}};
  try {
    return action();
  } catch (const std::exception& e) {
    return {exit_code_for(e), nullptr, e.what(), {}};
  }
}

}  // namespace spinv::cli
