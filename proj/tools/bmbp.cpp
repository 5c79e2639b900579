// bmbp: build, linearize, solve, verify and recover over JSON files.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "bmbp/bmbp.hpp"

using namespace bmbp;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2, kSolverDiagnostic = 3 };

struct Config {
  std::string input, output = "-", pencil, a_file, b_file;
  std::string function, basis = "newton", nodes;
  int param = -1, degree = -1, grid = 0;
  std::uint64_t seed = 1;
  bool no_left = false;
  std::vector<std::string> tol;
};

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::LikelySingular:
    case ErrorCode::BackendFailure:
    case ErrorCode::ZeroRecoveredBlock:
    case ErrorCode::DependentSet: return kSolverDiagnostic;
    default: return kInputError;
  }
}

Tolerances tolerances(const Config& c) {
  Tolerances t;
  for (const std::string& kv : c.tol) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidInput, "--tol expects name=value, got '" + kv + "'");
    double v = 0.0;
    try {
      size_t used = 0;
      v = std::stod(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "bad tolerance value in '" + kv + "'");
    }
    t.set(kv.substr(0, eq), v);
  }
  return t;
}

void emit(const Config& c, const std::string& text) {
  if (c.output == "-")
    std::cout << text << "\n";
  else
    write_text_atomic(c.output, text + "\n");
}

// Summary lines go to stdout unless stdout carries the JSON itself.
std::ostream& summary(const Config& c) {
  static std::ostringstream sink;
  if (c.output == "-") {
    sink.str("");
    return sink;
  }
  return std::cout;
}

MatrixPolynomial load_poly(const Config& c) { return polynomial_from_json(read_text_file(c.input)); }

Mat load_optional(const std::string& path) {
  return path.empty() ? Mat() : matrix_from_json(read_text_file(path));
}

int require_param(const Config& c) {
  if (c.param < 0) throw Error(ErrorCode::ParamRange, "--param (mu or eps) is required");
  return c.param;
}

std::string lambda_text(const Eigenvalue& e) {
  if (e.infinite) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g%+.15gi", e.value.real(), e.value.imag());
  return buf;
}

NodeSet interp_nodes(const Config& c, int k) {
  std::string choice = c.nodes;
  const BasisKind kind = basis_from_name(c.basis);
  if (choice.empty()) choice = kind == BasisKind::Chebyshev1 ? "cheb1" : "cheb2";
  if (choice == "cheb1") return chebyshev_nodes(k, 1);
  if (choice == "cheb2") return chebyshev_nodes(k, 2);
  const NodeSet x = nodes_from_json(read_text_file(choice));
  if (static_cast<int>(x.size()) != k + 1)
    throw Error(ErrorCode::DimensionMismatch, "node file must hold degree + 1 nodes");
  return x;
}

int cmd_interp(const Config& c) {
  if (c.degree < 0) throw Error(ErrorCode::ParamRange, "--degree must be given and >= 0");
  const SampledFunction f = demo_function(c.function);
  const BasisKind kind = basis_from_name(c.basis);
  const NodeSet x = interp_nodes(c, c.degree);
  MatrixPolynomial P;
  switch (kind) {
    case BasisKind::Newton:
      if (c.degree == 0) throw Error(ErrorCode::ParamRange, "Newton interpolation needs degree >= 1");
      P = divided_differences(f, x);
      break;
    case BasisKind::Lagrange: P = lagrange_sample(f, x); break;
    case BasisKind::Chebyshev1: P = chebyshev_coefficients(f, x, 1); break;
    case BasisKind::Chebyshev2: P = chebyshev_coefficients(f, x, 2); break;
    default: throw Error(ErrorCode::UnsupportedBasis, "interpolation targets newton, lagrange or chebyshev");
  }
  emit(c, polynomial_to_json(P));
  auto& out = summary(c);
  out << "basis " << c.basis << ", grade " << P.grade() << ", size " << P.rows() << "x" << P.cols() << "\n";
  std::vector<cplx> nodes_grid(x.points());
  out << "max node deviation " << max_deviation(P, f, nodes_grid) << "\n";
  if (c.grid > 1) {
    std::vector<cplx> g;
    for (int i = 0; i < c.grid; ++i) g.emplace_back(-1.0 + 2.0 * i / (c.grid - 1));
    out << "max deviation on " << c.grid << " points of [-1, 1]: " << max_deviation(P, f, g) << "\n";
  }
  return kOk;
}

int cmd_linearize(const Config& c) {
  const MatrixPolynomial P = load_poly(c);
  const Linearization lin = linearize(P, require_param(c), load_optional(c.a_file), load_optional(c.b_file));
  emit(c, pencil_to_json(lin.pencil));
  auto& out = summary(c);
  out << family_name(lin.family) << " pencil, parameter " << lin.param << ", size " << lin.pencil.L0.rows()
      << "x" << lin.pencil.L0.cols() << "\n";
  out << "body " << lin.p() << "x" << lin.q() << " blocks, K1 " << lin.pencil.row_blocks.size() - lin.p()
      << " block rows, K2 " << lin.pencil.col_blocks.size() - lin.q() << " block columns\n";
  return kOk;
}

int cmd_solve(const Config& c) {
  const MatrixPolynomial P = load_poly(c);
  SolveOptions o;
  o.A = load_optional(c.a_file);
  o.B = load_optional(c.b_file);
  o.want_left = !c.no_left;
  o.tol = tolerances(c);
  o.seed = c.seed;
  const EigenSolution sol = solve_pep(P, require_param(c), o);
  emit(c, solution_to_json(sol));
  auto& out = summary(c);
  double worst = 0.0;
  // The backward error is 0/0-like when P has a single nonzero term, so the
  // plain residual |P(l) x| / |x| is shown next to it.
  out << "lambda                                      backward    residual    block\n";
  for (const auto& p : sol.pairs) {
    const double res = p.lambda.infinite ? 0.0 : (evaluate(P, p.lambda.value) * p.right).norm() / p.right.norm();
    char line[160];
    std::snprintf(line, sizeof line, "%-42s  %.3e   %.3e   %d\n", lambda_text(p.lambda).c_str(),
                  p.residual_right, res, p.recovered_from);
    out << line;
    worst = std::max(worst, p.residual_right);
  }
  out << sol.pairs.size() << " eigenvalues, max backward error " << worst << "\n";
  return kOk;
}

int cmd_verify(const Config& c) {
  const MatrixPolynomial P = load_poly(c);
  const Tolerances tol = tolerances(c);
  VerifyReport rep;
  if (!c.pencil.empty()) {
    rep = verify_strong_linearization(pencil_from_json(read_text_file(c.pencil)), P, tol, c.seed);
  } else {
    const Linearization lin = linearize(P, require_param(c), load_optional(c.a_file), load_optional(c.b_file));
    rep = verify_strong_linearization(lin.pencil, P, tol, c.seed);
    for (auto& ch : check_one_sided(linearize(P, c.param), tol)) rep.checks.push_back(ch);
  }
  emit(c, report_to_json(rep));
  auto& out = summary(c);
  for (const auto& ch : rep.checks)
    out << (ch.pass ? "pass  " : "FAIL  ") << ch.name << "  " << ch.measured << " (threshold " << ch.threshold
        << ")\n";
  return rep.all_pass() ? kOk : kCheckFailed;
}

int cmd_nullspace(const Config& c) {
  const MatrixPolynomial P = load_poly(c);
  const Tolerances tol = tolerances(c);
  json out;
  out["basis"] = basis_name(P.kind());
  bool any = false;
  std::ostringstream sum;
  if (P.kind() == BasisKind::Monomial) {
    for (Side side : {Side::Right, Side::Left}) {
      const PolyVectorBasis b = nullspace_minimal_basis(P, side, tol, c.seed);
      any = any || !b.degrees.empty();
      out[side == Side::Right ? "right" : "left"] = {{"polynomial", json::parse(basis_to_json(b))}};
    }
  } else {
    const int param = c.param < 0 ? 0 : c.param;
    const Linearization lin = linearize(P, param);
    out["family"] = family_name(lin.family);
    out["param"] = param;
    for (Side side : {Side::Right, Side::Left}) {
      const PolyVectorBasis pb = nullspace_minimal_basis(lin.pencil, side, tol, c.seed);
      const RecoveredBasis rb = recover_minimal(lin, pb, side);
      any = any || !pb.degrees.empty();
      const char* name = side == Side::Right ? "right" : "left";
      out[name] = {{"pencil", json::parse(basis_to_json(pb))},
                   {"polynomial", json::parse(basis_to_json(rb.basis))},
                   {"shift", rb.shift}};
      sum << name << " indices: pencil [";
      for (size_t i = 0; i < pb.degrees.size(); ++i) sum << (i ? ", " : "") << pb.degrees[i];
      sum << "], polynomial [";
      for (size_t i = 0; i < rb.basis.degrees.size(); ++i) sum << (i ? ", " : "") << rb.basis.degrees[i];
      sum << "], shift " << rb.shift << "\n";
    }
  }
  if (!any) throw Error(ErrorCode::NotSingular, "input appears regular: no nullspace at the probe points");
  emit(c, out.dump(2));
  summary(c) << sum.str();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linearizations of matrix polynomials in Newton, Lagrange and Chebyshev bases"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s, bool needs_input) {
    if (needs_input) s->add_option("-i,--input", c.input, "polynomial JSON file")->required();
    s->add_option("-o,--out", c.output, "output file, '-' for stdout");
    s->add_option("--tol", c.tol, "tolerance override name=value (repeatable)");
    s->add_option("--seed", c.seed, "seed for randomized checks");
  };
  auto param = [&](CLI::App* s) {
    s->add_option("-p,--param,--mu,--eps", c.param, "mu (Newton, Lagrange) or eps (Chebyshev)");
    s->add_option("--A", c.a_file, "matrix file for the A parameter");
    s->add_option("--B", c.b_file, "matrix file for the B parameter");
  };

  CLI::App* interp = app.add_subcommand("interp", "interpolate a demo function");
  common(interp, false);
  interp->add_option("-f,--function", c.function, "exp or poly:<json or path>")->required();
  interp->add_option("-b,--basis", c.basis, "newton, lagrange, chebyshev1, chebyshev2");
  interp->add_option("-k,--degree", c.degree, "grade of the interpolant")->required();
  interp->add_option("--nodes", c.nodes, "cheb1, cheb2 or a node file");
  interp->add_option("--grid", c.grid, "report max deviation on this many points of [-1, 1]");

  CLI::App* lin = app.add_subcommand("linearize", "build a colleague or family pencil");
  common(lin, true);
  param(lin);

  CLI::App* solve = app.add_subcommand("solve", "solve the polynomial eigenproblem");
  common(solve, true);
  param(solve);
  solve->add_flag("--no-left", c.no_left, "skip left eigenvectors");

  CLI::App* verify = app.add_subcommand("verify", "check a linearization");
  common(verify, true);
  param(verify);
  verify->add_option("--pencil", c.pencil, "pencil file to check instead of building one");

  CLI::App* null = app.add_subcommand("nullspace", "minimal bases of a singular polynomial");
  common(null, true);
  null->add_option("-p,--param,--mu,--eps", c.param, "parameter of the pencil used (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_to_json(ErrorCode::InvalidInput, e.what()) << "\n";
    return kInputError;
  }

  try {
    if (*interp) return cmd_interp(c);
    if (*lin) return cmd_linearize(c);
    if (*solve) return cmd_solve(c);
    if (*verify) return cmd_verify(c);
    return cmd_nullspace(c);
  } catch (const Error& e) {
    std::cerr << error_to_json(e.code(), e.what()) << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << error_to_json(ErrorCode::InvalidInput, e.what()) << "\n";
    return kInputError;
  }
}
