#include "bmbp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "lapack.hpp"
#include "linalg.hpp"

namespace bmbp {

// ---- family dispatch ----

Linearization linearize(const MatrixPolynomial& P, int param, const Mat& A, const Mat& B) {
  const Family f = family_for_basis(P.kind());
  const bool colleague = A.size() == 0 && B.size() == 0;
  switch (f) {
    case Family::Newton:
      return colleague ? colleague_newton(P, param) : family_newton(P, param, A, B);
    case Family::Lagrange:
      return colleague ? colleague_lagrange(P, param) : family_lagrange(P, param, A, B);
    default:
      return colleague ? colleague_cheb(P, param) : family_cheb(P, param, A, B);
  }
}

KDPair build_K_D(const MatrixPolynomial& P, int param) {
  const int k = P.grade();
  switch (family_for_basis(P.kind())) {
    case Family::Newton:
      return build_K_D_newton(P.nodes(), k, param, P.cols(), P.rows());
    case Family::Lagrange:
      return build_K_D_lagrange(P.nodes(), k, param, P.cols(), P.rows());
    default:
      if (param < 0 || param > k - 1)
        throw Error(ErrorCode::ParamRange, "eps must lie in [0, k-1]");
      return build_K_D_cheb(k, param, P.chebyshev_kind(), 2, P.cols(), P.rows());
  }
}

OneSided one_sided(const MatrixPolynomial& P, int param) {
  switch (family_for_basis(P.kind())) {
    case Family::Newton:
      return one_sided_newton(P, param);
    case Family::Lagrange:
      return one_sided_lagrange(P, param);
    default:
      return one_sided_cheb(P, param);
  }
}

RecoveredVector recover_eigvec(const Linearization& lin, const Eigenvalue& lambda0, const Vec& v,
                               Side side, const Tolerances& tol) {
  switch (lin.family) {
    case Family::Newton:
      return recover_eigvec_newton(lin, lambda0, v, side, tol);
    case Family::Lagrange:
      return recover_eigvec_lagrange(lin, lambda0, v, side, tol);
    case Family::Cheb1:
    case Family::Cheb2:
      return recover_eigvec_cheb(lin, lambda0, v, side);
    default:
      throw Error(ErrorCode::UnsupportedBasis, "no recovery rule for a generic pencil");
  }
}

RecoveredBasis recover_minimal(const Linearization& lin, const PolyVectorBasis& basis, Side side) {
  switch (lin.family) {
    case Family::Newton:
      return recover_minimal_newton(lin, basis, side);
    case Family::Lagrange:
      return recover_minimal_lagrange(lin, basis, side);
    case Family::Cheb1:
    case Family::Cheb2:
      return recover_minimal_cheb(lin, basis, side);
    default:
      throw Error(ErrorCode::UnsupportedBasis, "no recovery rule for a generic pencil");
  }
}

// ---- generalized eigenproblem ----

GepResult solve_gep(const Mat& L0, const Mat& L1, bool want_left, const Tolerances& tol) {
  if (L0.rows() != L0.cols() || L1.rows() != L1.cols() || L0.rows() != L1.rows())
    throw Error(ErrorCode::DimensionMismatch, "solve_gep needs square pencils of equal size");
  GepResult out;
  if (L0.rows() == 0) return out;
  detail::GeneralizedEig g = detail::zggev(-L0, L1, true, want_left);
  out.alpha = g.alpha;
  out.beta = g.beta;
  out.right = g.right;
  for (Index j = 0; j < out.right.cols(); ++j) {
    const double nv = out.right.col(j).norm();
    if (nv > 0) out.right.col(j) /= nv;
  }
  if (want_left) {
    out.left = g.left.conjugate();
    for (Index j = 0; j < out.left.cols(); ++j) {
      const double nv = out.left.col(j).norm();
      if (nv > 0) out.left.col(j) /= nv;
    }
  }
  const double scale = std::hypot(L0.norm(), L1.norm());
  for (size_t j = 0; j < g.alpha.size(); ++j) {
    const cplx a = g.alpha[j], b = g.beta[j];
    const double h = std::hypot(std::abs(a), std::abs(b));
    if (std::abs(b) <= tol.infinite_beta * h)
      out.values.push_back(Eigenvalue::inf());
    else
      out.values.push_back(Eigenvalue::finite(a / b));
    double cond = 0.0;
    if (want_left) {
      const Index c = static_cast<Index>(j);
      const cplx y0 = (out.left.col(c).transpose() * L0 * out.right.col(c))(0);
      const cplx y1 = (out.left.col(c).transpose() * L1 * out.right.col(c))(0);
      const double den = std::hypot(std::abs(y0), std::abs(y1));
      cond = den > 0 ? scale / den : std::numeric_limits<double>::infinity();
    }
    out.condition.push_back(cond);
  }
  return out;
}

std::vector<Eigenvalue> companion_eigenvalues(const PolyMatrix& C, const Tolerances& tol) {
  const BlockPencil cp = companion_pencil(C);
  return solve_gep(cp.L0, cp.L1, false, tol).values;
}

namespace {

bool near_infinity(const Eigenvalue& e, double tol) {
  return e.infinite || chordal_distance(e, Eigenvalue::inf()) <= tol;
}

}  // namespace

SpectrumMatch match_spectra(const std::vector<Eigenvalue>& a, const std::vector<Eigenvalue>& b,
                            double inf_tol) {
  SpectrumMatch out;
  out.same_size = a.size() == b.size();
  for (const auto& e : a) out.infinite_a += near_infinity(e, inf_tol) ? 1 : 0;
  for (const auto& e : b) out.infinite_b += near_infinity(e, inf_tol) ? 1 : 0;
  if (!out.same_size) {
    out.max_distance = std::numeric_limits<double>::infinity();
    return out;
  }
  const size_t n = a.size();
  std::vector<char> used_a(n, 0), used_b(n, 0);
  for (size_t step = 0; step < n; ++step) {
    double best = std::numeric_limits<double>::infinity();
    size_t bi = 0, bj = 0;
    for (size_t i = 0; i < n; ++i) {
      if (used_a[i]) continue;
      for (size_t j = 0; j < n; ++j) {
        if (used_b[j]) continue;
        const double d = chordal_distance(a[i], b[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    used_a[bi] = used_b[bj] = 1;
    out.max_distance = std::max(out.max_distance, best);
  }
  return out;
}

// ---- polynomial eigenproblem ----

namespace {

double spectral_norm(const Mat& a) {
  const Eigen::VectorXd s = detail::singular_values(a);
  return s.size() ? s(0) : 0.0;
}

// Leading monomial coefficient (degree k) of each basis function.
std::vector<cplx> leading_coefficients(const MatrixPolynomial& P) {
  const int k = P.grade();
  std::vector<cplx> out;
  for (const Poly& phi : basis_polynomials(P.basis(), k))
    out.push_back(static_cast<int>(phi.size()) > k ? phi[static_cast<size_t>(k)] : cplx(0.0));
  return out;
}

std::vector<double> coefficient_norms(const MatrixPolynomial& P) {
  std::vector<double> out;
  for (int i = 0; i <= P.grade(); ++i) out.push_back(spectral_norm(P.coeff(i)));
  return out;
}

double backward_error_with(const MatrixPolynomial& P, const std::vector<double>& norms,
                           const Eigenvalue& lambda, const Vec& x, Side side) {
  const double nx = x.norm();
  if (nx == 0.0) throw Error(ErrorCode::InvalidInput, "backward error of a zero vector");
  const int k = P.grade();
  std::vector<cplx> w;
  Mat value;
  if (lambda.infinite) {
    w = leading_coefficients(P);
    value = Mat::Zero(P.rows(), P.cols());
    for (int i = 0; i <= k; ++i) value += w[static_cast<size_t>(i)] * P.coeff(i);
  } else {
    w = basis_values(P.basis(), k, lambda.value);
    value = evaluate(P, lambda.value);
  }
  double den = 0.0;
  bool all_zero = true;
  for (int i = 0; i <= k; ++i) {
    if (norms[static_cast<size_t>(i)] > 0) all_zero = false;
    den += norms[static_cast<size_t>(i)] * std::abs(w[static_cast<size_t>(i)]);
  }
  if (all_zero) throw Error(ErrorCode::InvalidInput, "backward error: all coefficients are zero");
  const double num = side == Side::Right ? (value * x).norm() : (x.transpose() * value).norm();
  if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return num / (den * nx);
}

}  // namespace

double backward_error(const MatrixPolynomial& P, const Eigenvalue& lambda, const Vec& x, Side side) {
  return backward_error_with(P, coefficient_norms(P), lambda, x, side);
}

int normal_rank(const PolyMatrix& Q, std::uint64_t seed, int points, double rel) {
  std::mt19937_64 rng(seed);
  int best = 0;
  for (int t = 0; t < points; ++t) {
    const cplx l = detail::random_point(rng, 1.0);
    best = std::max(best, detail::numerical_rank(Q(l), rel));
  }
  return best;
}

bool likely_singular(const MatrixPolynomial& P, std::uint64_t seed) {
  if (!P.is_square()) return true;
  std::mt19937_64 rng(seed);
  int best = 0;
  for (int t = 0; t < 5; ++t)
    best = std::max(best, detail::numerical_rank(evaluate(P, detail::random_point(rng, 1.0)), 1e-10));
  return best < P.rows();
}

EigenSolution solve_linearization(const Linearization& lin, bool want_left, const Tolerances& tol) {
  const GepResult g = solve_gep(lin.pencil.L0, lin.pencil.L1, want_left, tol);
  const double scale = std::hypot(lin.pencil.L0.norm(), lin.pencil.L1.norm());
  for (size_t j = 0; j < g.alpha.size(); ++j) {
    if (std::abs(g.alpha[j]) <= 1e-13 * scale && std::abs(g.beta[j]) <= 1e-13 * scale)
      throw Error(ErrorCode::LikelySingular,
                  "the pencil has a degenerate eigenvalue pair; the input looks singular, use nullspace");
  }
  EigenSolution sol;
  const std::vector<double> norms = coefficient_norms(lin.source);
  for (size_t j = 0; j < g.values.size(); ++j) {
    const Index c = static_cast<Index>(j);
    EigenPair pair;
    pair.lambda = g.values[j];
    pair.condition = g.condition[j];
    const RecoveredVector r = recover_eigvec(lin, pair.lambda, g.right.col(c), Side::Right, tol);
    pair.right = r.x / r.x.norm();
    pair.recovered_from = r.block;
    pair.residual_right = backward_error_with(lin.source, norms, pair.lambda, pair.right, Side::Right);
    if (want_left) {
      const RecoveredVector l = recover_eigvec(lin, pair.lambda, g.left.col(c), Side::Left, tol);
      pair.left = l.x / l.x.norm();
      pair.recovered_from_left = l.block;
      pair.residual_left = backward_error_with(lin.source, norms, pair.lambda, *pair.left, Side::Left);
    }
    sol.pairs.push_back(std::move(pair));
  }
  sort_pairs(sol);
  return sol;
}

EigenSolution solve_pep(const MatrixPolynomial& P, int param, const SolveOptions& opts) {
  family_for_basis(P.kind());
  if (!P.is_square())
    throw Error(ErrorCode::LikelySingular,
                "the polynomial is not square and therefore singular; use nullspace");
  if (likely_singular(P, opts.seed))
    throw Error(ErrorCode::LikelySingular,
                "the polynomial is rank deficient at every probe point; use nullspace");
  const Linearization lin = linearize(P, param, opts.A, opts.B);
  return solve_linearization(lin, opts.want_left, opts.tol);
}

void sort_pairs(EigenSolution& sol) {
  std::stable_sort(sol.pairs.begin(), sol.pairs.end(), [](const EigenPair& a, const EigenPair& b) {
    if (a.lambda.infinite != b.lambda.infinite) return b.lambda.infinite;
    if (a.lambda.infinite) return false;
    const double ma = std::abs(a.lambda.value), mb = std::abs(b.lambda.value);
    if (ma != mb) return ma < mb;
    return std::arg(a.lambda.value) < std::arg(b.lambda.value);
  });
}

// ---- minimal bases ----

namespace {

// Coefficient vectors of lambda^s v(lambda) inside degree-d coefficient space.
Vec shifted_coefficients(const PolyMatrix& v, int shift, int d) {
  const Index c = v.rows();
  Vec out = Vec::Zero(c * (d + 1));
  for (int j = 0; j <= v.degree_bound(); ++j) out.segment((j + shift) * c, c) = v.coeff(j).col(0);
  return out;
}

PolyMatrix from_coefficients(const Vec& z, Index c, int d) {
  PolyMatrix v(c, 1, d);
  for (int j = 0; j <= d; ++j) v.coeff(j).col(0) = z.segment(j * c, c);
  return v;
}

PolyVectorBasis right_minimal_basis(const PolyMatrix& Q, const Tolerances& tol, std::uint64_t seed) {
  PolyVectorBasis out;
  out.side = Side::Right;
  const Index r = Q.rows(), c = Q.cols();
  const int D = std::max(Q.degree(), 0);
  const int rank = normal_rank(Q, seed, 5, tol.nullspace_rank);
  const int nullity = static_cast<int>(c) - rank;
  if (nullity <= 0) return out;
  const int max_degree = std::max(D * rank, 0) + 1;
  for (int d = 0; d <= max_degree && static_cast<int>(out.vectors.size()) < nullity; ++d) {
    const Index cols = c * (d + 1);
    Mat T = Mat::Zero(r * (D + d + 1), cols);
    for (int j = 0; j <= d; ++j)
      for (int i = 0; i <= D; ++i) T.block((i + j) * r, j * c, r, c) = Q.coeff(i);
    Eigen::BDCSVD<Mat> svd(T, Eigen::ComputeFullV);
    const Eigen::VectorXd s = svd.singularValues();
    const double smax = s.size() ? s(0) : 0.0;
    auto count_null = [&](double rel) {
      Index above = 0;
      for (Index i = 0; i < s.size(); ++i)
        if (smax > 0 && s(i) > rel * smax) ++above;
      return cols - above;
    };
    const Index dim_null = count_null(tol.nullspace_rank);
    const Index loose = count_null(tol.nullspace_rank * 100.0);
    const Index tight = count_null(tol.nullspace_rank * 0.01);
    if (loose != tight)
      out.warnings.push_back("degree " + std::to_string(d) + ": nullspace dimension is " +
                             std::to_string(tight) + " or " + std::to_string(loose) +
                             " depending on the rank cut");
    if (dim_null == 0) continue;
    const Mat N = svd.matrixV().rightCols(dim_null);

    Mat E(cols, 0);
    for (size_t i = 0; i < out.vectors.size(); ++i) {
      for (int sft = 0; sft <= d - out.degrees[i]; ++sft) {
        E.conservativeResize(Eigen::NoChange, E.cols() + 1);
        E.col(E.cols() - 1) = shifted_coefficients(out.vectors[i], sft, d);
      }
    }
    Mat proj = N;
    Index rank_e = 0;
    if (E.cols() > 0) {
      Eigen::BDCSVD<Mat> es(E, Eigen::ComputeThinU);
      const Eigen::VectorXd se = es.singularValues();
      for (Index i = 0; i < se.size(); ++i)
        if (se(i) > 1e-8 * se(0)) ++rank_e;
      const Mat U = es.matrixU().leftCols(rank_e);
      proj = N - U * (U.adjoint() * N);
    }
    const Index fresh = dim_null - rank_e;
    if (fresh <= 0) continue;
    Eigen::BDCSVD<Mat> ps(proj, Eigen::ComputeThinU);
    const Index take = std::min<Index>(fresh, nullity - static_cast<Index>(out.vectors.size()));
    for (Index i = 0; i < take; ++i) {
      out.vectors.push_back(from_coefficients(ps.matrixU().col(i), c, d));
      out.degrees.push_back(d);
    }
  }
  if (static_cast<int>(out.vectors.size()) < nullity)
    out.warnings.push_back("found " + std::to_string(out.vectors.size()) + " of " +
                           std::to_string(nullity) + " expected basis vectors");
  return out;
}

}  // namespace

PolyVectorBasis nullspace_minimal_basis(const PolyMatrix& Q, Side side, const Tolerances& tol,
                                        std::uint64_t seed) {
  PolyVectorBasis out = right_minimal_basis(side == Side::Right ? Q : Q.transpose(), tol, seed);
  out.side = side;
  out.certificate = PolyVectorBasis::Certificate::Probabilistic;
  return out;
}

PolyVectorBasis nullspace_minimal_basis(const BlockPencil& L, Side side, const Tolerances& tol,
                                        std::uint64_t seed) {
  return nullspace_minimal_basis(L.as_poly(), side, tol, seed);
}

PolyVectorBasis nullspace_minimal_basis(const MatrixPolynomial& P, Side side,
                                        const Tolerances& tol, std::uint64_t seed) {
  return nullspace_minimal_basis(monomial_coefficients(P), side, tol, seed);
}

// ---- verification ----

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

double relative_coefficient_error(const PolyMatrix& A, const PolyMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return std::numeric_limits<double>::infinity();
  const int d = std::max(A.degree_bound(), B.degree_bound());
  double err = 0.0, scale = 0.0;
  for (int j = 0; j <= d; ++j) {
    const Mat a = j <= A.degree_bound() ? A.coeff(j) : Mat::Zero(A.rows(), A.cols());
    const Mat b = j <= B.degree_bound() ? B.coeff(j) : Mat::Zero(B.rows(), B.cols());
    err = std::max(err, (a - b).norm());
    scale = std::max(scale, b.norm());
  }
  return scale > 0 ? err / scale : err;
}

namespace {

Family expected_family(const MatrixPolynomial& P) {
  return family_for_basis(P.kind());
}

}  // namespace

VerifyReport verify_strong_linearization(const BlockPencil& L, const MatrixPolynomial& P,
                                         const Tolerances& tol, std::uint64_t seed) {
  if (likely_singular(P, seed))
    throw Error(ErrorCode::LikelySingular,
                "spectral checks need a regular polynomial; use nullspace for singular input");
  VerifyReport rep;
  const int k = P.grade();
  const Index n = P.rows();

  VerifyCheck size{"PENCIL_SIZE", false, static_cast<double>(L.L0.rows()),
                   static_cast<double>(k * n), ""};
  size.pass = L.L0.rows() == L.L0.cols() && L.L1.rows() == L.L0.rows() &&
              L.L1.cols() == L.L0.cols() && L.L0.rows() == k * n;
  if (!size.pass) size.detail = "pencil is not square of size k*n";
  rep.checks.push_back(size);
  if (!size.pass) return rep;

  if (L.family != Family::Generic) {
    bool family_ok = false;
    try {
      family_ok = expected_family(P) == L.family;
    } catch (const Error&) {
      family_ok = false;
    }
    if (!family_ok) {
      rep.checks.push_back({"FAMILY_MATCH", false, 0.0, 0.0,
                            std::string("pencil family ") + family_name(L.family) +
                                " does not match the polynomial basis"});
    } else {
      const KDPair kd = build_K_D(P, L.param);
      const PolyMatrix K1 = L.k1(), K2 = L.k2();
      auto duality = [&](const char* name, const PolyMatrix& K, const PolyMatrix& D) {
        VerifyCheck c{name, false, 0.0, 0.0, ""};
        if (K.cols() != D.cols()) {
          c.measured = std::numeric_limits<double>::infinity();
          c.detail = "block structure does not match the family";
        } else if (K.rows() == 0) {
          c.pass = true;
        } else {
          const DualityReport d = check_duality({K, D, L.family, L.param, 0}, 1.0, tol);
          c.measured = d.defect;
          c.threshold = tol.duality * d.scale;
          c.pass = d.ok;
        }
        rep.checks.push_back(c);
      };
      duality("DUALITY_K1D1", K1, kd.D1);
      duality("DUALITY_K2D2", K2, kd.D2);
      VerifyCheck id{"D2MD1T_IDENTITY", false, 0.0, tol.identity, ""};
      const PolyMatrix body = L.body();
      if (body.rows() != kd.D2.cols() || body.cols() != kd.D1.cols()) {
        id.measured = std::numeric_limits<double>::infinity();
        id.detail = "body is not conformable with the dual bases";
      } else {
        id.measured = relative_coefficient_error(body_product(body, kd.D1, kd.D2),
                                                 monomial_coefficients(P));
        id.pass = id.measured <= tol.identity;
      }
      rep.checks.push_back(id);
    }
  }

  const std::vector<Eigenvalue> mine = solve_gep(L.L0, L.L1, false, tol).values;
  const std::vector<Eigenvalue> oracle = companion_eigenvalues(monomial_coefficients(P), tol);
  const SpectrumMatch sm = match_spectra(mine, oracle, tol.chordal);
  VerifyCheck multiset{"EIGENVALUE_MULTISET", sm.same_size && sm.max_distance <= tol.chordal,
                   sm.max_distance, tol.chordal, ""};
  if (!sm.same_size) multiset.detail = "eigenvalue counts differ";
  rep.checks.push_back(multiset);

  // Infinite eigenvalues of P are the zero eigenvalues of rev_k P.
  const std::vector<Eigenvalue> rev = companion_eigenvalues(monomial_coefficients(reverse(P)), tol);
  int zeros = 0;
  for (const auto& e : rev)
    if (!e.infinite && chordal_distance(e, Eigenvalue::finite(0.0)) <= tol.chordal) ++zeros;
  VerifyCheck inf{"INFINITE_COUNT", sm.infinite_a == zeros, static_cast<double>(sm.infinite_a),
                  static_cast<double>(zeros), ""};
  rep.checks.push_back(inf);
  return rep;
}

std::vector<VerifyCheck> check_one_sided(const Linearization& lin, const Tolerances& tol) {
  const OneSided f = one_sided(lin.source, lin.param);
  const PolyMatrix Lp = lin.pencil.as_poly();
  const Index m = lin.m, n = lin.n;
  VerifyCheck right{"ONE_SIDED_RIGHT", false, 0.0, tol.identity, ""};
  VerifyCheck left{"ONE_SIDED_LEFT", false, 0.0, tol.identity, ""};
  const int count = 1 + std::max(f.H.degree_bound(), f.G.degree_bound()) + 1;
  for (const cplx l : sample_points(count, 1.0)) {
    const Mat Lv = Lp(l), Pv = evaluate(lin.source, l);
    const Mat H = f.H(l), G = f.G(l);
    Mat rhs = Mat::Zero(Lv.rows(), n);
    for (Index b = 0; b < f.row_weights.size(); ++b) rhs.block(b * m, 0, m, n) = f.row_weights(b) * Pv;
    Mat lhs = Mat::Zero(m, Lv.cols());
    for (Index b = 0; b < f.col_weights.size(); ++b) lhs.block(0, b * n, m, n) = f.col_weights(b) * Pv;
    right.measured = std::max(right.measured, (Lv * H - rhs).norm() / std::max(1.0, Lv.norm() * H.norm()));
    left.measured = std::max(left.measured, (G * Lv - lhs).norm() / std::max(1.0, Lv.norm() * G.norm()));
  }
  right.pass = right.measured <= tol.identity;
  left.pass = left.measured <= tol.identity;
  return {right, left};
}

}  // namespace bmbp
