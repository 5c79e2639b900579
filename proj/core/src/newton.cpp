#include "bmbp/newton.hpp"

#include <string>

namespace bmbp {

namespace {

void check_newton(const MatrixPolynomial& P, int mu) {
  if (P.kind() != BasisKind::Newton)
    throw Error(ErrorCode::UnsupportedBasis, "expected a polynomial in the Newton basis");
  if (P.grade() < 1) throw Error(ErrorCode::ParamRange, "grade must be at least 1");
  if (mu < 0 || mu > P.grade() - 1)
    throw Error(ErrorCode::ParamRange, "mu must lie in [0, k-1], got " + std::to_string(mu));
}

bool near_any(const NodeSet& x, int from, int to, cplx l, double tol) {
  for (int j = from; j <= to; ++j)
    if (std::abs(l - x.x(j)) <= tol * (1.0 + std::abs(x.x(j)))) return true;
  return false;
}

}  // namespace

KDPair build_K_D_newton(const NodeSet& nodes, int k, int mu, Index n, Index m) {
  if (k < 1 || mu < 0 || mu > k - 1) throw Error(ErrorCode::ParamRange, "mu must lie in [0, k-1]");
  if (static_cast<int>(nodes.size()) != k)
    throw Error(ErrorCode::InvalidInput, "Newton basis of grade k needs k nodes");
  const int q = k - mu, p = mu + 1;
  const Mat In = Mat::Identity(n, n), Im = Mat::Identity(m, m);
  KDPair kd;
  kd.K1 = PolyMatrix((q - 1) * n, q * n, 1);
  for (int j = 1; j <= q - 1; ++j) {
    kd.K1.set_block((j - 1) * n, (j - 1) * n, PolyMatrix::constant(-In));
    kd.K1.set_block((j - 1) * n, j * n, scale(gamma_poly(nodes, k - j), In));
  }
  kd.D1 = PolyMatrix(n, q * n, q - 1);
  for (int j = 1; j <= q; ++j)
    kd.D1.set_block(0, (j - 1) * n, scale(newton_aux_poly(nodes, mu + 1, k - j), In));

  kd.K2 = PolyMatrix((p - 1) * m, p * m, 1);
  for (int j = 1; j <= p - 1; ++j) {
    kd.K2.set_block((j - 1) * m, (j - 1) * m, PolyMatrix::constant(-Im));
    kd.K2.set_block((j - 1) * m, j * m, scale(gamma_poly(nodes, mu + 1 - j), Im));
  }
  kd.D2 = PolyMatrix(m, p * m, p - 1);
  for (int j = 1; j <= p; ++j)
    kd.D2.set_block(0, (j - 1) * m, scale(newton_aux_poly(nodes, 1, mu + 1 - j), Im));
  return kd;
}

NewtonLinearization colleague_newton(const MatrixPolynomial& P, int mu) {
  check_newton(P, mu);
  const int k = P.grade(), q = k - mu, p = mu + 1;
  const Index m = P.rows(), n = P.cols();
  const NodeSet& x = P.nodes();

  PolyMatrix M(p * m, q * n, 1);
  M.set_block(0, 0, scale(gamma_poly(x, k), P.P(k)) + PolyMatrix::constant(P.P(k - 1)));
  for (int j = 1; j <= q - 1; ++j) M.set_block(0, j * n, PolyMatrix::constant(P.P(k - 1 - j)));
  for (int i = 1; i <= mu; ++i) M.set_block(i * m, (q - 1) * n, PolyMatrix::constant(P.P(mu - i)));

  NewtonLinearization lin;
  lin.family = Family::Newton;
  lin.param = mu;
  lin.kd = build_K_D_newton(x, k, mu, n, m);
  lin.M = M;
  lin.A = Mat::Zero(p * m, (q - 1) * n);
  lin.B = Mat::Zero((p - 1) * m, q * n);
  lin.source = P;
  lin.m = m;
  lin.n = n;
  lin.k = k;
  lin.pencil = assemble(M, lin.kd.K1, lin.kd.K2, m, n, Family::Newton, mu);
  return lin;
}

NewtonLinearization family_newton(const MatrixPolynomial& P, int mu, const Mat& A, const Mat& B) {
  return apply_family(colleague_newton(P, mu), A, B);
}

Mat newton_horner(const MatrixPolynomial& P, int i, cplx lambda) {
  if (P.kind() != BasisKind::Newton) throw Error(ErrorCode::UnsupportedBasis, "expected Newton basis");
  const int k = P.grade();
  if (i < 1 || i > k) throw Error(ErrorCode::IndexRange, "Horner shift index must lie in [1, k]");
  const NodeSet& x = P.nodes();
  Mat acc = (lambda - x.x(k)) * P.P(k) + P.P(k - 1);
  for (int t = 1; t < i; ++t) acc = (lambda - x.x(k - t)) * acc + P.P(k - t - 1);
  return acc;
}

PolyMatrix newton_horner_poly(const MatrixPolynomial& P, int i) {
  if (P.kind() != BasisKind::Newton) throw Error(ErrorCode::UnsupportedBasis, "expected Newton basis");
  const int k = P.grade();
  if (i < 1 || i > k) throw Error(ErrorCode::IndexRange, "Horner shift index must lie in [1, k]");
  const NodeSet& x = P.nodes();
  PolyMatrix acc = scale(gamma_poly(x, k), P.P(k)) + PolyMatrix::constant(P.P(k - 1));
  for (int t = 1; t < i; ++t)
    acc = PolyMatrix::scalar(gamma_poly(x, k - t), P.rows()) * acc + PolyMatrix::constant(P.P(k - t - 1));
  return acc;
}

OneSided one_sided_newton(const MatrixPolynomial& P, int mu) {
  check_newton(P, mu);
  const int k = P.grade(), q = k - mu, p = mu + 1;
  const Index m = P.rows(), n = P.cols();
  const KDPair kd = build_K_D_newton(P.nodes(), k, mu, n, m);

  OneSided os;
  os.H = PolyMatrix(q * n + (p - 1) * m, n, k);
  os.H.set_block(0, 0, kd.D1.transpose());
  for (int i = 1; i <= p - 1; ++i)
    os.H.set_block(q * n + (i - 1) * m, 0, newton_horner_poly(P, q + i - 1));

  os.G = PolyMatrix(m, p * m + (q - 1) * n, k);
  os.G.set_block(0, 0, kd.D2);
  const PolyMatrix n1mu = PolyMatrix::scalar(newton_aux_poly(P.nodes(), 1, mu), m);
  for (int i = 1; i <= q - 1; ++i)
    os.G.set_block(0, p * m + (i - 1) * n, n1mu * newton_horner_poly(P, i));

  os.row_weights = Vec::Zero(p);
  os.row_weights(p - 1) = 1.0;
  os.col_weights = Vec::Zero(q);
  os.col_weights(q - 1) = 1.0;
  return os;
}

RecoveredVector recover_eigvec_newton(const NewtonLinearization& lin, const Eigenvalue& lambda0,
                                      const Vec& v, Side side, const Tolerances& tol) {
  RecoveredVector r;
  const int k = lin.k, mu = lin.param, q = lin.q(), p = lin.p();
  const int count = side == Side::Right ? q : p;
  if (lambda0.infinite) {
    r.block = 1;
    r.valid_blocks = {1};
    for (int b = 2; b <= count; ++b) r.unreliable_blocks.push_back(b);
  } else {
    const NodeSet& x = lin.source.nodes();
    const bool excluded = side == Side::Right ? near_any(x, mu + 1, k - 1, lambda0.value, tol.node_match)
                                              : near_any(x, 1, mu, lambda0.value, tol.node_match);
    r.block = count;
    for (int b = 1; b <= count; ++b) {
      if (b == count || !excluded)
        r.valid_blocks.push_back(b);
      else
        r.unreliable_blocks.push_back(b);
    }
  }
  r.x = vector_block(lin.pencil, v, side, r.block);
  require_nonzero_block(r.x, r.block);
  return r;
}

RecoveredBasis recover_minimal_newton(const NewtonLinearization& lin, const PolyVectorBasis& basis,
                                      Side side) {
  if (side == Side::Right) {
    Vec w = Vec::Zero(lin.q());
    w(lin.q() - 1) = 1.0;
    return recover_weighted_basis(lin.pencil, basis, side, w, lin.q() - 1);
  }
  Vec w = Vec::Zero(lin.p());
  w(lin.p() - 1) = 1.0;
  return recover_weighted_basis(lin.pencil, basis, side, w, lin.p() - 1);
}

}  // namespace bmbp
