#include "bmbp/chebyshev.hpp"

#include <string>

namespace bmbp {

namespace {

int check_cheb(const MatrixPolynomial& P, int eps) {
  const int r = P.chebyshev_kind();
  if (P.grade() < 1) throw Error(ErrorCode::ParamRange, "grade must be at least 1");
  if (eps < 0 || eps > P.grade() - 1)
    throw Error(ErrorCode::ParamRange, "eps must lie in [0, k-1], got " + std::to_string(eps));
  return r;
}

PolyMatrix cheb_K(int rows, int kind, Index b) {
  const Mat I = Mat::Identity(b, b);
  PolyMatrix K(rows * b, (rows + 1) * b, 1);
  for (int j = 0; j < rows; ++j) {
    K.set_block(j * b, j * b, PolyMatrix::constant(I));
    if (j < rows - 1) {
      K.set_block(j * b, (j + 1) * b, PolyMatrix::linear(Mat::Zero(b, b), -2.0 * I));
      K.set_block(j * b, (j + 2) * b, PolyMatrix::constant(I));
    } else {
      K.set_block(j * b, (j + 1) * b, scale(poly_scale(chebyshev_phi_poly(kind, 1), -1.0), I));
    }
  }
  return K;
}

PolyMatrix cheb_D(int deg, int kind, Index b) {
  const Mat I = Mat::Identity(b, b);
  PolyMatrix D(b, (deg + 1) * b, deg);
  for (int j = 0; j <= deg; ++j) D.set_block(0, j * b, scale(chebyshev_phi_poly(kind, deg - j), I));
  return D;
}

}  // namespace

KDPair build_K_D_cheb(int k, int eps, int kind1, int kind2, Index n, Index m) {
  if (k < 1 || eps < 0 || eps > k - 1) throw Error(ErrorCode::ParamRange, "eps must lie in [0, k-1]");
  if ((kind1 != 1 && kind1 != 2) || (kind2 != 1 && kind2 != 2))
    throw Error(ErrorCode::ParamRange, "Chebyshev kind must be 1 or 2");
  KDPair kd;
  kd.K1 = cheb_K(eps, kind1, n);
  kd.D1 = cheb_D(eps, kind1, n);
  kd.K2 = cheb_K(k - 1 - eps, kind2, m);
  kd.D2 = cheb_D(k - 1 - eps, kind2, m);
  return kd;
}

ChebLinearization colleague_cheb(const MatrixPolynomial& P, int eps) {
  const int r = check_cheb(P, eps);
  const int k = P.grade(), R = k - eps, C = eps + 1;
  const Index m = P.rows(), n = P.cols();
  auto Pc = [&](int i) { return PolyMatrix::constant(P.P(i)); };
  const PolyMatrix lead = PolyMatrix::linear(P.P(k - 1), 2.0 * P.P(k));

  PolyMatrix M(R * m, C * n, 1);
  if (eps == 0 && r == 1) {
    // Halved block column.
    M.set_block(0, 0, 0.5 * (k == 1 ? PolyMatrix::linear(2.0 * P.P(0), 2.0 * P.P(1)) : lead));
    for (int i = 2; i <= k; ++i) {
      const double c = k - i == 0 ? 2.0 : 1.0, d = i == 2 ? 2.0 : 1.0;
      M.set_block((i - 1) * m, 0, PolyMatrix::constant(0.5 * (c * P.P(k - i) - d * P.P(k + 2 - i))));
    }
  } else {
    M.set_block(0, 0, lead);
    for (int row = 1; row < R; ++row) {
      Mat v = P.P(k - 1 - row);
      if (row == 1) v -= P.P(k);
      M.set_block(row * m, 0, PolyMatrix::constant(v));
    }
    if (C > 1) {
      for (int row = 0; row <= R - 2; ++row) M.set_block(row * m, n, PolyMatrix::constant(-P.P(k - row)));
      M.set_block((R - 1) * m, n, PolyMatrix::constant(P.P(eps - 1) - P.P(eps + 1)));
      for (int c = 2; c < C; ++c) M.set_block((R - 1) * m, c * n, Pc(eps - c));
    }
  }

  ChebLinearization lin;
  lin.family = r == 1 ? Family::Cheb1 : Family::Cheb2;
  lin.param = eps;
  lin.kd = build_K_D_cheb(k, eps, r, 2, n, m);
  lin.M = M;
  lin.A = Mat::Zero(R * m, eps * n);
  lin.B = Mat::Zero((R - 1) * m, C * n);
  lin.source = P;
  lin.m = m;
  lin.n = n;
  lin.k = k;
  lin.pencil = assemble(M, lin.kd.K1, lin.kd.K2, m, n, lin.family, eps);
  return lin;
}

ChebLinearization family_cheb(const MatrixPolynomial& P, int eps, const Mat& A, const Mat& B) {
  return apply_family(colleague_cheb(P, eps), A, B);
}

Mat cheb_horner(const MatrixPolynomial& P, int eps, int i, cplx lambda, int r) {
  P.chebyshev_kind();
  const int k = P.grade();
  if (eps < 0 || eps > k) throw Error(ErrorCode::IndexRange, "eps out of range");
  if (i < 0 || i > k - eps) throw Error(ErrorCode::IndexRange, "Horner shift index must lie in [0, k-eps]");
  // cur[e - lo] = P^t_e for e in [lo, eps], lo = eps - i.
  const int lo = eps - i;
  std::vector<Mat> cur;
  for (int e = lo; e <= eps; ++e) cur.push_back(chebyshev_phi(r, e, lambda) * P.P(k));
  for (int t = 0; t < i; ++t) {
    std::vector<Mat> next(cur.size());
    for (int e = lo + t + 1; e <= eps; ++e) {
      const size_t at = static_cast<size_t>(e - lo);
      next[at] = 2.0 * lambda * cur[at] - cur[at - 1] + chebyshev_phi(r, e, lambda) * P.P(k - t - 1);
    }
    cur = std::move(next);
  }
  return cur.back();
}

PolyMatrix cheb_horner_poly(const MatrixPolynomial& P, int eps, int i, int r) {
  P.chebyshev_kind();
  const int k = P.grade();
  if (eps < 0 || eps > k) throw Error(ErrorCode::IndexRange, "eps out of range");
  if (i < 0 || i > k - eps) throw Error(ErrorCode::IndexRange, "Horner shift index must lie in [0, k-eps]");
  PolyMatrix acc(P.rows(), P.cols(), eps + i);
  for (int t = 0; t <= i; ++t) acc = acc + scale(chebyshev_phi_poly(r, eps + i - t), P.P(k - t));
  return acc;
}

OneSided one_sided_cheb(const MatrixPolynomial& P, int eps) {
  const int r = check_cheb(P, eps);
  const int k = P.grade(), p = k - eps, q = eps + 1;
  const Index m = P.rows(), n = P.cols();
  const KDPair kd = build_K_D_cheb(k, eps, r, 2, n, m);

  OneSided os;
  os.H = PolyMatrix(q * n + (p - 1) * m, n, k);
  os.H.set_block(0, 0, kd.D1.transpose());
  for (int i = 1; i <= p - 1; ++i) {
    PolyMatrix h = cplx(-1.0) * cheb_horner_poly(P, eps, i, r);
    if (eps == 0 && r == 1) h = h + PolyMatrix::constant(0.5 * P.P(k - i));
    os.H.set_block(q * n + (i - 1) * m, 0, h);
  }

  os.G = PolyMatrix(m, p * m + (q - 1) * n, k);
  os.G.set_block(0, 0, kd.D2);
  for (int i = 1; i <= q - 1; ++i)
    os.G.set_block(0, p * m + (i - 1) * n, cplx(-1.0) * cheb_horner_poly(P, 0, k - eps - 1 + i, 2));

  os.row_weights = Vec::Zero(p);
  os.row_weights(p - 1) = 1.0;
  os.col_weights = Vec::Zero(q);
  os.col_weights(q - 1) = 1.0;
  return os;
}

RecoveredVector recover_eigvec_cheb(const ChebLinearization& lin, const Eigenvalue& lambda0,
                                    const Vec& v, Side side) {
  RecoveredVector r;
  const int count = side == Side::Right ? lin.q() : lin.p();
  r.block = lambda0.infinite ? 1 : count;
  r.valid_blocks = {r.block};
  for (int b = 1; b <= count; ++b)
    if (b != r.block) r.unreliable_blocks.push_back(b);
  r.x = vector_block(lin.pencil, v, side, r.block);
  require_nonzero_block(r.x, r.block);
  return r;
}

RecoveredBasis recover_minimal_cheb(const ChebLinearization& lin, const PolyVectorBasis& basis,
                                    Side side) {
  const int count = side == Side::Right ? lin.q() : lin.p();
  Vec w = Vec::Zero(count);
  w(count - 1) = 1.0;
  return recover_weighted_basis(lin.pencil, basis, side, w, count - 1);
}

}  // namespace bmbp
