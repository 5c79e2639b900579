#include "bmbp/lagrange.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace bmbp {

namespace {

void check_lagrange(const MatrixPolynomial& P, int mu) {
  if (P.kind() != BasisKind::Lagrange)
    throw Error(ErrorCode::UnsupportedBasis, "expected a polynomial in the Lagrange basis");
  if (P.grade() < 1) throw Error(ErrorCode::ParamRange, "grade must be at least 1");
  if (mu < 0 || mu > P.grade() - 1)
    throw Error(ErrorCode::ParamRange, "mu must lie in [0, k-1], got " + std::to_string(mu));
}

// n_from^to(x_at) with the factors for indices in `skip` left out.
cplx node_product_at(const NodeSet& x, int from, int to, int at, std::initializer_list<int> skip) {
  cplx p(1.0);
  for (int l = from; l <= to; ++l) {
    if (std::find(skip.begin(), skip.end(), l) != skip.end()) continue;
    p *= x.x(at) - x.x(l);
  }
  return p;
}

int node_hit(const NodeSet& x, cplx l, double tol) {
  for (int j = 1; j <= static_cast<int>(x.size()); ++j)
    if (std::abs(l - x.x(j)) <= tol * (1.0 + std::abs(x.x(j)))) return j;
  return 0;
}

// Shared shape of the two factor polynomial families:
//   - sum_{i=lo}^{j} c_i g_{ij} S_{j+1} + sum_{i=j+1}^{hi} c_i g_{ij} T_j,
// g_{ij} = gamma_{j+1} / (gamma_i gamma_{i+1}).
PolyMatrix script_factor(const MatrixPolynomial& P, int j, int lo, int hi,
                         const std::function<cplx(int)>& coord, double* remainder) {
  const int k = P.grade();
  const NodeSet& x = P.nodes();
  PolyMatrix acc(P.rows(), P.cols(), k);
  double rem = 0.0;
  auto add_term = [&](int i, int t, cplx sign) {
    double r = 0.0;
    const Poly q = node_quotient(x, 1, k + 1, {j + 1}, {i, i + 1, t}, &r);
    rem = std::max(rem, r);
    acc = acc + scale(poly_scale(q, sign * coord(i) * x.w(t)), P.P(t));
  };
  for (int i = lo; i <= j; ++i)
    for (int t = j + 1; t <= k + 1; ++t) add_term(i, t, -1.0);
  for (int i = j + 1; i <= hi; ++i)
    for (int t = 1; t <= j; ++t) add_term(i, t, 1.0);
  if (remainder) *remainder = rem;
  return acc;
}

}  // namespace

Poly node_quotient(const NodeSet& nodes, int from, int to, const std::vector<int>& extra,
                   const std::vector<int>& divisors, double* remainder) {
  std::vector<cplx> roots;
  for (int l = from; l <= to; ++l) roots.push_back(nodes.x(l));
  for (int e : extra) roots.push_back(nodes.x(e));
  Poly p = poly_from_roots(roots);
  double scale_ref = 0.0;
  for (const cplx& c : p) scale_ref = std::max(scale_ref, std::abs(c));
  double rem = 0.0;
  for (int d : divisors) {
    cplx r;
    p = poly_deflate(p, nodes.x(d), &r);
    rem = std::max(rem, std::abs(r) / std::max(scale_ref, 1.0));
  }
  if (remainder) *remainder = rem;
  return p;
}

MuCoordinates mu_coordinates(const NodeSet& x, int k, int mu) {
  if (k < 1 || mu < 0 || mu > k - 1) throw Error(ErrorCode::ParamRange, "mu must lie in [0, k-1]");
  if (static_cast<int>(x.size()) != k + 1)
    throw Error(ErrorCode::InvalidInput, "Lagrange basis of grade k needs k+1 nodes");
  MuCoordinates c;
  c.k = k;
  c.mu = mu;
  c.a.assign(static_cast<size_t>(mu + 1), cplx(0.0));
  c.b.assign(static_cast<size_t>(k - mu), cplx(0.0));

  // a: basis n_1^{mu+2} / (gamma_{i+1} gamma_i), i = 1..mu+1.
  c.a[0] = 1.0 / node_product_at(x, 3, mu + 2, 1, {});
  for (int i = 2; i <= mu; ++i) {
    const cplx self = node_product_at(x, 1, mu + 2, i, {i, i + 1});
    const cplx prev = node_product_at(x, 1, mu + 2, i, {i - 1, i});
    c.a[static_cast<size_t>(i - 1)] = (1.0 - c.a[static_cast<size_t>(i - 2)] * prev) / self;
  }
  if (mu >= 1) c.a[static_cast<size_t>(mu)] = 1.0 / node_product_at(x, 1, mu, mu + 2, {});

  // b: basis n_{mu+1}^{k+1} / (gamma_{i+1} gamma_i), i = mu+1..k.
  c.b[0] = 1.0 / node_product_at(x, mu + 3, k + 1, mu + 1, {});
  for (int i = mu + 2; i <= k - 1; ++i) {
    const cplx self = node_product_at(x, mu + 1, k + 1, i, {i, i + 1});
    const cplx prev = node_product_at(x, mu + 1, k + 1, i, {i - 1, i});
    c.b[static_cast<size_t>(i - mu - 1)] = (1.0 - c.b[static_cast<size_t>(i - mu - 2)] * prev) / self;
  }
  if (k - mu >= 2) c.b.back() = 1.0 / node_product_at(x, mu + 1, k - 1, k + 1, {});
  return c;
}

KDPair build_K_D_lagrange(const NodeSet& nodes, int k, int mu, Index n, Index m) {
  if (k < 1 || mu < 0 || mu > k - 1) throw Error(ErrorCode::ParamRange, "mu must lie in [0, k-1]");
  if (static_cast<int>(nodes.size()) != k + 1)
    throw Error(ErrorCode::InvalidInput, "Lagrange basis of grade k needs k+1 nodes");
  const int q = k - mu, p = mu + 1;
  const Mat In = Mat::Identity(n, n), Im = Mat::Identity(m, m);
  KDPair kd;
  kd.K1 = PolyMatrix((q - 1) * n, q * n, 1);
  for (int j = 1; j <= q - 1; ++j) {
    kd.K1.set_block((j - 1) * n, (j - 1) * n, scale(gamma_poly(nodes, k + 2 - j), In));
    kd.K1.set_block((j - 1) * n, j * n, scale(poly_scale(gamma_poly(nodes, k - j), -1.0), In));
  }
  kd.D1 = PolyMatrix(n, q * n, q - 1);
  for (int j = 1; j <= q; ++j)
    kd.D1.set_block(0, (j - 1) * n,
                    scale(node_quotient(nodes, mu + 1, k + 1, {}, {k + 2 - j, k + 1 - j}), In));

  kd.K2 = PolyMatrix((p - 1) * m, p * m, 1);
  for (int j = 1; j <= p - 1; ++j) {
    kd.K2.set_block((j - 1) * m, (j - 1) * m, scale(gamma_poly(nodes, mu + 3 - j), Im));
    kd.K2.set_block((j - 1) * m, j * m, scale(poly_scale(gamma_poly(nodes, mu + 1 - j), -1.0), Im));
  }
  kd.D2 = PolyMatrix(m, p * m, p - 1);
  for (int j = 1; j <= p; ++j)
    kd.D2.set_block(0, (j - 1) * m,
                    scale(node_quotient(nodes, 1, mu + 2, {}, {mu + 3 - j, mu + 2 - j}), Im));
  return kd;
}

LagrangeLinearization colleague_lagrange(const MatrixPolynomial& P, int mu) {
  check_lagrange(P, mu);
  const int k = P.grade(), q = k - mu, p = mu + 1;
  const Index m = P.rows(), n = P.cols();
  const NodeSet& x = P.nodes();
  // P_j w_j gamma_{j+1}
  auto term = [&](int j) { return scale(poly_scale(gamma_poly(x, j + 1), x.w(j)), P.P(j)); };
  const PolyMatrix corner = scale(poly_scale(gamma_poly(x, k), x.w(k + 1)), P.P(k + 1)) +
                            scale(poly_scale(gamma_poly(x, k + 1), x.w(k)), P.P(k));

  PolyMatrix M(p * m, q * n, 1);
  if (mu < k - 1) {
    M.set_block(0, 0, corner);
    for (int c = 1; c <= q - 1; ++c) M.set_block(0, c * n, term(k - c));
    for (int r = 1; r <= mu; ++r) M.set_block(r * m, (q - 1) * n, term(mu + 1 - r));
  } else {
    // Single block column.
    M.set_block(0, 0, corner);
    for (int r = 1; r <= k - 1; ++r) M.set_block(r * m, 0, term(k - r));
  }

  LagrangeLinearization lin;
  lin.family = Family::Lagrange;
  lin.param = mu;
  lin.kd = build_K_D_lagrange(x, k, mu, n, m);
  lin.M = M;
  lin.A = Mat::Zero(p * m, (q - 1) * n);
  lin.B = Mat::Zero((p - 1) * m, q * n);
  lin.source = P;
  lin.m = m;
  lin.n = n;
  lin.k = k;
  lin.pencil = assemble(M, lin.kd.K1, lin.kd.K2, m, n, Family::Lagrange, mu);
  return lin;
}

LagrangeLinearization family_lagrange(const MatrixPolynomial& P, int mu, const Mat& A,
                                      const Mat& B) {
  return apply_family(colleague_lagrange(P, mu), A, B);
}

std::pair<Mat, Mat> lagrange_splits(const MatrixPolynomial& P, int j, cplx lambda) {
  if (P.kind() != BasisKind::Lagrange) throw Error(ErrorCode::UnsupportedBasis, "expected Lagrange basis");
  const int k = P.grade();
  if (j < 1 || j > k + 1) throw Error(ErrorCode::IndexRange, "split index must lie in [1, k+1]");
  const NodeSet& x = P.nodes();
  Mat T = Mat::Zero(P.rows(), P.cols()), S = T;
  for (int i = 1; i <= k + 1; ++i) {
    // ell(lambda) / gamma_i(lambda) without division.
    cplx li(1.0);
    for (int l = 1; l <= k + 1; ++l)
      if (l != i) li *= lambda - x.x(l);
    const Mat t = (x.w(i) * li) * P.P(i);
    if (i <= j) T += t;
    if (i >= j) S += t;
  }
  return {T, S};
}

PolyMatrix lagrange_T_poly(const MatrixPolynomial& P, int j) {
  const int k = P.grade();
  if (j < 1 || j > k + 1) throw Error(ErrorCode::IndexRange, "split index must lie in [1, k+1]");
  PolyMatrix acc(P.rows(), P.cols(), k);
  for (int i = 1; i <= j; ++i)
    acc = acc + scale(poly_scale(node_quotient(P.nodes(), 1, k + 1, {}, {i}), P.nodes().w(i)), P.P(i));
  return acc;
}

PolyMatrix lagrange_S_poly(const MatrixPolynomial& P, int j) {
  const int k = P.grade();
  if (j < 1 || j > k + 1) throw Error(ErrorCode::IndexRange, "split index must lie in [1, k+1]");
  PolyMatrix acc(P.rows(), P.cols(), k);
  for (int i = j; i <= k + 1; ++i)
    acc = acc + scale(poly_scale(node_quotient(P.nodes(), 1, k + 1, {}, {i}), P.nodes().w(i)), P.P(i));
  return acc;
}

PolyMatrix lagrange_script_P(const MatrixPolynomial& P, const MuCoordinates& c, int j,
                             double* remainder) {
  if (j < 1 || j > c.mu) throw Error(ErrorCode::IndexRange, "script P index must lie in [1, mu]");
  return script_factor(P, j, 1, c.mu + 1, [&](int i) { return c.a_at(i); }, remainder);
}

PolyMatrix lagrange_script_Q(const MatrixPolynomial& P, const MuCoordinates& c, int j,
                             double* remainder) {
  if (j < c.mu + 1 || j > c.k - 1)
    throw Error(ErrorCode::IndexRange, "script Q index must lie in [mu+1, k-1]");
  return script_factor(P, j, c.mu + 1, c.k, [&](int i) { return c.b_at(i); }, remainder);
}

OneSided one_sided_lagrange(const MatrixPolynomial& P, int mu) {
  check_lagrange(P, mu);
  const int k = P.grade(), q = k - mu, p = mu + 1;
  const Index m = P.rows(), n = P.cols();
  const KDPair kd = build_K_D_lagrange(P.nodes(), k, mu, n, m);
  const MuCoordinates c = mu_coordinates(P.nodes(), k, mu);

  OneSided os;
  os.H = PolyMatrix(q * n + (p - 1) * m, n, k);
  os.H.set_block(0, 0, kd.D1.transpose());
  for (int i = 1; i <= p - 1; ++i)  // script P_mu, ..., script P_1
    os.H.set_block(q * n + (i - 1) * m, 0, lagrange_script_P(P, c, mu + 1 - i));

  os.G = PolyMatrix(m, p * m + (q - 1) * n, k);
  os.G.set_block(0, 0, kd.D2);
  for (int i = 1; i <= q - 1; ++i)  // script Q_{k-1}, ..., script Q_{mu+1}
    os.G.set_block(0, p * m + (i - 1) * n, lagrange_script_Q(P, c, k - i));

  os.row_weights = Vec(p);
  for (int i = 1; i <= p; ++i) os.row_weights(i - 1) = c.a_at(mu + 2 - i);
  os.col_weights = Vec(q);
  for (int col = 1; col <= q; ++col) os.col_weights(col - 1) = c.b_at(k + 1 - col);
  return os;
}

std::vector<int> lagrange_valid_blocks(const NodeSet& nodes, int k, int mu, const Eigenvalue& l0,
                                       Side side, double node_match) {
  const int count = side == Side::Right ? k - mu : mu + 1;
  std::vector<int> out;
  const int j = l0.infinite ? 0 : node_hit(nodes, l0.value, node_match);
  for (int b = 1; b <= count; ++b) {
    bool ok = true;
    if (j != 0) {
      if (side == Side::Right)
        ok = j < mu + 1 || j == k + 2 - b || j == k + 1 - b;
      else
        ok = j > mu + 2 || j == mu + 3 - b || j == mu + 2 - b;
    }
    if (ok) out.push_back(b);
  }
  return out;
}

RecoveredVector recover_eigvec_lagrange(const LagrangeLinearization& lin,
                                        const Eigenvalue& lambda0, const Vec& v, Side side,
                                        const Tolerances& tol) {
  RecoveredVector r;
  const int count = side == Side::Right ? lin.q() : lin.p();
  r.valid_blocks = lagrange_valid_blocks(lin.source.nodes(), lin.k, lin.param, lambda0, side,
                                         tol.node_match);
  for (int b = 1; b <= count; ++b)
    if (std::find(r.valid_blocks.begin(), r.valid_blocks.end(), b) == r.valid_blocks.end())
      r.unreliable_blocks.push_back(b);
  r.block = r.valid_blocks.front();
  r.x = vector_block(lin.pencil, v, side, r.block);
  require_nonzero_block(r.x, r.block);
  return r;
}

RecoveredBasis recover_minimal_lagrange(const LagrangeLinearization& lin,
                                        const PolyVectorBasis& basis, Side side) {
  const MuCoordinates c = mu_coordinates(lin.source.nodes(), lin.k, lin.param);
  if (side == Side::Right) {
    Vec w(lin.q());
    for (int col = 1; col <= lin.q(); ++col) w(col - 1) = c.b_at(lin.k + 1 - col);
    return recover_weighted_basis(lin.pencil, basis, side, w, lin.q() - 1);
  }
  Vec w(lin.p());
  for (int r = 1; r <= lin.p(); ++r) w(r - 1) = c.a_at(lin.param + 2 - r);
  return recover_weighted_basis(lin.pencil, basis, side, w, lin.p() - 1);
}

BlockPencil reference_pencil_lagrange(const MatrixPolynomial& P) {
  if (P.kind() != BasisKind::Lagrange) throw Error(ErrorCode::UnsupportedBasis, "expected Lagrange basis");
  if (!P.is_square()) throw Error(ErrorCode::DimensionMismatch, "reference pencil needs square samples");
  const int k = P.grade();
  if (k < 1) throw Error(ErrorCode::ParamRange, "grade must be at least 1");
  const Index n = P.rows();
  const NodeSet& x = P.nodes();
  // 0-based helpers: node x_i, weight w_i, sample P_i, gamma_i.
  auto X = [&](int i) { return x.x(i + 1); };
  auto W = [&](int i) { return x.w(i + 1); };
  auto S = [&](int i) -> const Mat& { return P.P(i + 1); };
  auto theta = [&](int i) { return W(i - 1) / W(i); };
  auto g = [&](int i) { return Poly{-X(i), 1.0}; };
  const Mat I = Mat::Identity(n, n);

  PolyMatrix L(k * n, k * n, 1);
  for (int j = 1; j <= k; ++j) {
    PolyMatrix e = scale(poly_scale(g(j), -1.0), S(j - 1));
    if (j == k) e = e + scale(poly_scale(g(k - 1), -1.0 / theta(k)), S(k));
    L.set_block(0, (j - 1) * n, e);
  }
  for (int r = 1; r <= k - 1; ++r) {
    L.set_block(r * n, (r - 1) * n, scale(poly_scale(g(r - 1), -1.0), I));
    L.set_block(r * n, r * n, scale(poly_scale(g(r + 1), theta(r)), I));
  }
  BlockPencil out;
  out.L0 = L.coeff(0);
  out.L1 = L.coeff(1);
  out.row_blocks.assign(static_cast<size_t>(k), n);
  out.col_blocks.assign(static_cast<size_t>(k), n);
  out.family = Family::Generic;
  out.body_rows = 1;
  out.body_cols = k;
  return out;
}

}  // namespace bmbp
