#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <bmbp/bmbp.hpp>

namespace bmbp::testing {

inline Mat rand_mat(Index r, Index c, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  Mat a(r, c);
  for (Index j = 0; j < c; ++j)
    for (Index i = 0; i < r; ++i) a(i, j) = cplx(d(rng), d(rng));
  return a;
}

inline cplx rand_point(std::mt19937_64& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
}

// Distinct points in the unit disk, kept at least `gap` apart.
inline NodeSet rand_nodes(int count, std::mt19937_64& rng, double gap = 0.15) {
  std::vector<cplx> x;
  while (static_cast<int>(x.size()) < count) {
    const cplx z = rand_point(rng);
    bool ok = true;
    for (const cplx y : x) ok = ok && std::abs(z - y) > gap;
    if (ok) x.push_back(z);
  }
  return NodeSet(x);
}

inline BasisDescriptor rand_basis(BasisKind kind, int k, std::mt19937_64& rng) {
  switch (kind) {
    case BasisKind::Newton:
      return BasisDescriptor::newton(rand_nodes(k, rng));
    case BasisKind::Lagrange:
      return BasisDescriptor::lagrange(rand_nodes(k + 1, rng));
    case BasisKind::Chebyshev1:
      return BasisDescriptor::chebyshev(1);
    case BasisKind::Chebyshev2:
      return BasisDescriptor::chebyshev(2);
    default:
      return BasisDescriptor::monomial();
  }
}

inline MatrixPolynomial rand_poly(BasisKind kind, int k, Index m, Index n, std::mt19937_64& rng) {
  std::vector<Mat> c;
  for (int i = 0; i <= k; ++i) c.push_back(rand_mat(m, n, rng));
  return MatrixPolynomial(rand_basis(kind, k, rng), c);
}

// phi_i(lambda) straight from the definitions: products for Newton,
// Lagrange cardinal functions, cos/sin forms for Chebyshev.
inline cplx naive_phi(const BasisDescriptor& b, int k, int i, cplx l) {
  switch (b.kind) {
    case BasisKind::Monomial:
      return std::pow(l, i);
    case BasisKind::Newton: {
      cplx p = 1.0;
      for (int j = 1; j <= i; ++j) p *= l - b.nodes->x(j);
      return p;
    }
    case BasisKind::Lagrange: {
      cplx p = 1.0;
      const int ii = i + 1;
      for (int j = 1; j <= k + 1; ++j)
        if (j != ii) p *= (l - b.nodes->x(j)) / (b.nodes->x(ii) - b.nodes->x(j));
      return p;
    }
    case BasisKind::Chebyshev1:
      return std::cos(static_cast<double>(i) * std::acos(l));
    case BasisKind::Chebyshev2: {
      const cplx t = std::acos(l);
      return std::sin(static_cast<double>(i + 1) * t) / std::sin(t);
    }
  }
  return 0.0;
}

inline Mat naive_eval(const MatrixPolynomial& P, cplx l) {
  Mat out = Mat::Zero(P.rows(), P.cols());
  for (int i = 0; i <= P.grade(); ++i) out += naive_phi(P.basis(), P.grade(), i, l) * P.coeff(i);
  return out;
}

inline Mat monomial_eval(const std::vector<Mat>& c, cplx l) {
  Mat out = Mat::Zero(c[0].rows(), c[0].cols());
  for (size_t i = c.size(); i-- > 0;) out = out * l + c[i];
  return out;
}

// Relative defect max |a - b| / max(1, |b|).
inline double rel(const Mat& a, const Mat& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

// Companion pencil built independently of the library: rows
// [C_{d-1} ... C_0] + lambda diag(C_d, I, ...), subdiagonal -I.
inline std::pair<Mat, Mat> oracle_companion(const std::vector<Mat>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  const Index r = c[0].rows();
  Mat L0 = Mat::Zero(d * r, d * r), L1 = Mat::Zero(d * r, d * r);
  L1.topLeftCorner(r, r) = c[static_cast<size_t>(d)];
  for (int j = 1; j < d; ++j) L1.block(j * r, j * r, r, r).setIdentity();
  for (int j = 0; j < d; ++j) L0.block(0, j * r, r, r) = c[static_cast<size_t>(d - 1 - j)];
  for (int j = 1; j < d; ++j) L0.block(j * r, (j - 1) * r, r, r) = -Mat::Identity(r, r);
  return {L0, L1};
}

// Monomial coefficients recovered from naive evaluations by a Vandermonde
// solve at points on the unit circle.
inline std::vector<Mat> oracle_monomial(const MatrixPolynomial& P) {
  const int k = P.grade();
  const int N = k + 1;
  Mat V(N, N);
  std::vector<Mat> vals;
  for (int s = 0; s < N; ++s) {
    const cplx w = std::polar(1.0, 2.0 * M_PI * s / N + 0.3);
    for (int j = 0; j < N; ++j) V(s, j) = std::pow(w, j);
    vals.push_back(naive_eval(P, w));
  }
  const Mat Vi = V.inverse();
  std::vector<Mat> c;
  for (int j = 0; j < N; ++j) {
    Mat acc = Mat::Zero(P.rows(), P.cols());
    for (int s = 0; s < N; ++s) acc += Vi(j, s) * vals[static_cast<size_t>(s)];
    c.push_back(acc);
  }
  return c;
}

inline std::vector<Eigenvalue> oracle_eigenvalues(const MatrixPolynomial& P) {
  const auto [L0, L1] = oracle_companion(oracle_monomial(P));
  return solve_gep(L0, L1).values;
}

// Planted singular polynomial in monomial form:
// U diag(R(lambda), [lambda^eps, 1], [lambda^eta; 1]) V with R regular r x r
// of degree k. Right minimal index eps, left minimal index eta.
struct Planted {
  std::vector<Mat> coeffs;  // monomial, grade k
  int eps = 0, eta = 0;
};

inline Planted planted_singular(int k, int r, int eps, int eta, std::mt19937_64& rng) {
  const Index N = r + 3;
  std::vector<Mat> mid(static_cast<size_t>(k) + 1, Mat::Zero(N, N));
  for (int i = 0; i <= k; ++i) mid[static_cast<size_t>(i)].topLeftCorner(r, r) = rand_mat(r, r, rng);
  mid[static_cast<size_t>(eps)](r, r) = 1.0;
  mid[0](r, r + 1) += 1.0;
  mid[static_cast<size_t>(eta)](r + 1, r + 2) = 1.0;
  mid[0](r + 2, r + 2) += 1.0;
  const Mat U = rand_mat(N, N, rng), V = rand_mat(N, N, rng);
  Planted p;
  p.eps = eps;
  p.eta = eta;
  for (const Mat& c : mid) p.coeffs.push_back(U * c * V);
  return p;
}

inline SampledFunction as_function(const std::vector<Mat>& c) {
  return [c](cplx l) { return monomial_eval(c, l); };
}

}  // namespace bmbp::testing

namespace bmbp::testing {

// Dense matrix from a grid of equally sized blocks; empty entries are zero.
inline Mat blocks(const std::vector<std::vector<Mat>>& grid, Index bs) {
  const Index R = static_cast<Index>(grid.size()), C = static_cast<Index>(grid[0].size());
  Mat out = Mat::Zero(R * bs, C * bs);
  for (Index i = 0; i < R; ++i)
    for (Index j = 0; j < C; ++j)
      if (grid[static_cast<size_t>(i)][static_cast<size_t>(j)].size() > 0)
        out.block(i * bs, j * bs, bs, bs) = grid[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return out;
}

inline Mat scalar1(cplx v) {
  Mat a(1, 1);
  a(0, 0) = v;
  return a;
}

// Relative defect of the one-sided identities at `points` random points.
inline std::pair<double, double> one_sided_defect(const Linearization& lin, int points,
                                                  std::mt19937_64& rng) {
  const OneSided f = one_sided(lin.source, lin.param);
  double er = 0.0, el = 0.0;
  for (int t = 0; t < points; ++t) {
    const cplx l = rand_point(rng);
    const Mat L = lin.pencil.at(l), P = naive_eval(lin.source, l);
    const Mat H = f.H(l), G = f.G(l);
    Mat rr = Mat::Zero(L.rows(), lin.n), ll = Mat::Zero(lin.m, L.cols());
    for (Index b = 0; b < f.row_weights.size(); ++b) rr.block(b * lin.m, 0, lin.m, lin.n) = f.row_weights(b) * P;
    for (Index b = 0; b < f.col_weights.size(); ++b) ll.block(0, b * lin.n, lin.m, lin.n) = f.col_weights(b) * P;
    er = std::max(er, (L * H - rr).norm() / std::max(1.0, L.norm() * H.norm()));
    el = std::max(el, (G * L - ll).norm() / std::max(1.0, L.norm() * G.norm()));
  }
  return {er, el};
}

}  // namespace bmbp::testing
