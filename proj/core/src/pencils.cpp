#include "bmbp/pencils.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lapack.hpp"
#include "linalg.hpp"

namespace bmbp {

const char* family_name(Family f) {
  switch (f) {
    case Family::Newton: return "newton";
    case Family::Lagrange: return "lagrange";
    case Family::Cheb1: return "cheb1";
    case Family::Cheb2: return "cheb2";
    case Family::Generic: return "generic";
  }
  return "generic";
}

Family family_from_name(const std::string& name) {
  if (name == "newton") return Family::Newton;
  if (name == "lagrange") return Family::Lagrange;
  if (name == "cheb1" || name == "chebyshev1") return Family::Cheb1;
  if (name == "cheb2" || name == "chebyshev2") return Family::Cheb2;
  if (name == "generic") return Family::Generic;
  throw Error(ErrorCode::InvalidInput, "unknown pencil family '" + name + "'");
}

Family family_for_basis(BasisKind kind) {
  switch (kind) {
    case BasisKind::Newton: return Family::Newton;
    case BasisKind::Lagrange: return Family::Lagrange;
    case BasisKind::Chebyshev1: return Family::Cheb1;
    case BasisKind::Chebyshev2: return Family::Cheb2;
    case BasisKind::Monomial: break;
  }
  throw Error(ErrorCode::UnsupportedBasis,
              "monomial input has no block minimal basis family here; convert it to another basis");
}

Index BlockPencil::row_offset(int block) const {
  Index o = 0;
  for (int i = 0; i < block; ++i) o += row_blocks.at(static_cast<size_t>(i));
  return o;
}

Index BlockPencil::col_offset(int block) const {
  Index o = 0;
  for (int i = 0; i < block; ++i) o += col_blocks.at(static_cast<size_t>(i));
  return o;
}

PolyMatrix BlockPencil::body() const {
  return as_poly().block(0, 0, row_offset(body_rows), col_offset(body_cols));
}

PolyMatrix BlockPencil::k1() const {
  const Index r0 = row_offset(body_rows), c = col_offset(body_cols);
  return as_poly().block(r0, 0, L0.rows() - r0, c);
}

PolyMatrix BlockPencil::k2() const {
  const Index r = row_offset(body_rows), c0 = col_offset(body_cols);
  return as_poly().block(0, c0, r, L0.cols() - c0).transpose();
}

void BlockPencil::validate() const {
  if (L0.rows() != L1.rows() || L0.cols() != L1.cols())
    throw Error(ErrorCode::DimensionMismatch, "L0 and L1 differ in size");
  Index rs = 0, cs = 0;
  for (Index r : row_blocks) rs += r;
  for (Index c : col_blocks) cs += c;
  if (rs != L0.rows() || cs != L0.cols())
    throw Error(ErrorCode::DimensionMismatch, "block partition does not match pencil size");
  if (body_rows < 0 || body_cols < 0 || body_rows > static_cast<int>(row_blocks.size()) ||
      body_cols > static_cast<int>(col_blocks.size()))
    throw Error(ErrorCode::DimensionMismatch, "body partition out of range");
}

std::vector<cplx> sample_points(int count, double radius) {
  std::vector<cplx> pts(static_cast<size_t>(count));
  for (int j = 0; j < count; ++j)
    pts[static_cast<size_t>(j)] =
        std::polar(radius, std::numbers::pi * (2.0 * j + 1.0) / count + 0.25);
  return pts;
}

namespace {

// Rank of Q(l) with the cut taken relative to sum_j |Q_j| |l|^j, so that
// cancellation inside Q(l) counts as rank loss.
int rank_at(const PolyMatrix& Q, cplx l, double rel) {
  double scale = 0.0, power = 1.0;
  for (int j = 0; j <= Q.degree_bound(); ++j) {
    scale += Q.coeff(j).norm() * power;
    power *= std::abs(l);
  }
  const Eigen::VectorXd s = detail::singular_values(Q(l));
  int r = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > rel * scale) ++r;
  return r;
}

}  // namespace

MinimalityCertificate is_minimal_basis(const PolyMatrix& Q, std::uint64_t seed,
                                       const Tolerances& tol) {
  MinimalityCertificate cert;
  const Index r = Q.rows(), c = Q.cols();
  if (r > c) throw Error(ErrorCode::DimensionMismatch, "minimal basis test needs rows <= cols");
  if (r == 0) {
    cert.minimal = cert.leading_full_rank = cert.pointwise_full_rank = true;
    cert.kind = MinimalityCertificate::Kind::Deterministic;
    return cert;
  }
  const double rank_rel = tol.minimal_rank * static_cast<double>(std::max(r, c));

  // Row-degree leading coefficient matrix.
  Mat Qh = Mat::Zero(r, c);
  std::vector<int> row_deg(static_cast<size_t>(r), -1);
  for (Index i = 0; i < r; ++i) {
    for (int j = Q.degree_bound(); j >= 0; --j)
      if (Q.coeff(j).row(i).norm() > 0.0) {
        row_deg[static_cast<size_t>(i)] = j;
        Qh.row(i) = Q.coeff(j).row(i);
        break;
      }
  }
  cert.leading_full_rank = detail::numerical_rank(Qh, rank_rel) == r;

  std::mt19937_64 rng(seed);
  bool full = true;
  const double radius = 1.0 + Q.max_norm();
  for (int t = 0; t < 20 && full; ++t) {
    full = rank_at(Q, detail::random_point(rng, radius), rank_rel) == r;
    ++cert.points_checked;
  }

  if (full) {
    // Every point where Q loses rank is an eigenvalue of Q(l) R.
    const Mat R = detail::random_complex(c, r, rng);
    const PolyMatrix S = Q * R;
    const BlockPencil comp = companion_pencil(S);
    bool deterministic = true;
    if (comp.L0.rows() > 0) {
      const auto ev = detail::zggev(-comp.L0, comp.L1, false, false);
      for (size_t i = 0; i < ev.alpha.size(); ++i) {
        const double h = std::hypot(std::abs(ev.alpha[i]), std::abs(ev.beta[i]));
        if (h == 0.0) { deterministic = false; continue; }
        if (std::abs(ev.beta[i]) <= tol.infinite_beta * h) continue;
        const cplx l0 = ev.alpha[i] / ev.beta[i];
        if (rank_at(Q, l0, tol.candidate_rank) < r) full = false;
        ++cert.points_checked;
      }
    }
    if (!deterministic) {
      for (int t = 0; t < 50 && full; ++t) {
        full = rank_at(Q, detail::random_point(rng, radius), rank_rel) == r;
        ++cert.points_checked;
      }
    }
    cert.kind = deterministic ? MinimalityCertificate::Kind::Deterministic
                              : MinimalityCertificate::Kind::Probabilistic;
  }
  cert.pointwise_full_rank = full;
  cert.minimal = cert.leading_full_rank && cert.pointwise_full_rank;
  return cert;
}

DualityReport check_duality(const DualPair& pair, double radius, const Tolerances& tol) {
  if (pair.K.cols() != pair.D.cols())
    throw Error(ErrorCode::DimensionMismatch, "K and D have different column counts");
  DualityReport rep;
  const int count = std::max(pair.K.degree_bound(), 0) + std::max(pair.D.degree_bound(), 0) + 1;
  rep.samples = count;
  for (const cplx l : sample_points(count, radius)) {
    const Mat k = pair.K(l), d = pair.D(l);
    rep.defect = std::max(rep.defect, (k * d.transpose()).norm());
    rep.scale = std::max(rep.scale, 1.0 + k.norm() * d.norm());
  }
  rep.ok = rep.defect <= tol.duality * rep.scale;
  return rep;
}

BlockPencil assemble(const PolyMatrix& M, const PolyMatrix& K1, const PolyMatrix& K2, Index m,
                     Index n, Family family, int param) {
  if (m <= 0 || n <= 0) throw Error(ErrorCode::DimensionMismatch, "block sizes must be positive");
  if (M.rows() % m != 0 || M.cols() % n != 0)
    throw Error(ErrorCode::DimensionMismatch, "body is not a whole number of blocks");
  const Index p = M.rows() / m, q = M.cols() / n;
  if (K1.rows() != (q - 1) * n || K1.cols() != q * n)
    throw Error(ErrorCode::DimensionMismatch, "K1 is not conformable with the body");
  if (K2.rows() != (p - 1) * m || K2.cols() != p * m)
    throw Error(ErrorCode::DimensionMismatch, "K2 is not conformable with the body");
  for (const PolyMatrix* b : {&M, &K1, &K2})
    if (b->degree(0.0) > 1) throw Error(ErrorCode::DimensionMismatch, "block has degree above one");

  const Index rows = p * m + (q - 1) * n, cols = q * n + (p - 1) * m;
  PolyMatrix L(rows, cols, 1);
  L.set_block(0, 0, M);
  if (K2.rows() > 0) L.set_block(0, q * n, K2.transpose());
  if (K1.rows() > 0) L.set_block(p * m, 0, K1);

  BlockPencil out;
  out.L0 = L.coeff(0);
  out.L1 = L.coeff(1);
  out.row_blocks.assign(static_cast<size_t>(p), m);
  out.row_blocks.insert(out.row_blocks.end(), static_cast<size_t>(q - 1), n);
  out.col_blocks.assign(static_cast<size_t>(q), n);
  out.col_blocks.insert(out.col_blocks.end(), static_cast<size_t>(p - 1), m);
  out.family = family;
  out.param = param;
  out.body_rows = static_cast<int>(p);
  out.body_cols = static_cast<int>(q);
  return out;
}

PolyMatrix interpolate_roots_of_unity(const std::vector<Mat>& values) {
  const int N = static_cast<int>(values.size());
  PolyMatrix out(values.front().rows(), values.front().cols(), N - 1);
  for (int j = 0; j < N; ++j) {
    Mat acc = Mat::Zero(out.rows(), out.cols());
    for (int s = 0; s < N; ++s)
      acc += std::polar(1.0, -2.0 * std::numbers::pi * j * s / N) * values[static_cast<size_t>(s)];
    out.coeff(j) = acc / static_cast<double>(N);
  }
  return out;
}

PolyMatrix body_product(const PolyMatrix& M, const PolyMatrix& D1, const PolyMatrix& D2) {
  if (D2.cols() != M.rows() || D1.cols() != M.cols())
    throw Error(ErrorCode::DimensionMismatch, "body product: D1/D2 not conformable with M");
  const int N = std::max(M.degree_bound(), 0) + std::max(D1.degree_bound(), 0) +
                std::max(D2.degree_bound(), 0) + 1;
  std::vector<Mat> vals;
  vals.reserve(static_cast<size_t>(N));
  for (int s = 0; s < N; ++s) {
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi * s / N);
    vals.push_back(D2(w) * M(w) * D1(w).transpose());
  }
  return interpolate_roots_of_unity(vals);
}

Linearization apply_family(const Linearization& col, const Mat& A, const Mat& B) {
  const Index p = col.p(), q = col.q();
  if (A.rows() != p * col.m || A.cols() != (q - 1) * col.n)
    throw Error(ErrorCode::DimensionMismatch,
                "A must be " + std::to_string(p * col.m) + "x" + std::to_string((q - 1) * col.n));
  if (B.rows() != (p - 1) * col.m || B.cols() != q * col.n)
    throw Error(ErrorCode::DimensionMismatch,
                "B must be " + std::to_string((p - 1) * col.m) + "x" + std::to_string(q * col.n));
  Linearization out = col;
  out.A = A;
  out.B = B;
  PolyMatrix body = col.M;
  if (A.size() > 0) body = body + A * col.kd.K1;
  if (B.size() > 0) body = body + col.kd.K2.transpose() * B;
  body.resize_degree(1);
  out.M = body;
  out.pencil = assemble(body, col.kd.K1, col.kd.K2, col.m, col.n, col.family, col.param);
  return out;
}

BlockPencil companion_pencil(const PolyMatrix& C) {
  if (C.rows() != C.cols()) throw Error(ErrorCode::DimensionMismatch, "companion needs a square polynomial");
  const int d = C.degree_bound();
  const Index r = C.rows();
  BlockPencil out;
  out.family = Family::Generic;
  if (d <= 0) {
    out.L0 = Mat::Zero(0, 0);
    out.L1 = Mat::Zero(0, 0);
    return out;
  }
  const Index N = d * r;
  out.L0 = Mat::Zero(N, N);
  out.L1 = Mat::Zero(N, N);
  out.L1.block(0, 0, r, r) = C.coeff(d);
  for (int j = 1; j < d; ++j) out.L1.block(j * r, j * r, r, r).setIdentity();
  for (int j = 0; j < d; ++j) out.L0.block(0, j * r, r, r) = C.coeff(d - 1 - j);
  for (int j = 1; j < d; ++j) out.L0.block(j * r, (j - 1) * r, r, r) = -Mat::Identity(r, r);
  out.row_blocks.assign(static_cast<size_t>(d), r);
  out.col_blocks.assign(static_cast<size_t>(d), r);
  out.body_rows = 1;
  out.body_cols = d;
  return out;
}

Vec vector_block(const BlockPencil& pencil, const Vec& v, Side side, int block) {
  const auto& sizes = side == Side::Right ? pencil.col_blocks : pencil.row_blocks;
  if (block < 1 || block > static_cast<int>(sizes.size()))
    throw Error(ErrorCode::IndexRange, "vector block index out of range");
  const Index off = side == Side::Right ? pencil.col_offset(block - 1) : pencil.row_offset(block - 1);
  return v.segment(off, sizes[static_cast<size_t>(block - 1)]);
}

}  // namespace bmbp

namespace bmbp {

PolyMatrix vector_block(const BlockPencil& pencil, const PolyMatrix& v, Side side, int block) {
  const auto& sizes = side == Side::Right ? pencil.col_blocks : pencil.row_blocks;
  if (block < 1 || block > static_cast<int>(sizes.size()))
    throw Error(ErrorCode::IndexRange, "vector block index out of range");
  const Index off = side == Side::Right ? pencil.col_offset(block - 1) : pencil.row_offset(block - 1);
  return v.block(off, 0, sizes[static_cast<size_t>(block - 1)], v.cols());
}

void require_nonzero_block(const Vec& x, int block) {
  if (!(x.norm() > 0.0) || !std::isfinite(x.norm()))
    throw Error(ErrorCode::ZeroRecoveredBlock,
                "recovered block " + std::to_string(block) + " is zero; input is not an eigenvector");
}

RecoveredBasis recover_weighted_basis(const BlockPencil& pencil, const PolyVectorBasis& basis,
                                      Side side, const Vec& weights, int shift,
                                      std::uint64_t seed) {
  RecoveredBasis out;
  out.shift = shift;
  out.basis.side = side;
  out.basis.certificate = basis.certificate;
  for (size_t i = 0; i < basis.vectors.size(); ++i) {
    const PolyMatrix& v = basis.vectors[i];
    PolyMatrix x;
    for (Index b = 0; b < weights.size(); ++b) {
      if (weights(b) == cplx(0.0)) continue;
      PolyMatrix part = weights(b) * vector_block(pencil, v, side, static_cast<int>(b) + 1);
      x = x.rows() == 0 ? part : x + part;
    }
    if (x.rows() == 0) throw Error(ErrorCode::InvalidInput, "all recovery weights are zero");
    const int pd = basis.degrees.at(i);
    x.resize_degree(std::max(pd - shift, 0));
    out.pencil_degrees.push_back(pd);
    out.basis.degrees.push_back(pd - shift);
    out.basis.vectors.push_back(std::move(x));
  }
  if (!out.basis.vectors.empty()) {
    // Independence over the rational functions: full column rank at random points.
    std::mt19937_64 rng(seed);
    const Index rows = out.basis.vectors.front().rows();
    const Index cnt = static_cast<Index>(out.basis.vectors.size());
    bool independent = cnt <= rows;
    if (independent) {
      independent = false;
      for (int t = 0; t < 3 && !independent; ++t) {
        const cplx l = detail::random_point(rng, 2.0);
        Mat X(rows, cnt);
        for (Index c = 0; c < cnt; ++c) {
          Vec col = out.basis.vectors[static_cast<size_t>(c)](l).col(0);
          const double nrm = col.norm();
          X.col(c) = nrm > 0.0 ? Vec(col / nrm) : col;
        }
        independent = detail::numerical_rank(X, 1e-8) == cnt;
      }
    }
    if (!independent)
      throw Error(ErrorCode::DependentSet, "recovered vectors are linearly dependent");
  }
  return out;
}

}  // namespace bmbp
