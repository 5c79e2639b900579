#include "bmbp/poly.hpp"

#include <algorithm>

namespace bmbp {

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, cplx(0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), cplx(0.0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly poly_scale(const Poly& a, cplx s) {
  Poly r(a);
  for (auto& v : r) v *= s;
  return r;
}

cplx poly_eval(const Poly& p, cplx x) {
  cplx acc(0.0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly poly_from_roots(const std::vector<cplx>& roots) {
  Poly p{cplx(1.0)};
  for (const cplx& r : roots) p = poly_mul(p, Poly{-r, cplx(1.0)});
  return p;
}

Poly poly_deflate(const Poly& p, cplx root, cplx* remainder) {
  if (p.empty()) {
    if (remainder) *remainder = 0.0;
    return {};
  }
  const size_t n = p.size();
  Poly q(n > 1 ? n - 1 : 1, cplx(0.0));
  cplx acc(0.0);
  for (size_t i = n; i-- > 0;) {
    acc = acc * root + p[i];
    if (i > 0) q[i - 1] = acc;
  }
  if (remainder) *remainder = acc;
  if (n == 1) q[0] = 0.0;
  return q;
}

PolyMatrix::PolyMatrix(Index rows, Index cols, int degree)
    : rows_(rows), cols_(cols),
      c_(static_cast<size_t>(std::max(degree, 0) + 1), Mat::Zero(rows, cols)) {}

PolyMatrix PolyMatrix::constant(const Mat& c0) {
  PolyMatrix p(c0.rows(), c0.cols(), 0);
  p.c_[0] = c0;
  return p;
}

PolyMatrix PolyMatrix::linear(const Mat& c0, const Mat& c1) {
  PolyMatrix p(c0.rows(), c0.cols(), 1);
  p.c_[0] = c0;
  p.c_[1] = c1;
  return p;
}

PolyMatrix PolyMatrix::scalar(const Poly& p, Index size) {
  return scale(p, Mat::Identity(size, size));
}

int PolyMatrix::degree(double tol) const {
  for (int j = degree_bound(); j >= 0; --j)
    if (c_[static_cast<size_t>(j)].norm() > tol) return j;
  return -1;
}

Mat PolyMatrix::operator()(cplx lambda) const {
  Mat acc = Mat::Zero(rows_, cols_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, degree_bound());
  for (size_t j = 0; j < c_.size(); ++j) t.c_[j] = c_[j].transpose();
  return t;
}

PolyMatrix PolyMatrix::block(Index r0, Index c0, Index nr, Index nc) const {
  PolyMatrix b(nr, nc, degree_bound());
  for (size_t j = 0; j < c_.size(); ++j) b.c_[j] = c_[j].block(r0, c0, nr, nc);
  return b;
}

void PolyMatrix::set_block(Index r0, Index c0, const PolyMatrix& b) {
  if (b.degree_bound() > degree_bound()) resize_degree(b.degree_bound());
  for (int j = 0; j <= degree_bound(); ++j) {
    if (j <= b.degree_bound())
      c_[static_cast<size_t>(j)].block(r0, c0, b.rows(), b.cols()) = b.coeff(j);
    else
      c_[static_cast<size_t>(j)].block(r0, c0, b.rows(), b.cols()).setZero();
  }
}

void PolyMatrix::resize_degree(int degree) {
  c_.resize(static_cast<size_t>(std::max(degree, 0) + 1), Mat::Zero(rows_, cols_));
}

double PolyMatrix::max_norm() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, c.norm());
  return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix polynomial sum: size mismatch");
  PolyMatrix r(a.rows(), a.cols(), std::max(a.degree_bound(), b.degree_bound()));
  for (int j = 0; j <= a.degree_bound(); ++j) r.coeff(j) += a.coeff(j);
  for (int j = 0; j <= b.degree_bound(); ++j) r.coeff(j) += b.coeff(j);
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  return a + cplx(-1.0) * b;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "matrix polynomial product: size mismatch");
  PolyMatrix r(a.rows(), b.cols(), a.degree_bound() + b.degree_bound());
  for (int i = 0; i <= a.degree_bound(); ++i)
    for (int j = 0; j <= b.degree_bound(); ++j) r.coeff(i + j) += a.coeff(i) * b.coeff(j);
  return r;
}

PolyMatrix operator*(const Mat& a, const PolyMatrix& b) { return PolyMatrix::constant(a) * b; }
PolyMatrix operator*(const PolyMatrix& a, const Mat& b) { return a * PolyMatrix::constant(b); }

PolyMatrix operator*(cplx s, const PolyMatrix& b) {
  PolyMatrix r(b);
  for (int j = 0; j <= r.degree_bound(); ++j) r.coeff(j) *= s;
  return r;
}

PolyMatrix scale(const Poly& p, const Mat& b) {
  PolyMatrix r(b.rows(), b.cols(), std::max<int>(static_cast<int>(p.size()) - 1, 0));
  for (size_t j = 0; j < p.size(); ++j) r.coeff(static_cast<int>(j)) = p[j] * b;
  return r;
}

}  // namespace bmbp
