#pragma once

#include <vector>

#include "bmbp/common.hpp"

namespace bmbp {

// Scalar polynomial in the monomial basis, lowest degree first.
using Poly = std::vector<cplx>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, cplx s);
cplx poly_eval(const Poly& p, cplx x);
Poly poly_from_roots(const std::vector<cplx>& roots);

// Synthetic division by (x - root). Returns the quotient; the remainder
// p(root) is written to *remainder when given.
Poly poly_deflate(const Poly& p, cplx root, cplx* remainder = nullptr);

// Matrix polynomial sum_j C_j lambda^j with fixed rows x cols.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Index rows, Index cols, int degree = 0);

  static PolyMatrix constant(const Mat& c0);
  static PolyMatrix linear(const Mat& c0, const Mat& c1);
  static PolyMatrix scalar(const Poly& p, Index size);  // p(lambda) * I

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  int degree_bound() const { return static_cast<int>(c_.size()) - 1; }
  // Index of the highest coefficient with norm above tol.
  int degree(double tol = 0.0) const;

  const Mat& coeff(int j) const { return c_.at(static_cast<size_t>(j)); }
  Mat& coeff(int j) { return c_.at(static_cast<size_t>(j)); }
  const std::vector<Mat>& coeffs() const { return c_; }

  Mat operator()(cplx lambda) const;
  PolyMatrix transpose() const;
  PolyMatrix block(Index r0, Index c0, Index nr, Index nc) const;
  void set_block(Index r0, Index c0, const PolyMatrix& b);
  void resize_degree(int degree);
  // Largest coefficient Frobenius norm.
  double max_norm() const;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Mat> c_;
};

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const Mat& a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const Mat& b);
PolyMatrix operator*(cplx s, const PolyMatrix& b);

// p(lambda) * B for scalar polynomial p.
PolyMatrix scale(const Poly& p, const Mat& b);

}  // namespace bmbp
