#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmbp/common.hpp"
#include "bmbp/poly.hpp"
#include "bmbp/polycore.hpp"

namespace bmbp {

enum class Family { Newton, Lagrange, Cheb1, Cheb2, Generic };

const char* family_name(Family f);
Family family_from_name(const std::string& name);
Family family_for_basis(BasisKind kind);  // throws UnsupportedBasis for monomial

// L(lambda) = lambda L1 + L0 with a 2x2 block layout
//   [ M   K2^T ]
//   [ K1  0    ]
// M spans the first p block rows (size m) and q block columns (size n).
struct BlockPencil {
  Mat L0, L1;
  std::vector<Index> row_blocks, col_blocks;
  Family family = Family::Generic;
  int param = 0;
  int body_rows = 0;  // p
  int body_cols = 0;  // q

  Mat at(cplx lambda) const { return L0 + lambda * L1; }
  PolyMatrix as_poly() const { return PolyMatrix::linear(L0, L1); }
  Index row_offset(int block) const;
  Index col_offset(int block) const;
  // Region accessors on the assembled pencil.
  PolyMatrix body() const;
  PolyMatrix k1() const;
  PolyMatrix k2() const;
  void validate() const;
};

// K1 D1^T = 0 and K2 D2^T = 0. D is stored as D(lambda) (rows = block size).
struct KDPair {
  PolyMatrix K1, D1, K2, D2;
};

struct DualPair {
  PolyMatrix K;
  PolyMatrix D;
  Family family = Family::Generic;
  int param = 0;
  Index block_size = 0;
};

struct MinimalityCertificate {
  enum class Kind { Deterministic, Probabilistic };
  bool minimal = false;
  Kind kind = Kind::Probabilistic;
  bool leading_full_rank = false;
  bool pointwise_full_rank = false;
  int points_checked = 0;
};

struct DualityReport {
  bool ok = false;
  double defect = 0.0;  // max |K(l) D(l)^T| over samples
  double scale = 0.0;
  int samples = 0;
};

// Vector polynomials stored as n x 1 PolyMatrix columns.
struct PolyVectorBasis {
  enum class Certificate { Deterministic, Probabilistic };
  std::vector<PolyMatrix> vectors;
  std::vector<int> degrees;
  Side side = Side::Right;
  Certificate certificate = Certificate::Probabilistic;
  std::vector<std::string> warnings;
};

// Points spread on a circle of the given radius, offset from the real axis.
std::vector<cplx> sample_points(int count, double radius);

MinimalityCertificate is_minimal_basis(const PolyMatrix& Q, std::uint64_t seed = 1,
                                       const Tolerances& tol = {});
DualityReport check_duality(const DualPair& pair, double radius = 1.0,
                            const Tolerances& tol = {});

// Assembles the block pencil; m and n are the block sizes of P (m x n).
BlockPencil assemble(const PolyMatrix& M, const PolyMatrix& K1, const PolyMatrix& K2,
                     Index m, Index n, Family family = Family::Generic, int param = 0);

// D2(l) M(l) D1(l)^T in monomial form, via samples on the unit circle.
PolyMatrix body_product(const PolyMatrix& M, const PolyMatrix& D1, const PolyMatrix& D2);

// Recovers monomial coefficients of a polynomial of degree <= deg from its
// values at the (deg+1)-th roots of unity.
PolyMatrix interpolate_roots_of_unity(const std::vector<Mat>& values);

// The constructed linearization together with everything needed to check
// and invert it.
struct Linearization {
  BlockPencil pencil;
  Family family = Family::Generic;
  int param = 0;  // mu or epsilon
  Mat A, B;
  PolyMatrix M;   // body including A K1 + K2^T B
  KDPair kd;
  MatrixPolynomial source;
  Index m = 0, n = 0;
  int k = 0;

  int p() const { return pencil.body_rows; }
  int q() const { return pencil.body_cols; }
};

// L H = (row_weights kron P) and G L = (col_weights^T kron P).
struct OneSided {
  PolyMatrix H, G;
  Vec row_weights;  // length p
  Vec col_weights;  // length q
};

// Adds A K1 + K2^T B to the body and reassembles. A is p*m x (q-1)*n,
// B is (p-1)*m x q*n.
Linearization apply_family(const Linearization& colleague, const Mat& A, const Mat& B);

// First companion pencil lambda diag(C_d, I, ..., I) + [C_{d-1} ... C_0; -I 0; ...]
// of a square monomial polynomial. Size d*r; empty for d = 0.
BlockPencil companion_pencil(const PolyMatrix& C);

// Block `block` (1-based) of a linearization vector; right vectors follow the
// column partition, left vectors the row partition.
Vec vector_block(const BlockPencil& pencil, const Vec& v, Side side, int block);
PolyMatrix vector_block(const BlockPencil& pencil, const PolyMatrix& v, Side side, int block);

struct RecoveredVector {
  Vec x;
  int block = 0;                       // block returned in x
  std::vector<int> valid_blocks;       // blocks guaranteed to be eigenvectors
  std::vector<int> unreliable_blocks;  // blocks not covered by the recovery rule
};

struct RecoveredBasis {
  PolyVectorBasis basis;           // degrees are polynomial-level indices
  std::vector<int> pencil_degrees;
  int shift = 0;                   // subtracted from pencil-level degrees
};

// x = sum_b weights(b) * block b over the first weights.size() blocks;
// degrees are reported as pencil degree minus shift. Throws DependentSet if
// the recovered vectors are not independent.
RecoveredBasis recover_weighted_basis(const BlockPencil& pencil, const PolyVectorBasis& basis,
                                      Side side, const Vec& weights, int shift,
                                      std::uint64_t seed = 7);

// Throws ZeroRecoveredBlock when x vanishes.
void require_nonzero_block(const Vec& x, int block);

}  // namespace bmbp
