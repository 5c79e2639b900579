#pragma once

#include <vector>

#include "bmbp/pencils.hpp"

namespace bmbp {

using LagrangeLinearization = Linearization;

// Coordinates of the constant 1 in the D2 (a) and D1 (b) bases.
struct MuCoordinates {
  int k = 0, mu = 0;
  std::vector<cplx> a;  // a_1 .. a_{mu+1}
  std::vector<cplx> b;  // b_{mu+1} .. b_k

  cplx a_at(int i) const { return a.at(static_cast<size_t>(i - 1)); }
  cplx b_at(int i) const { return b.at(static_cast<size_t>(i - mu - 1)); }
  // Display order [a_{mu+1}, ..., a_1] and [b_k, ..., b_{mu+1}].
  std::vector<cplx> a_display() const { return {a.rbegin(), a.rend()}; }
  std::vector<cplx> b_display() const { return {b.rbegin(), b.rend()}; }
};

MuCoordinates mu_coordinates(const NodeSet& nodes, int k, int mu);

// prod_{l=from}^{to} (lambda - x_l) * prod(extra) deflated by each divisor
// node. The largest synthetic-division remainder goes to *remainder.
Poly node_quotient(const NodeSet& nodes, int from, int to, const std::vector<int>& extra,
                   const std::vector<int>& divisors, double* remainder = nullptr);

KDPair build_K_D_lagrange(const NodeSet& nodes, int k, int mu, Index n, Index m);

LagrangeLinearization colleague_lagrange(const MatrixPolynomial& P, int mu);
LagrangeLinearization family_lagrange(const MatrixPolynomial& P, int mu, const Mat& A,
                                      const Mat& B);

// (T_j, S_j) at lambda, 1 <= j <= k+1.
std::pair<Mat, Mat> lagrange_splits(const MatrixPolynomial& P, int j, cplx lambda);
PolyMatrix lagrange_T_poly(const MatrixPolynomial& P, int j);
PolyMatrix lagrange_S_poly(const MatrixPolynomial& P, int j);

// Factor polynomials of the one-sided factorizations; j in [1, mu] and
// [mu+1, k-1] respectively.
PolyMatrix lagrange_script_P(const MatrixPolynomial& P, const MuCoordinates& c, int j,
                             double* remainder = nullptr);
PolyMatrix lagrange_script_Q(const MatrixPolynomial& P, const MuCoordinates& c, int j,
                             double* remainder = nullptr);

// L H = (sum_i a_{mu+2-i} e_i) kron P and G L = (sum_c b_{k+1-c} e_c^T) kron P.
OneSided one_sided_lagrange(const MatrixPolynomial& P, int mu);

// Blocks of a right (left) eigenvector that carry an eigenvector of P at a
// finite lambda0; blocks whose D1 (D2) entry vanishes there are excluded.
std::vector<int> lagrange_valid_blocks(const NodeSet& nodes, int k, int mu, const Eigenvalue& l0,
                                       Side side, double node_match);

RecoveredVector recover_eigvec_lagrange(const LagrangeLinearization& lin,
                                        const Eigenvalue& lambda0, const Vec& v, Side side,
                                        const Tolerances& tol = {});
RecoveredBasis recover_minimal_lagrange(const LagrangeLinearization& lin,
                                        const PolyVectorBasis& basis, Side side);

// The earlier k*n sized linearization with theta_i = w_{i-1}/w_i
// (nodes and samples indexed from 0). Square P only.
BlockPencil reference_pencil_lagrange(const MatrixPolynomial& P);

}  // namespace bmbp
