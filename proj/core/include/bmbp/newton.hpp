#pragma once

#include "bmbp/pencils.hpp"

namespace bmbp {

using NewtonLinearization = Linearization;

// Dual minimal bases for the Newton basis on nodes x_1..x_k.
KDPair build_K_D_newton(const NodeSet& nodes, int k, int mu, Index n, Index m);

NewtonLinearization colleague_newton(const MatrixPolynomial& P, int mu);
NewtonLinearization family_newton(const MatrixPolynomial& P, int mu, const Mat& A, const Mat& B);

// Newton-Horner shift P^i(lambda), 1 <= i <= k.
Mat newton_horner(const MatrixPolynomial& P, int i, cplx lambda);
PolyMatrix newton_horner_poly(const MatrixPolynomial& P, int i);

// H, G with L H = e_{mu+1} kron P and G L = e_{k-mu}^T kron P.
OneSided one_sided_newton(const MatrixPolynomial& P, int mu);

RecoveredVector recover_eigvec_newton(const NewtonLinearization& lin, const Eigenvalue& lambda0,
                                      const Vec& v, Side side, const Tolerances& tol = {});
RecoveredBasis recover_minimal_newton(const NewtonLinearization& lin, const PolyVectorBasis& basis,
                                      Side side);

}  // namespace bmbp
