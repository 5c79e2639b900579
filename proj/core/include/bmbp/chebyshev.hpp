#pragma once

#include "bmbp/pencils.hpp"

namespace bmbp {

using ChebLinearization = Linearization;

// K1 of kind kind1 with eps block rows (size n) and K2 of kind kind2 with
// k-1-eps block rows (size m), with their duals.
KDPair build_K_D_cheb(int k, int eps, int kind1, int kind2, Index n, Index m);

ChebLinearization colleague_cheb(const MatrixPolynomial& P, int eps);
ChebLinearization family_cheb(const MatrixPolynomial& P, int eps, const Mat& A, const Mat& B);

// Chebyshev-Horner shift P^i_{eps,r}(lambda), 0 <= i <= k-eps, by the
// three-term recurrence in i.
Mat cheb_horner(const MatrixPolynomial& P, int eps, int i, cplx lambda, int r);
PolyMatrix cheb_horner_poly(const MatrixPolynomial& P, int eps, int i, int r);

// L H = e_{k-eps} kron P and G L = e_{eps+1}^T kron P.
OneSided one_sided_cheb(const MatrixPolynomial& P, int eps);

RecoveredVector recover_eigvec_cheb(const ChebLinearization& lin, const Eigenvalue& lambda0,
                                    const Vec& v, Side side);
RecoveredBasis recover_minimal_cheb(const ChebLinearization& lin, const PolyVectorBasis& basis,
                                    Side side);

}  // namespace bmbp
