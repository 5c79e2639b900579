#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmbp/chebyshev.hpp"
#include "bmbp/lagrange.hpp"
#include "bmbp/newton.hpp"
#include "bmbp/pencils.hpp"

namespace bmbp {

// ---- family dispatch ----

// Colleague pencil (A, B empty) or family member of the basis of P.
Linearization linearize(const MatrixPolynomial& P, int param, const Mat& A = Mat(),
                        const Mat& B = Mat());
KDPair build_K_D(const MatrixPolynomial& P, int param);
OneSided one_sided(const MatrixPolynomial& P, int param);
RecoveredVector recover_eigvec(const Linearization& lin, const Eigenvalue& lambda0, const Vec& v,
                               Side side, const Tolerances& tol = {});
RecoveredBasis recover_minimal(const Linearization& lin, const PolyVectorBasis& basis, Side side);

// ---- generalized eigenproblem ----

struct GepResult {
  std::vector<cplx> alpha, beta;
  std::vector<Eigenvalue> values;
  Mat right;                    // unit columns, L(l) v = 0
  Mat left;                     // unit columns, y^T L(l) = 0 (empty unless requested)
  std::vector<double> condition;  // homogeneous condition numbers (needs left)
};

// Eigenpairs of lambda L1 + L0 = 0, i.e. (A, B) = (-L0, L1).
GepResult solve_gep(const Mat& L0, const Mat& L1, bool want_left = false,
                    const Tolerances& tol = {});

// Eigenvalues of a square monomial polynomial through its first companion pencil.
std::vector<Eigenvalue> companion_eigenvalues(const PolyMatrix& C, const Tolerances& tol = {});

struct SpectrumMatch {
  bool same_size = false;
  double max_distance = 0.0;  // chordal, greedy closest-pair assignment
  int infinite_a = 0, infinite_b = 0;
};

// Infinite counts use chordal distance to infinity at most `inf_tol`.
SpectrumMatch match_spectra(const std::vector<Eigenvalue>& a, const std::vector<Eigenvalue>& b,
                            double inf_tol);

// ---- polynomial eigenproblem ----

struct EigenPair {
  Eigenvalue lambda;
  Vec right;
  std::optional<Vec> left;
  double residual_right = 0.0;
  std::optional<double> residual_left;
  int recovered_from = 0;
  int recovered_from_left = 0;
  double condition = 0.0;  // of the linearization eigenvalue; 0 when unknown
};

struct EigenSolution {
  std::vector<EigenPair> pairs;
};

struct SolveOptions {
  Mat A, B;  // empty for the colleague pencil
  bool want_left = true;
  Tolerances tol;
  std::uint64_t seed = 1;
};

// Throws LikelySingular when P is not square or has deficient normal rank.
EigenSolution solve_pep(const MatrixPolynomial& P, int param, const SolveOptions& opts = {});
EigenSolution solve_linearization(const Linearization& lin, bool want_left,
                                  const Tolerances& tol = {});

// Ascending |lambda|, ties by argument, infinite last.
void sort_pairs(EigenSolution& sol);

// ||P(l) x|| / (sum_i ||P_i|| |phi_i(l)| ||x||); for infinite l the leading
// coefficients of the phi_i in lambda^k replace phi_i(l).
double backward_error(const MatrixPolynomial& P, const Eigenvalue& lambda, const Vec& x,
                      Side side);

// Normal rank estimated at `points` random points.
int normal_rank(const PolyMatrix& Q, std::uint64_t seed = 1, int points = 5,
                double rel = 1e-10);
bool likely_singular(const MatrixPolynomial& P, std::uint64_t seed = 1);

// ---- minimal bases ----

PolyVectorBasis nullspace_minimal_basis(const PolyMatrix& Q, Side side,
                                        const Tolerances& tol = {}, std::uint64_t seed = 1);
PolyVectorBasis nullspace_minimal_basis(const BlockPencil& L, Side side,
                                        const Tolerances& tol = {}, std::uint64_t seed = 1);
PolyVectorBasis nullspace_minimal_basis(const MatrixPolynomial& P, Side side,
                                        const Tolerances& tol = {}, std::uint64_t seed = 1);

// ---- verification ----

struct VerifyCheck {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

// Spectral and structural checks of a pencil that claims to linearize P.
// The pencil's family and parameter select the dual bases used for the
// D2 M D1^T and duality checks. Throws LikelySingular for singular P.
VerifyReport verify_strong_linearization(const BlockPencil& L, const MatrixPolynomial& P,
                                         const Tolerances& tol = {}, std::uint64_t seed = 1);

// L H = w kron P and G L = w^T kron P for a colleague pencil, sampled at
// deg + 1 points. Measured defects are relative to max(1, |L| |H|).
std::vector<VerifyCheck> check_one_sided(const Linearization& colleague,
                                         const Tolerances& tol = {});

// Relative coefficient error max_j ||A_j - B_j|| / max_j ||B_j||.
double relative_coefficient_error(const PolyMatrix& A, const PolyMatrix& B);

}  // namespace bmbp
