#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmbp/common.hpp"
#include "bmbp/poly.hpp"

namespace bmbp {

enum class BasisKind { Monomial, Newton, Lagrange, Chebyshev1, Chebyshev2 };

const char* basis_name(BasisKind kind);            // "newton", "chebyshev1", ...
BasisKind basis_from_name(const std::string& name);  // throws InvalidInput

// Ordered, pairwise distinct nodes with barycentric weights
// w_i = 1 / prod_{j != i} (x_i - x_j).
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<cplx> points);

  size_t size() const { return points_.size(); }
  const std::vector<cplx>& points() const { return points_; }
  const std::vector<cplx>& weights() const { return weights_; }
  // 1-based access, matching x_1, ..., x_N.
  cplx x(int i) const { return points_.at(static_cast<size_t>(i - 1)); }
  cplx w(int i) const { return weights_.at(static_cast<size_t>(i - 1)); }

  double min_separation() const;
  // True when two nodes are closer than rel * (1 + max |x|).
  bool nearly_coincident(double rel) const;
  double max_abs() const;
  NodeSet head(size_t count) const;

 private:
  std::vector<cplx> points_;
  std::vector<cplx> weights_;
};

struct BasisDescriptor {
  BasisKind kind = BasisKind::Monomial;
  std::optional<NodeSet> nodes;

  static BasisDescriptor monomial() { return {BasisKind::Monomial, std::nullopt}; }
  static BasisDescriptor newton(NodeSet n) { return {BasisKind::Newton, std::move(n)}; }
  static BasisDescriptor lagrange(NodeSet n) { return {BasisKind::Lagrange, std::move(n)}; }
  static BasisDescriptor chebyshev(int kind);
};

// Grade-k matrix polynomial sum_i P_i phi_i. For the Lagrange basis the
// coefficients are the node samples P_1..P_{k+1} stored at offsets 0..k.
class MatrixPolynomial {
 public:
  MatrixPolynomial() = default;
  MatrixPolynomial(BasisDescriptor basis, std::vector<Mat> coeffs);

  const BasisDescriptor& basis() const { return basis_; }
  BasisKind kind() const { return basis_.kind; }
  const NodeSet& nodes() const;
  int grade() const { return static_cast<int>(coeffs_.size()) - 1; }
  Index rows() const { return coeffs_.front().rows(); }
  Index cols() const { return coeffs_.front().cols(); }
  const std::vector<Mat>& coeffs() const { return coeffs_; }
  // Offset access; P_i for Newton/Chebyshev/monomial, P_{i+1} for Lagrange.
  const Mat& coeff(int offset) const { return coeffs_.at(static_cast<size_t>(offset)); }
  // Indexing: Lagrange samples are 1-based, everything else 0-based.
  const Mat& P(int i) const;
  bool is_square() const { return rows() == cols(); }
  int chebyshev_kind() const;  // 1 or 2

 private:
  BasisDescriptor basis_;
  std::vector<Mat> coeffs_;
};

struct EvalInfo {
  bool near_node = false;  // within node_proximity of a node but not equal
  bool at_node = false;
};

Mat evaluate(const MatrixPolynomial& p, cplx lambda, EvalInfo* info = nullptr,
             double node_proximity = 1e-14);

// rev_k P as a grade-k monomial polynomial, by basis-elementwise reversal.
MatrixPolynomial reverse(const MatrixPolynomial& p);

MatrixPolynomial to_monomial(const MatrixPolynomial& p);

// Monomial coefficients as a PolyMatrix of degree bound k.
PolyMatrix monomial_coefficients(const MatrixPolynomial& p);

// Monomial coefficients of phi_0, ..., phi_k of the given basis.
std::vector<Poly> basis_polynomials(const BasisDescriptor& basis, int k);

// phi_0(lambda), ..., phi_k(lambda).
std::vector<cplx> basis_values(const BasisDescriptor& basis, int k, cplx lambda);

// gamma_j(lambda) = lambda - x_j, 1-based.
cplx newton_gamma(const NodeSet& nodes, int j, cplx lambda);
// n_i^j(lambda) = prod_{l=i}^{j} gamma_l(lambda); 1 when j < i.
cplx newton_aux(const NodeSet& nodes, int i, int j, cplx lambda);
Poly gamma_poly(const NodeSet& nodes, int j);
Poly newton_aux_poly(const NodeSet& nodes, int i, int j);

// Chebyshev phi_n of kind 1 (T) or 2 (U) by the forward three-term
// recurrence. Negative n uses the bilateral extension T_{-n} = T_n,
// U_{-1} = 0, U_{-n} = -U_{n-2}.
cplx chebyshev_phi(int kind, int n, cplx lambda);
Poly chebyshev_phi_poly(int kind, int n);

}  // namespace bmbp
