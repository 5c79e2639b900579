#include "bmbp/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bmbp {

const char* basis_name(BasisKind kind) {
  switch (kind) {
    case BasisKind::Monomial: return "monomial";
    case BasisKind::Newton: return "newton";
    case BasisKind::Lagrange: return "lagrange";
    case BasisKind::Chebyshev1: return "chebyshev1";
    case BasisKind::Chebyshev2: return "chebyshev2";
  }
  return "monomial";
}

BasisKind basis_from_name(const std::string& name) {
  if (name == "monomial") return BasisKind::Monomial;
  if (name == "newton") return BasisKind::Newton;
  if (name == "lagrange") return BasisKind::Lagrange;
  if (name == "chebyshev1" || name == "cheb1") return BasisKind::Chebyshev1;
  if (name == "chebyshev2" || name == "cheb2") return BasisKind::Chebyshev2;
  throw Error(ErrorCode::InvalidInput, "unknown basis '" + name + "'");
}

NodeSet::NodeSet(std::vector<cplx> points) : points_(std::move(points)) {
  const size_t n = points_.size();
  for (size_t i = 0; i < n; ++i) {
    if (!std::isfinite(points_[i].real()) || !std::isfinite(points_[i].imag()))
      throw Error(ErrorCode::InvalidInput, "node is not finite");
    for (size_t j = i + 1; j < n; ++j)
      if (points_[i] == points_[j])
        throw Error(ErrorCode::DuplicateNodes,
                    "nodes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " coincide");
  }
  weights_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    cplx prod(1.0);
    for (size_t j = 0; j < n; ++j)
      if (j != i) prod *= points_[i] - points_[j];
    weights_[i] = 1.0 / prod;
  }
}

double NodeSet::min_separation() const {
  double s = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < points_.size(); ++i)
    for (size_t j = i + 1; j < points_.size(); ++j)
      s = std::min(s, std::abs(points_[i] - points_[j]));
  return s;
}

double NodeSet::max_abs() const {
  double m = 0.0;
  for (const auto& p : points_) m = std::max(m, std::abs(p));
  return m;
}

bool NodeSet::nearly_coincident(double rel) const {
  return points_.size() > 1 && min_separation() < rel * (1.0 + max_abs());
}

NodeSet NodeSet::head(size_t count) const {
  if (count > points_.size()) throw Error(ErrorCode::IndexRange, "node subset too large");
  return NodeSet(std::vector<cplx>(points_.begin(), points_.begin() + static_cast<long>(count)));
}

BasisDescriptor BasisDescriptor::chebyshev(int kind) {
  if (kind != 1 && kind != 2) throw Error(ErrorCode::ParamRange, "Chebyshev kind must be 1 or 2");
  return {kind == 1 ? BasisKind::Chebyshev1 : BasisKind::Chebyshev2, std::nullopt};
}

MatrixPolynomial::MatrixPolynomial(BasisDescriptor basis, std::vector<Mat> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidInput, "polynomial needs at least one coefficient");
  const Index m = coeffs_.front().rows(), n = coeffs_.front().cols();
  if (m == 0 || n == 0) throw Error(ErrorCode::InvalidInput, "empty coefficient matrices");
  for (const auto& c : coeffs_)
    if (c.rows() != m || c.cols() != n)
      throw Error(ErrorCode::DimensionMismatch, "coefficient matrices differ in size");
  const size_t k = coeffs_.size() - 1;
  switch (basis_.kind) {
    case BasisKind::Newton:
      if (!basis_.nodes || basis_.nodes->size() != k)
        throw Error(ErrorCode::InvalidInput, "Newton basis of grade k needs exactly k nodes");
      break;
    case BasisKind::Lagrange:
      if (!basis_.nodes || basis_.nodes->size() != k + 1)
        throw Error(ErrorCode::InvalidInput, "Lagrange basis of grade k needs exactly k+1 nodes");
      break;
    default:
      if (basis_.nodes)
        throw Error(ErrorCode::InvalidInput, std::string("nodes are not allowed for basis ") +
                                                 basis_name(basis_.kind));
  }
}

const NodeSet& MatrixPolynomial::nodes() const {
  if (!basis_.nodes) throw Error(ErrorCode::InvalidInput, "basis has no nodes");
  return *basis_.nodes;
}

const Mat& MatrixPolynomial::P(int i) const {
  if (basis_.kind == BasisKind::Lagrange) {
    if (i < 1 || i > grade() + 1) throw Error(ErrorCode::IndexRange, "Lagrange sample index out of range");
    return coeffs_[static_cast<size_t>(i - 1)];
  }
  if (i < 0 || i > grade()) throw Error(ErrorCode::IndexRange, "coefficient index out of range");
  return coeffs_[static_cast<size_t>(i)];
}

int MatrixPolynomial::chebyshev_kind() const {
  if (basis_.kind == BasisKind::Chebyshev1) return 1;
  if (basis_.kind == BasisKind::Chebyshev2) return 2;
  throw Error(ErrorCode::UnsupportedBasis, "not a Chebyshev basis");
}

cplx newton_gamma(const NodeSet& nodes, int j, cplx lambda) {
  if (j < 1 || j > static_cast<int>(nodes.size()))
    throw Error(ErrorCode::IndexRange, "gamma index out of range");
  return lambda - nodes.x(j);
}

cplx newton_aux(const NodeSet& nodes, int i, int j, cplx lambda) {
  if (j < i) return 1.0;
  const int N = static_cast<int>(nodes.size());
  if (i < 1 || j > N) throw Error(ErrorCode::IndexRange, "n_i^j index out of range");
  cplx p(1.0);
  for (int l = i; l <= j; ++l) p *= lambda - nodes.x(l);
  return p;
}

Poly gamma_poly(const NodeSet& nodes, int j) {
  if (j < 1 || j > static_cast<int>(nodes.size()))
    throw Error(ErrorCode::IndexRange, "gamma index out of range");
  return Poly{-nodes.x(j), cplx(1.0)};
}

Poly newton_aux_poly(const NodeSet& nodes, int i, int j) {
  if (j < i) return Poly{cplx(1.0)};
  if (i < 1 || j > static_cast<int>(nodes.size()))
    throw Error(ErrorCode::IndexRange, "n_i^j index out of range");
  std::vector<cplx> roots;
  for (int l = i; l <= j; ++l) roots.push_back(nodes.x(l));
  return poly_from_roots(roots);
}

cplx chebyshev_phi(int kind, int n, cplx lambda) {
  if (n < 0) {
    if (kind == 1) return chebyshev_phi(1, -n, lambda);
    if (n == -1) return 0.0;
    return -chebyshev_phi(2, -n - 2, lambda);
  }
  cplx p0(1.0), p1 = kind == 1 ? lambda : 2.0 * lambda;
  if (n == 0) return p0;
  for (int t = 1; t < n; ++t) {
    cplx p2 = 2.0 * lambda * p1 - p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

Poly chebyshev_phi_poly(int kind, int n) {
  if (n < 0) throw Error(ErrorCode::IndexRange, "negative Chebyshev degree");
  Poly p0{cplx(1.0)};
  Poly p1 = kind == 1 ? Poly{0.0, 1.0} : Poly{0.0, 2.0};
  if (n == 0) return p0;
  const Poly two_x{0.0, 2.0};
  for (int t = 1; t < n; ++t) {
    Poly p2 = poly_add(poly_mul(two_x, p1), poly_scale(p0, -1.0));
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

std::vector<Poly> basis_polynomials(const BasisDescriptor& basis, int k) {
  std::vector<Poly> out;
  out.reserve(static_cast<size_t>(k + 1));
  switch (basis.kind) {
    case BasisKind::Monomial:
      for (int i = 0; i <= k; ++i) {
        Poly p(static_cast<size_t>(i + 1), cplx(0.0));
        p.back() = 1.0;
        out.push_back(p);
      }
      break;
    case BasisKind::Newton:
      for (int i = 0; i <= k; ++i) out.push_back(newton_aux_poly(*basis.nodes, 1, i));
      break;
    case BasisKind::Lagrange: {
      const NodeSet& x = *basis.nodes;
      for (int i = 1; i <= k + 1; ++i) {
        std::vector<cplx> roots;
        for (int j = 1; j <= k + 1; ++j)
          if (j != i) roots.push_back(x.x(j));
        out.push_back(poly_scale(poly_from_roots(roots), x.w(i)));
      }
      break;
    }
    case BasisKind::Chebyshev1:
    case BasisKind::Chebyshev2: {
      const int kind = basis.kind == BasisKind::Chebyshev1 ? 1 : 2;
      for (int i = 0; i <= k; ++i) out.push_back(chebyshev_phi_poly(kind, i));
      break;
    }
  }
  return out;
}

std::vector<cplx> basis_values(const BasisDescriptor& basis, int k, cplx lambda) {
  std::vector<cplx> v(static_cast<size_t>(k + 1));
  switch (basis.kind) {
    case BasisKind::Monomial: {
      cplx p(1.0);
      for (auto& e : v) { e = p; p *= lambda; }
      break;
    }
    case BasisKind::Newton: {
      cplx p(1.0);
      for (int i = 0; i <= k; ++i) {
        if (i > 0) p *= lambda - basis.nodes->x(i);
        v[static_cast<size_t>(i)] = p;
      }
      break;
    }
    case BasisKind::Lagrange: {
      const NodeSet& x = *basis.nodes;
      for (int i = 1; i <= k + 1; ++i) {
        cplx p = x.w(i);
        for (int j = 1; j <= k + 1; ++j)
          if (j != i) p *= lambda - x.x(j);
        v[static_cast<size_t>(i - 1)] = p;
      }
      break;
    }
    case BasisKind::Chebyshev1:
    case BasisKind::Chebyshev2: {
      const int kind = basis.kind == BasisKind::Chebyshev1 ? 1 : 2;
      cplx p0(1.0), p1 = kind == 1 ? lambda : 2.0 * lambda;
      for (int i = 0; i <= k; ++i) {
        if (i == 0) { v[0] = p0; continue; }
        if (i == 1) { v[1] = p1; continue; }
        cplx p2 = 2.0 * lambda * p1 - p0;
        p0 = p1;
        p1 = p2;
        v[static_cast<size_t>(i)] = p1;
      }
      break;
    }
  }
  return v;
}

Mat evaluate(const MatrixPolynomial& p, cplx lambda, EvalInfo* info, double node_proximity) {
  const int k = p.grade();
  if (info) *info = EvalInfo{};
  switch (p.kind()) {
    case BasisKind::Monomial: {
      Mat acc = Mat::Zero(p.rows(), p.cols());
      for (int i = k; i >= 0; --i) acc = acc * lambda + p.coeff(i);
      return acc;
    }
    case BasisKind::Newton: {
      Mat acc = p.coeff(0);
      cplx n(1.0);
      for (int i = 1; i <= k; ++i) {
        n *= lambda - p.nodes().x(i);
        acc += n * p.coeff(i);
      }
      return acc;
    }
    case BasisKind::Chebyshev1:
    case BasisKind::Chebyshev2: {
      // Clenshaw on phi_{j+1} = 2 lambda phi_j - phi_{j-1}.
      Mat b1 = Mat::Zero(p.rows(), p.cols()), b2 = b1;
      for (int j = k; j >= 1; --j) {
        Mat b0 = p.coeff(j) + 2.0 * lambda * b1 - b2;
        b2 = std::move(b1);
        b1 = std::move(b0);
      }
      if (p.kind() == BasisKind::Chebyshev1) return p.coeff(0) + lambda * b1 - b2;
      return p.coeff(0) + 2.0 * lambda * b1 - b2;
    }
    case BasisKind::Lagrange: {
      const NodeSet& x = p.nodes();
      for (int i = 1; i <= k + 1; ++i)
        if (lambda == x.x(i)) {
          if (info) info->at_node = true;
          return p.P(i);
        }
      cplx ell(1.0);
      Mat acc = Mat::Zero(p.rows(), p.cols());
      for (int i = 1; i <= k + 1; ++i) {
        const cplx d = lambda - x.x(i);
        if (info && std::abs(d) < node_proximity * (1.0 + std::abs(x.x(i)))) info->near_node = true;
        ell *= d;
        acc += (x.w(i) / d) * p.P(i);
      }
      return ell * acc;
    }
  }
  return {};
}

PolyMatrix monomial_coefficients(const MatrixPolynomial& p) {
  const int k = p.grade();
  if (p.kind() == BasisKind::Monomial) {
    PolyMatrix r(p.rows(), p.cols(), k);
    for (int i = 0; i <= k; ++i) r.coeff(i) = p.coeff(i);
    return r;
  }
  const auto phis = basis_polynomials(p.basis(), k);
  PolyMatrix r(p.rows(), p.cols(), k);
  for (int i = 0; i <= k; ++i) {
    const Poly& phi = phis[static_cast<size_t>(i)];
    for (size_t j = 0; j < phi.size(); ++j) r.coeff(static_cast<int>(j)) += phi[j] * p.coeff(i);
  }
  return r;
}

MatrixPolynomial to_monomial(const MatrixPolynomial& p) {
  const PolyMatrix c = monomial_coefficients(p);
  return MatrixPolynomial(BasisDescriptor::monomial(), c.coeffs());
}

MatrixPolynomial reverse(const MatrixPolynomial& p) {
  const int k = p.grade();
  // rev_k phi_i for each basis element, as monomial coefficients of grade k.
  std::vector<Poly> rev(static_cast<size_t>(k + 1));
  switch (p.kind()) {
    case BasisKind::Newton:
    case BasisKind::Lagrange: {
      const NodeSet& x = p.nodes();
      for (int i = 0; i <= k; ++i) {
        Poly r{cplx(1.0)};
        int s = 0;
        if (p.kind() == BasisKind::Newton) {
          for (int j = 1; j <= i; ++j) r = poly_mul(r, Poly{1.0, -x.x(j)});
          s = i;
        } else {
          for (int j = 1; j <= k + 1; ++j)
            if (j != i + 1) r = poly_mul(r, Poly{1.0, -x.x(j)});
          r = poly_scale(r, x.w(i + 1));
          s = k;
        }
        // lambda^{k-s} * prod (1 - x_j lambda)
        Poly shifted(static_cast<size_t>(k + 1), cplx(0.0));
        for (size_t t = 0; t < r.size(); ++t) shifted[t + static_cast<size_t>(k - s)] = r[t];
        rev[static_cast<size_t>(i)] = shifted;
      }
      break;
    }
    default: {
      const auto phis = basis_polynomials(p.basis(), k);
      for (int i = 0; i <= k; ++i) {
        Poly padded = phis[static_cast<size_t>(i)];
        padded.resize(static_cast<size_t>(k + 1), cplx(0.0));
        std::reverse(padded.begin(), padded.end());
        rev[static_cast<size_t>(i)] = padded;
      }
    }
  }
  std::vector<Mat> out(static_cast<size_t>(k + 1), Mat::Zero(p.rows(), p.cols()));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) {
      const cplx c = rev[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (c != cplx(0.0)) out[static_cast<size_t>(j)] += c * p.coeff(i);
    }
  return MatrixPolynomial(BasisDescriptor::monomial(), std::move(out));
}

}  // namespace bmbp
