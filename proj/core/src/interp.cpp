#include "bmbp/interp.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "bmbp/io.hpp"

namespace bmbp {

NodeSet chebyshev_nodes(int k, int kind) {
  if (k < 0) throw Error(ErrorCode::ParamRange, "Chebyshev nodes need k >= 0");
  if (kind != 1 && kind != 2) throw Error(ErrorCode::ParamRange, "Chebyshev kind must be 1 or 2");
  std::vector<cplx> x;
  const double pi = std::numbers::pi;
  for (int i = 1; i <= k + 1; ++i) {
    if (kind == 1)
      x.emplace_back(std::cos((2.0 * i - 1.0) * pi / (2.0 * (k + 1))));
    else
      x.emplace_back(k == 0 ? 1.0 : std::cos((i - 1.0) * pi / k));
  }
  return NodeSet(std::move(x));
}

MatrixPolynomial divided_differences(const SampledFunction& T, const NodeSet& nodes) {
  if (nodes.size() == 0) throw Error(ErrorCode::InvalidInput, "divided differences need nodes");
  const int N = static_cast<int>(nodes.size());
  std::vector<Mat> table;
  for (int i = 1; i <= N; ++i) table.push_back(T(nodes.x(i)));
  std::vector<Mat> coeffs{table[0]};
  // After pass j, table[i] holds [y_{i+1}, ..., y_{i+j+1}].
  for (int j = 1; j < N; ++j) {
    for (int i = 0; i + j < N; ++i)
      table[static_cast<size_t>(i)] = (table[static_cast<size_t>(i) + 1] - table[static_cast<size_t>(i)]) /
                                      (nodes.x(i + j + 1) - nodes.x(i + 1));
    coeffs.push_back(table[0]);
  }
  return MatrixPolynomial(BasisDescriptor::newton(nodes.head(static_cast<size_t>(N - 1))), coeffs);
}

MatrixPolynomial lagrange_sample(const SampledFunction& T, const NodeSet& nodes) {
  if (nodes.size() == 0) throw Error(ErrorCode::InvalidInput, "Lagrange sampling needs nodes");
  std::vector<Mat> samples;
  for (int i = 1; i <= static_cast<int>(nodes.size()); ++i) samples.push_back(T(nodes.x(i)));
  return MatrixPolynomial(BasisDescriptor::lagrange(nodes), samples);
}

MatrixPolynomial chebyshev_coefficients(const SampledFunction& T, const NodeSet& nodes, int kind) {
  const int N = static_cast<int>(nodes.size());
  if (N == 0) throw Error(ErrorCode::InvalidInput, "collocation needs nodes");
  const int k = N - 1;
  Mat V(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) V(i, j) = chebyshev_phi(kind, j, nodes.x(i + 1));
  std::vector<Mat> samples;
  for (int i = 1; i <= N; ++i) samples.push_back(T(nodes.x(i)));
  const Index m = samples[0].rows(), n = samples[0].cols();
  Mat rhs(N, m * n);
  for (int i = 0; i < N; ++i) {
    if (samples[static_cast<size_t>(i)].rows() != m || samples[static_cast<size_t>(i)].cols() != n)
      throw Error(ErrorCode::DimensionMismatch, "function values change size");
    rhs.row(i) = samples[static_cast<size_t>(i)].reshaped().transpose();
  }
  const Mat sol = V.partialPivLu().solve(rhs);
  std::vector<Mat> coeffs;
  for (int j = 0; j <= k; ++j) coeffs.push_back(sol.row(j).transpose().reshaped(m, n));
  return MatrixPolynomial(BasisDescriptor::chebyshev(kind), coeffs);
}

MatrixPolynomial chebyshev_coefficients(const SampledFunction& T, int k, int kind, int node_kind) {
  return chebyshev_coefficients(T, chebyshev_nodes(k, node_kind), kind);
}

double max_deviation(const MatrixPolynomial& P, const SampledFunction& T,
                     const std::vector<cplx>& grid) {
  double out = 0.0;
  for (const cplx l : grid) out = std::max(out, (evaluate(P, l) - T(l)).norm());
  return out;
}

SampledFunction demo_function(const std::string& name) {
  if (name == "exp") {
    return [](cplx l) {
      Mat v(1, 1);
      v(0, 0) = std::exp(l);
      return v;
    };
  }
  if (name.rfind("poly:", 0) == 0) {
    std::string text = name.substr(5);
    const auto first = text.find_first_not_of(" \t\n");
    if (first == std::string::npos) throw Error(ErrorCode::InvalidInput, "poly: needs JSON or a path");
    if (text[first] != '{') {
      std::ifstream in(text);
      if (!in) throw Error(ErrorCode::Io, "cannot read " + text);
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    const MatrixPolynomial P = polynomial_from_json(text);
    return [P](cplx l) { return evaluate(P, l); };
  }
  throw Error(ErrorCode::InvalidInput, "unknown demo function '" + name + "'");
}

}  // namespace bmbp
