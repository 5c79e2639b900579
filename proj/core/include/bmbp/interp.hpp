#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bmbp/polycore.hpp"

namespace bmbp {

// Deterministic matrix-valued function of lambda.
using SampledFunction = std::function<Mat(cplx)>;

// k+1 Chebyshev nodes: kind 1 cos((2i-1) pi / (2(k+1))), kind 2 cos((i-1) pi / k).
NodeSet chebyshev_nodes(int k, int kind);

// Newton form through T at all k+1 nodes; the basis uses the first k.
MatrixPolynomial divided_differences(const SampledFunction& T, const NodeSet& nodes);

// Lagrange form storing P_i = T(x_i).
MatrixPolynomial lagrange_sample(const SampledFunction& T, const NodeSet& nodes);

// Chebyshev coefficients of kind `kind` by collocation at the k+1 Chebyshev
// nodes of kind `node_kind`.
MatrixPolynomial chebyshev_coefficients(const SampledFunction& T, int k, int kind, int node_kind);
// Same, at caller-supplied nodes (k+1 of them).
MatrixPolynomial chebyshev_coefficients(const SampledFunction& T, const NodeSet& nodes, int kind);

// Largest ||P(l) - T(l)|| over the grid; a diagnostic only.
double max_deviation(const MatrixPolynomial& P, const SampledFunction& T,
                     const std::vector<cplx>& grid);

// Built-in functions: "exp" and "poly:<json or path>".
SampledFunction demo_function(const std::string& name);

}  // namespace bmbp
