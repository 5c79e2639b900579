#pragma once

#include <vector>

#include "bmbp/common.hpp"

namespace bmbp::detail {

struct GeneralizedEig {
  std::vector<cplx> alpha, beta;
  Mat right;  // columns v with beta A v = alpha B v
  Mat left;   // columns u with beta u^H A = alpha u^H B (empty unless requested)
};

// Generalized eigenproblem of (A, B) through LAPACK zggev.
GeneralizedEig zggev(const Mat& A, const Mat& B, bool want_right, bool want_left);

}  // namespace bmbp::detail
