#pragma once

#include <random>

#include "bmbp/common.hpp"

namespace bmbp::detail {

inline Eigen::VectorXd singular_values(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return Eigen::VectorXd();
  return Eigen::BDCSVD<Mat>(a).singularValues();
}

// Count of singular values above rel * sigma_max (rel * 1 for a zero matrix).
inline int numerical_rank(const Mat& a, double rel) {
  const Eigen::VectorXd s = singular_values(a);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > rel * s(0)) ++r;
  return r;
}

inline Mat random_complex(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  Mat m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = cplx(d(rng), d(rng));
  return m;
}

inline cplx random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double t = 2.0 * 3.14159265358979323846 * u(rng);
  return std::polar(r, t);
}

}  // namespace bmbp::detail
