#include "lapack.hpp"

#include <algorithm>
#include <string>

extern "C" {
void zggev_(const char* jobvl, const char* jobvr, const int* n, std::complex<double>* a,
            const int* lda, std::complex<double>* b, const int* ldb,
            std::complex<double>* alpha, std::complex<double>* beta,
            std::complex<double>* vl, const int* ldvl, std::complex<double>* vr,
            const int* ldvr, std::complex<double>* work, const int* lwork, double* rwork,
            int* info);
}

namespace bmbp::detail {

GeneralizedEig zggev(const Mat& A, const Mat& B, bool want_right, bool want_left) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw Error(ErrorCode::DimensionMismatch, "generalized eigenproblem needs square matrices of equal size");
  const int n = static_cast<int>(A.rows());
  GeneralizedEig out;
  if (n == 0) return out;

  Mat a = A, b = B;
  out.alpha.resize(static_cast<size_t>(n));
  out.beta.resize(static_cast<size_t>(n));
  Mat vl = Mat::Zero(want_left ? n : 1, want_left ? n : 1);
  Mat vr = Mat::Zero(want_right ? n : 1, want_right ? n : 1);
  const char jl = want_left ? 'V' : 'N', jr = want_right ? 'V' : 'N';
  const int ldvl = static_cast<int>(vl.rows()), ldvr = static_cast<int>(vr.rows());
  std::vector<double> rwork(static_cast<size_t>(8 * n));
  int info = 0, lwork = -1;
  std::complex<double> wq;
  zggev_(&jl, &jr, &n, a.data(), &n, b.data(), &n, out.alpha.data(), out.beta.data(), vl.data(),
         &ldvl, vr.data(), &ldvr, &wq, &lwork, rwork.data(), &info);
  lwork = std::max(1, static_cast<int>(wq.real()));
  std::vector<std::complex<double>> work(static_cast<size_t>(lwork));
  zggev_(&jl, &jr, &n, a.data(), &n, b.data(), &n, out.alpha.data(), out.beta.data(), vl.data(),
         &ldvl, vr.data(), &ldvr, work.data(), &lwork, rwork.data(), &info);
  if (info != 0)
    throw Error(ErrorCode::BackendFailure, "zggev failed with info=" + std::to_string(info));
  if (want_right) out.right = std::move(vr);
  if (want_left) out.left = std::move(vl);
  return out;
}

}  // namespace bmbp::detail
