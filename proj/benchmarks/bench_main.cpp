#include <benchmark/benchmark.h>

#include <random>

#include "bmbp/bmbp.hpp"

using namespace bmbp;

namespace {

Mat random_matrix(Index r, Index c, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  Mat a(r, c);
  for (Index j = 0; j < c; ++j)
    for (Index i = 0; i < r; ++i) a(i, j) = cplx(d(rng), d(rng));
  return a;
}

MatrixPolynomial random_poly(BasisKind kind, int k, Index n) {
  std::mt19937_64 rng(7);
  std::vector<Mat> c;
  for (int i = 0; i <= k; ++i) c.push_back(random_matrix(n, n, rng));
  std::vector<cplx> x;
  for (int i = 0; i <= k; ++i) x.push_back(std::polar(1.0, 2.0 * i + 0.1));
  switch (kind) {
    case BasisKind::Newton: return MatrixPolynomial(BasisDescriptor::newton(NodeSet({x.begin(), x.end() - 1})), c);
    case BasisKind::Lagrange: return MatrixPolynomial(BasisDescriptor::lagrange(NodeSet(x)), c);
    default: return MatrixPolynomial(BasisDescriptor::chebyshev(kind == BasisKind::Chebyshev1 ? 1 : 2), c);
  }
}

void BM_Linearize(benchmark::State& st, BasisKind kind) {
  const int k = static_cast<int>(st.range(0));
  const auto P = random_poly(kind, k, st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(linearize(P, k / 2));
}

void BM_Solve(benchmark::State& st, BasisKind kind) {
  const int k = static_cast<int>(st.range(0));
  const auto P = random_poly(kind, k, st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(solve_pep(P, k / 2));
  st.counters["eigenvalues"] = static_cast<double>(k * st.range(1));
}

void BM_Verify(benchmark::State& st) {
  const auto P = random_poly(BasisKind::Newton, static_cast<int>(st.range(0)), st.range(1));
  const auto lin = linearize(P, 1);
  for (auto _ : st) benchmark::DoNotOptimize(verify_strong_linearization(lin.pencil, P));
}

void BM_Nullspace(benchmark::State& st) {
  // [1, lambda^d] has a single right minimal index d.
  const int d = static_cast<int>(st.range(0));
  std::vector<Mat> c(static_cast<size_t>(d) + 1, Mat::Zero(1, 2));
  c[0](0, 0) = 1.0;
  c[static_cast<size_t>(d)](0, 1) = 1.0;
  PolyMatrix Q(1, 2, d);
  for (int j = 0; j <= d; ++j) Q.coeff(j) = c[static_cast<size_t>(j)];
  for (auto _ : st) benchmark::DoNotOptimize(nullspace_minimal_basis(Q, Side::Right));
}

void BM_ChebyshevCoefficients(benchmark::State& st) {
  const SampledFunction f = demo_function("exp");
  const int k = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(chebyshev_coefficients(f, k, 1, 1));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int k : {2, 4, 6})
    for (int n : {2, 4, 8}) b->Args({k, n});
}

}  // namespace

BENCHMARK_CAPTURE(BM_Linearize, newton, BasisKind::Newton)->Apply(sizes);
BENCHMARK_CAPTURE(BM_Linearize, lagrange, BasisKind::Lagrange)->Apply(sizes);
BENCHMARK_CAPTURE(BM_Linearize, chebyshev1, BasisKind::Chebyshev1)->Apply(sizes);
BENCHMARK_CAPTURE(BM_Solve, newton, BasisKind::Newton)->Apply(sizes);
BENCHMARK_CAPTURE(BM_Solve, lagrange, BasisKind::Lagrange)->Apply(sizes);
BENCHMARK_CAPTURE(BM_Solve, chebyshev1, BasisKind::Chebyshev1)->Apply(sizes);
BENCHMARK(BM_Verify)->Args({4, 2})->Args({6, 4});
BENCHMARK(BM_Nullspace)->DenseRange(1, 5);
BENCHMARK(BM_ChebyshevCoefficients)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_MAIN();
