#include <doctest.h>

#include "support.hpp"

using namespace bmbp;
using namespace bmbp::testing;

namespace {

Mat s(cplx v) {
  Mat a(1, 1);
  a(0, 0) = v;
  return a;
}

MatrixPolynomial scalar_poly(BasisDescriptor b, std::vector<cplx> c) {
  std::vector<Mat> m;
  for (cplx v : c) m.push_back(s(v));
  return MatrixPolynomial(std::move(b), m);
}

const BasisKind kAllKinds[] = {BasisKind::Monomial, BasisKind::Newton, BasisKind::Lagrange,
                               BasisKind::Chebyshev1, BasisKind::Chebyshev2};

}  // namespace

TEST_CASE("newton evaluation examples") {
  const auto P = scalar_poly(BasisDescriptor::newton(NodeSet({0.0, 1.0})), {1.0, 1.0, 1.0});
  CHECK(std::abs(evaluate(P, 2.0)(0, 0) - 5.0) < 1e-14);
  CHECK(std::abs(evaluate(P, 0.0)(0, 0) - 1.0) < 1e-14);
}

TEST_CASE("chebyshev and lagrange evaluation examples") {
  const auto T2 = scalar_poly(BasisDescriptor::chebyshev(1), {0.0, 0.0, 1.0});
  CHECK(std::abs(evaluate(T2, 1.0)(0, 0) - 1.0) < 1e-14);
  const auto L = scalar_poly(BasisDescriptor::lagrange(NodeSet({0.0, 1.0, 2.0})), {1.0, 2.0, 5.0});
  EvalInfo info;
  CHECK(evaluate(L, 1.0, &info)(0, 0) == cplx(2.0));
  CHECK(info.at_node);
}

TEST_CASE("barycentric evaluation returns samples bit-exactly") {
  std::mt19937_64 rng(3);
  const auto P = rand_poly(BasisKind::Lagrange, 4, 2, 3, rng);
  for (int i = 1; i <= 5; ++i) {
    const Mat v = evaluate(P, P.nodes().x(i));
    CHECK((v.array() == P.P(i).array()).all());
  }
  EvalInfo info;
  evaluate(P, P.nodes().x(2) + cplx(1e-16, 0.0), &info);
  CHECK((info.near_node || info.at_node));
}

TEST_CASE("evaluate agrees with the naive definitions and with to_monomial") {
  std::mt19937_64 rng(11);
  for (BasisKind kind : kAllKinds) {
    for (int k = 0; k <= 6; ++k) {
      if (kind == BasisKind::Lagrange && k == 0) continue;
      const auto P = rand_poly(kind, k, 2, 3, rng);
      const auto Pm = to_monomial(P);
      CHECK(Pm.kind() == BasisKind::Monomial);
      CHECK(Pm.grade() == k);
      for (int t = 0; t < 10; ++t) {
        const cplx l = rand_point(rng, 1.5);
        const Mat ref = naive_eval(P, l);
        CHECK(rel(evaluate(P, l), ref) < 1e-12);
        CHECK(rel(evaluate(Pm, l), ref) < 1e-12);
      }
    }
  }
}

TEST_CASE("to_monomial examples") {
  const auto N = to_monomial(scalar_poly(BasisDescriptor::newton(NodeSet({0.0, 1.0})), {1.0, 1.0, 1.0}));
  CHECK(std::abs(N.coeff(0)(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(N.coeff(1)(0, 0)) < 1e-14);
  CHECK(std::abs(N.coeff(2)(0, 0) - 1.0) < 1e-14);
  const auto L = to_monomial(scalar_poly(BasisDescriptor::lagrange(NodeSet({0.0, 1.0, 2.0})), {0.0, 1.0, 4.0}));
  CHECK(std::abs(L.coeff(0)(0, 0)) < 1e-14);
  CHECK(std::abs(L.coeff(1)(0, 0)) < 1e-14);
  CHECK(std::abs(L.coeff(2)(0, 0) - 1.0) < 1e-14);
  const auto U = to_monomial(scalar_poly(BasisDescriptor::chebyshev(2), {0.0, 1.0}));
  CHECK(std::abs(U.coeff(0)(0, 0)) < 1e-15);
  CHECK(std::abs(U.coeff(1)(0, 0) - 2.0) < 1e-15);
}

TEST_CASE("reverse examples") {
  const auto m = reverse(scalar_poly(BasisDescriptor::monomial(), {1.0, 0.0, 1.0}));
  CHECK(m.coeff(0)(0, 0) == cplx(1.0));
  CHECK(m.coeff(2)(0, 0) == cplx(1.0));
  // n_2 with nodes {0,1}: rev_2(lambda^2 - lambda) = 1 - lambda
  const auto n = reverse(scalar_poly(BasisDescriptor::newton(NodeSet({0.0, 1.0})), {0.0, 0.0, 1.0}));
  CHECK(std::abs(n.coeff(0)(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(n.coeff(1)(0, 0) + 1.0) < 1e-15);
  CHECK(std::abs(n.coeff(2)(0, 0)) < 1e-15);
  const auto t = reverse(scalar_poly(BasisDescriptor::chebyshev(1), {0.0, 0.0, 1.0}));
  CHECK(std::abs(t.coeff(0)(0, 0) - 2.0) < 1e-15);
  CHECK(std::abs(t.coeff(1)(0, 0)) < 1e-15);
  CHECK(std::abs(t.coeff(2)(0, 0) + 1.0) < 1e-15);
}

TEST_CASE("reversal matches lambda^k P(1/lambda) and is an involution") {
  std::mt19937_64 rng(5);
  for (BasisKind kind : kAllKinds) {
    for (int k = 1; k <= 5; ++k) {
      const auto P = rand_poly(kind, k, 2, 2, rng);
      const auto R = reverse(P);
      for (int t = 0; t < 5; ++t) {
        const cplx l = rand_point(rng) + cplx(0.5, 0.0);
        CHECK(rel(evaluate(R, l), std::pow(l, k) * naive_eval(P, 1.0 / l)) < 1e-10);
      }
      const auto RR = reverse(R);
      const auto Pm = to_monomial(P);
      for (int i = 0; i <= k; ++i) CHECK(rel(RR.coeff(i), Pm.coeff(i)) < 1e-12);
    }
  }
}

TEST_CASE("newton_aux examples") {
  const NodeSet x({0.0, 1.0, 2.0});
  CHECK(std::abs(newton_aux(x, 1, 3, 3.0) - 6.0) < 1e-15);
  CHECK(newton_aux(x, 2, 1, cplx(0.3, 0.7)) == cplx(1.0));
  CHECK(newton_gamma(x, 2, 1.0) == cplx(0.0));
  CHECK_THROWS_AS(newton_aux(x, 0, 2, 1.0), Error);
  CHECK_THROWS_AS(newton_gamma(x, 4, 1.0), Error);
}

TEST_CASE("node validation") {
  CHECK_THROWS_AS(NodeSet({0.0, 1.0, 0.0}), Error);
  try {
    NodeSet({1.0, 1.0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateNodes);
  }
  const NodeSet w({0.0, 1.0, 2.0});
  CHECK(std::abs(w.w(1) - 0.5) < 1e-15);
  CHECK(std::abs(w.w(2) + 1.0) < 1e-15);
  CHECK(std::abs(w.w(3) - 0.5) < 1e-15);
  CHECK(NodeSet({0.0, 1e-15}).nearly_coincident(1e-12));
  // Newton grade k needs k nodes, Lagrange k+1, others none.
  const Mat one = s(1.0);
  CHECK_THROWS_AS(MatrixPolynomial(BasisDescriptor::newton(NodeSet({0.0, 1.0})), {one, one}), Error);
  CHECK_THROWS_AS(MatrixPolynomial(BasisDescriptor::lagrange(NodeSet({0.0, 1.0})), {one, one, one}), Error);
  BasisDescriptor bad = BasisDescriptor::chebyshev(1);
  bad.nodes = NodeSet({0.0});
  CHECK_THROWS_AS(MatrixPolynomial(bad, {one}), Error);
  CHECK_THROWS_AS(MatrixPolynomial(BasisDescriptor::monomial(), {one, Mat::Ones(2, 1)}), Error);
}

TEST_CASE("chebyshev identities hold pointwise") {
  std::mt19937_64 rng(17);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const cplx l = rand_point(rng);
    auto T = [&](int n) { return chebyshev_phi(1, n, l); };
    auto U = [&](int n) { return chebyshev_phi(2, n, l); };
    for (int r = 1; r <= 6; ++r) {
      for (int q = 1; q <= 6; ++q) {
        const cplx a = U(r) * T(q) - U(r - 1) * T(q - 1);
        worst = std::max(worst, std::abs(T(r + q) - a) / std::abs(T(r + q)));
        const cplx b = 2.0 * l * U(r) * T(q) - U(r) * T(q - 1) - U(r - 1) * T(q);
        worst = std::max(worst, std::abs(T(r + q + 1) - b) / std::abs(T(r + q + 1)));
        const cplx c = U(r) * U(q) - U(r - 1) * U(q - 1);
        worst = std::max(worst, std::abs(U(r + q) - c) / std::abs(U(r + q)));
        const cplx d = 2.0 * l * U(r) * U(q) - U(r) * U(q - 1) - U(r - 1) * U(q);
        worst = std::max(worst, std::abs(U(r + q + 1) - d) / std::abs(U(r + q + 1)));
      }
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("bilateral chebyshev extension") {
  const cplx l(0.3, -0.4);
  for (int n = 0; n <= 5; ++n) {
    CHECK(std::abs(chebyshev_phi(1, -n, l) - chebyshev_phi(1, n, l)) < 1e-14);
    if (n >= 2) CHECK(std::abs(chebyshev_phi(2, -n, l) + chebyshev_phi(2, n - 2, l)) < 1e-14);
  }
  CHECK(chebyshev_phi(2, -1, l) == cplx(0.0));
}

TEST_CASE("basis names round-trip") {
  for (BasisKind kind : kAllKinds) CHECK(basis_from_name(basis_name(kind)) == kind);
  CHECK_THROWS_AS(basis_from_name("hermite"), Error);
}
