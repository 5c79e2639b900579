#include <doctest.h>

#include "support.hpp"

using namespace bmbp;
using namespace bmbp::testing;

namespace {

MatrixPolynomial scalar_lagrange(std::vector<cplx> nodes, std::vector<cplx> s) {
  std::vector<Mat> m;
  for (cplx v : s) m.push_back(scalar1(v));
  return MatrixPolynomial(BasisDescriptor::lagrange(NodeSet(std::move(nodes))), m);
}

cplx ratio(const NodeSet& x, int from, int to, int i, cplx l) {
  cplx p = 1.0;
  for (int t = from; t <= to; ++t) p *= l - x.x(t);
  return p / ((l - x.x(i + 1)) * (l - x.x(i)));
}

}  // namespace

TEST_CASE("K/D pair for k=2, mu=0") {
  const KDPair kd = build_K_D_lagrange(NodeSet({0.0, 1.0, 2.0}), 2, 0, 1, 1);
  const cplx l(0.3, 0.6);
  Mat K1(1, 2), D1(1, 2);
  K1 << l - 2.0, -l;
  D1 << l, l - 2.0;
  CHECK((kd.K1(l) - K1).norm() < 1e-15);
  CHECK((kd.D1(l) - D1).norm() < 1e-15);
}

TEST_CASE("duality and polynomial D entries") {
  std::mt19937_64 rng(1);
  const NodeSet x = rand_nodes(6, rng);
  const KDPair kd = build_K_D_lagrange(x, 5, 2, 2, 2);
  CHECK(check_duality({kd.K1, kd.D1, Family::Lagrange, 2, 2}).ok);
  CHECK(check_duality({kd.K2, kd.D2, Family::Lagrange, 2, 2}).ok);
  double rem = 0.0;
  for (int j = 3; j <= 5; ++j) {
    double r = 0.0;
    node_quotient(x, 3, 6, {}, {j, j + 1}, &r);
    rem = std::max(rem, r);
  }
  CHECK(rem < 1e-12);
  CHECK_THROWS_AS(build_K_D_lagrange(x, 5, 5, 2, 2), Error);
}

TEST_CASE("worked example: colleague and family pencils for k=5, mu=2") {
  std::mt19937_64 rng(2);
  const Index n = 2;
  const NodeSet x = rand_nodes(6, rng);
  std::vector<Mat> s;
  for (int i = 0; i < 6; ++i) s.push_back(rand_mat(n, n, rng));
  const MatrixPolynomial P(BasisDescriptor::lagrange(x), s);
  const cplx l(0.2, -0.7);
  auto g = [&](int j) { return l - x.x(j); };
  auto Pw = [&](int i) -> Mat { return s[static_cast<size_t>(i - 1)] * x.w(i); };
  const Mat I = Mat::Identity(n, n), Z;
  const std::vector<Mat> k1row1 = {g(6) * I, -g(4) * I, Z, Z, Z};
  const std::vector<Mat> k1row2 = {Z, g(5) * I, -g(3) * I, Z, Z};

  const Mat colleague = blocks({{Pw(6) * g(5) + Pw(5) * g(6), Pw(4) * g(5), Pw(3) * g(4), g(4) * I, Z},
                                {Z, Z, Pw(2) * g(3), -g(2) * I, g(3) * I},
                                {Z, Z, Pw(1) * g(2), Z, -g(1) * I},
                                k1row1,
                                k1row2},
                               n);
  CHECK((colleague_lagrange(P, 2).pencil.at(l) - colleague).norm() < 1e-12);

  // The first variant is displayed with gamma_2 in the second body row; the
  // row operation leaves that row untouched, so gamma_3 is the consistent entry.
  Mat A1 = Mat::Zero(3 * n, 2 * n);
  A1.block(0, n, n, n) = -Pw(4);
  const Mat l1 = blocks({{Pw(6) * g(5) + Pw(5) * g(6), Z, Pw(4) * g(3) + Pw(3) * g(4), g(4) * I, Z},
                         {Z, Z, Pw(2) * g(3), -g(2) * I, g(3) * I},
                         {Z, Z, Pw(1) * g(2), Z, -g(1) * I},
                         k1row1,
                         k1row2},
                        n);
  CHECK((family_lagrange(P, 2, A1, Mat::Zero(2 * n, 3 * n)).pencil.at(l) - l1).norm() < 1e-12);

  Mat A2 = A1;
  A2.block(0, 0, n, n) = -Pw(5);
  const Mat l2 = blocks({{Pw(6) * g(5), Pw(5) * g(4), Pw(4) * g(3) + Pw(3) * g(4), g(4) * I, Z},
                         {Z, Z, Pw(2) * g(3), -g(2) * I, g(3) * I},
                         {Z, Z, Pw(1) * g(2), Z, -g(1) * I},
                         k1row1,
                         k1row2},
                        n);
  CHECK((family_lagrange(P, 2, A2, Mat::Zero(2 * n, 3 * n)).pencil.at(l) - l2).norm() < 1e-12);

  Mat B3 = Mat::Zero(2 * n, 3 * n);
  B3.block(0, n, n, n) = -Pw(5);
  const Mat l3 = blocks({{Pw(6) * g(5), Z, Pw(4) * g(3) + Pw(3) * g(4), g(4) * I, Z},
                         {Z, Pw(5) * g(2), Pw(2) * g(3), -g(2) * I, g(3) * I},
                         {Z, Z, Pw(1) * g(2), Z, -g(1) * I},
                         k1row1,
                         k1row2},
                        n);
  CHECK((family_lagrange(P, 2, A2, B3).pencil.at(l) - l3).norm() < 1e-12);
}

TEST_CASE("k=1 scalar interpolant 1 + 2 lambda") {
  const auto P = scalar_lagrange({0.0, 1.0}, {1.0, 3.0});
  const auto lin = colleague_lagrange(P, 0);
  const cplx l(0.4, 0.1);
  CHECK(std::abs(lin.pencil.at(l)(0, 0) - (2.0 * l + 1.0)) < 1e-15);
  const auto ev = solve_gep(lin.pencil.L0, lin.pencil.L1).values;
  REQUIRE(ev.size() == 1);
  CHECK(std::abs(ev[0].value + 0.5) < 1e-15);
  Vec z(1);
  z << 1.0;
  const auto r = recover_eigvec_lagrange(lin, ev[0], z, Side::Right);
  CHECK(std::abs(r.x(0) - 1.0) < 1e-15);
  CHECK(std::abs(evaluate(P, -0.5)(0, 0)) < 1e-15);
}

TEST_CASE("colleague identity and column-form body") {
  std::mt19937_64 rng(3);
  for (int k = 1; k <= 6; ++k) {
    const auto P = rand_poly(BasisKind::Lagrange, k, 2, 3, rng);
    const PolyMatrix ref = monomial_coefficients(P);
    for (int mu = 0; mu < k; ++mu) {
      const auto lin = colleague_lagrange(P, mu);
      CHECK(relative_coefficient_error(body_product(lin.M, lin.kd.D1, lin.kd.D2), ref) < 1e-10);
    }
  }
}

TEST_CASE("family with A = B = 0 equals the colleague bit-exactly") {
  std::mt19937_64 rng(4);
  const auto P = rand_poly(BasisKind::Lagrange, 4, 2, 2, rng);
  const auto col = colleague_lagrange(P, 2);
  const auto fam = family_lagrange(P, 2, Mat::Zero(6, 2), Mat::Zero(4, 4));
  CHECK((fam.pencil.L0.array() == col.pencil.L0.array()).all());
  CHECK((fam.pencil.L1.array() == col.pencil.L1.array()).all());
  const Mat A = rand_mat(6, 2, rng), B = rand_mat(4, 4, rng);
  const auto m = match_spectra(solve_gep(col.pencil.L0, col.pencil.L1).values,
                               solve_gep(family_lagrange(P, 2, A, B).pencil.L0,
                                         family_lagrange(P, 2, A, B).pencil.L1).values,
                               1e-8);
  CHECK(m.max_distance < 1e-8);
}

TEST_CASE("mu-coordinates") {
  CHECK(mu_coordinates(NodeSet({0.0, 1.0, 2.0}), 2, 0).a.size() == 1);
  CHECK(std::abs(mu_coordinates(NodeSet({0.0, 1.0, 2.0}), 2, 0).a_at(1) - 1.0) < 1e-15);
  const auto c = mu_coordinates(NodeSet({0.0, 1.0, 2.0}), 2, 1);
  const auto a = c.a_display();
  CHECK(std::abs(a[0] - 0.5) < 1e-15);
  CHECK(std::abs(a[1] + 0.5) < 1e-15);

  std::mt19937_64 rng(5);
  for (int k = 1; k <= 6; ++k) {
    const NodeSet x = rand_nodes(k + 1, rng);
    for (int mu = 0; mu < k; ++mu) {
      const auto co = mu_coordinates(x, k, mu);
      for (int t = 0; t < mu + 3; ++t) {
        const cplx l = rand_point(rng, 1.5);
        cplx sa = 0.0, sb = 0.0;
        for (int i = 1; i <= mu + 1; ++i) sa += co.a_at(i) * ratio(x, 1, mu + 2, i, l);
        for (int i = mu + 1; i <= k; ++i) sb += co.b_at(i) * ratio(x, mu + 1, k + 1, i, l);
        CHECK(std::abs(sa - 1.0) < 1e-12);
        CHECK(std::abs(sb - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("T/S splits") {
  const auto P = scalar_lagrange({0.0, 1.0}, {1.0, 3.0});
  const cplx l(0.3, -0.2);
  CHECK(std::abs(lagrange_splits(P, 1, l).first(0, 0) - (1.0 - l)) < 1e-15);
  std::mt19937_64 rng(6);
  const auto Q = rand_poly(BasisKind::Lagrange, 4, 2, 2, rng);
  const Mat full = naive_eval(Q, l);
  CHECK(rel(lagrange_splits(Q, 5, l).first, full) < 1e-13);
  CHECK(rel(lagrange_splits(Q, 1, l).second, full) < 1e-13);
  for (int j = 1; j <= 4; ++j) {
    CHECK(rel(lagrange_splits(Q, j + 1, l).second + lagrange_splits(Q, j, l).first, full) < 1e-13);
    CHECK(rel(lagrange_T_poly(Q, j)(l), lagrange_splits(Q, j, l).first) < 1e-12);
    CHECK(rel(lagrange_S_poly(Q, j)(l), lagrange_splits(Q, j, l).second) < 1e-12);
  }
  CHECK_THROWS_AS(lagrange_splits(Q, 0, l), Error);
  CHECK_THROWS_AS(lagrange_splits(Q, 6, l), Error);
}

TEST_CASE("one-sided factorizations") {
  std::mt19937_64 rng(7);
  const auto P0 = rand_poly(BasisKind::Lagrange, 3, 2, 2, rng);
  const OneSided f0 = one_sided_lagrange(P0, 0);
  const auto lin0 = colleague_lagrange(P0, 0);
  CHECK(f0.row_weights.size() == 1);
  CHECK(std::abs(f0.row_weights(0) - 1.0) < 1e-15);
  const cplx l(0.1, 0.2);
  CHECK((f0.H(l) - lin0.kd.D1(l).transpose()).norm() < 1e-14);

  const auto S = scalar_lagrange({0.0, 1.0, 2.0}, {1.0, -2.0, 0.5});
  const auto [e1, e2] = one_sided_defect(colleague_lagrange(S, 1), 5, rng);
  CHECK(e1 < 1e-12);
  CHECK(e2 < 1e-12);

  for (int k = 1; k <= 6; ++k) {
    const auto Q = rand_poly(BasisKind::Lagrange, k, 2, 3, rng);
    for (int mu = 0; mu < k; ++mu) {
      const auto [er, el] = one_sided_defect(colleague_lagrange(Q, mu), 5, rng);
      CHECK(er < 1e-11);
      CHECK(el < 1e-11);
      const auto c = mu_coordinates(Q.nodes(), k, mu);
      double rem = 0.0, r = 0.0;
      for (int j = 1; j <= mu; ++j) {
        lagrange_script_P(Q, c, j, &r);
        rem = std::max(rem, r);
      }
      for (int j = mu + 1; j <= k - 1; ++j) {
        lagrange_script_Q(Q, c, j, &r);
        rem = std::max(rem, r);
      }
      CHECK(rem < 1e-12);
    }
  }
}

TEST_CASE("eigenvector recovery away from nodes and at infinity") {
  std::mt19937_64 rng(8);
  const auto P = rand_poly(BasisKind::Lagrange, 4, 3, 3, rng);
  for (int mu = 0; mu < 4; ++mu) {
    const auto sol = solve_linearization(colleague_lagrange(P, mu), true);
    CHECK(sol.pairs.size() == 12);
    for (const auto& pr : sol.pairs) {
      CHECK(pr.recovered_from == 1);
      CHECK(pr.residual_right < 1e-8);
      CHECK(*pr.residual_left < 1e-8);
    }
  }

  // sum_i w_i P_i singular gives an infinite eigenvalue.
  const NodeSet x = rand_nodes(3, rng);
  std::vector<Mat> s{rand_mat(2, 2, rng), rand_mat(2, 2, rng)};
  const Mat lead = rand_mat(2, 1, rng) * rand_mat(1, 2, rng);
  s.push_back((lead - x.w(1) * s[0] - x.w(2) * s[1]) / x.w(3));
  const MatrixPolynomial Q(BasisDescriptor::lagrange(x), s);
  const auto sol = solve_linearization(colleague_lagrange(Q, 1), true);
  int inf = 0;
  for (const auto& pr : sol.pairs) {
    if (!pr.lambda.infinite) continue;
    ++inf;
    CHECK((lead * pr.right).norm() < 1e-10 * lead.norm());
  }
  CHECK(inf == 1);
}

TEST_CASE("recovery at nodes follows the valid-block rule") {
  std::mt19937_64 rng(9);
  const int k = 4;
  for (int j = 1; j <= k + 1; ++j) {
    const NodeSet x = rand_nodes(k + 1, rng);
    std::vector<Mat> s;
    for (int i = 1; i <= k + 1; ++i) s.push_back(rand_mat(2, 2, rng));
    s[static_cast<size_t>(j - 1)] = rand_mat(2, 1, rng) * rand_mat(1, 2, rng);
    const MatrixPolynomial P(BasisDescriptor::lagrange(x), s);
    for (int mu = 0; mu < k; ++mu) {
      const auto lin = colleague_lagrange(P, mu);
      const auto g = solve_gep(lin.pencil.L0, lin.pencil.L1, true);
      for (size_t e = 0; e < g.values.size(); ++e) {
        if (g.values[e].infinite || std::abs(g.values[e].value - x.x(j)) > 1e-8) continue;
        for (Side side : {Side::Right, Side::Left}) {
          const Vec z = side == Side::Right ? Vec(g.right.col(static_cast<Index>(e)))
                                            : Vec(g.left.col(static_cast<Index>(e)));
          const auto r = recover_eigvec_lagrange(lin, g.values[e], z, side);
          CHECK(!r.valid_blocks.empty());
          CHECK(r.block == r.valid_blocks.front());
          for (int b : r.valid_blocks) {
            const Vec xb = vector_block(lin.pencil, z, side, b);
            REQUIRE(xb.norm() > 1e-8);
            CHECK(backward_error(P, g.values[e], xb, side) < 1e-9);
          }
        }
      }
    }
  }
  // At x_1 with mu >= 1 every right block is valid.
  const NodeSet x({0.0, 0.5, -0.5, cplx(0.0, 0.3)});
  const auto v = lagrange_valid_blocks(x, 3, 1, Eigenvalue::finite(0.0), Side::Right, 1e-8);
  CHECK(v == std::vector<int>{1, 2});
}

TEST_CASE("minimal basis recovery") {
  // Samples of [1, lambda] at nodes {0, 1}.
  Mat s1(1, 2), s2(1, 2);
  s1 << 1.0, 0.0;
  s2 << 1.0, 1.0;
  const MatrixPolynomial P(BasisDescriptor::lagrange(NodeSet({0.0, 1.0})), {s1, s2});
  const auto lin = colleague_lagrange(P, 0);
  const auto rb = recover_minimal_lagrange(lin, nullspace_minimal_basis(lin.pencil, Side::Right), Side::Right);
  REQUIRE(rb.basis.degrees == std::vector<int>{1});
  const Vec y = rb.basis.vectors[0](cplx(0.7, 0.2)).col(0);
  CHECK(std::abs(y(0) + cplx(0.7, 0.2) * y(1)) < 1e-12 * y.norm());

  const MatrixPolynomial Z(BasisDescriptor::lagrange(NodeSet({0.0, 1.0, 2.0})),
                           {Mat::Zero(1, 1), Mat::Zero(1, 1), Mat::Zero(1, 1)});
  for (int mu = 0; mu < 2; ++mu) {
    const auto lz = colleague_lagrange(Z, mu);
    const auto zb = nullspace_minimal_basis(lz.pencil, Side::Right);
    REQUIRE(zb.degrees == std::vector<int>{2 - mu - 1});
    CHECK(recover_minimal_lagrange(lz, zb, Side::Right).basis.degrees == std::vector<int>{0});
  }

  std::mt19937_64 rng(10);
  const auto pl = planted_singular(3, 1, 1, 0, rng);
  const auto Pl = lagrange_sample(as_function(pl.coeffs), chebyshev_nodes(3, 1));
  const auto ll = colleague_lagrange(Pl, 1);
  const auto right = nullspace_minimal_basis(ll.pencil, Side::Right);
  CHECK(right.degrees == std::vector<int>{1 + 1});
  CHECK(recover_minimal_lagrange(ll, right, Side::Right).basis.degrees == std::vector<int>{1});
  const auto left = nullspace_minimal_basis(ll.pencil, Side::Left);
  CHECK(left.degrees == std::vector<int>{0 + 1});
  CHECK(recover_minimal_lagrange(ll, left, Side::Left).basis.degrees == std::vector<int>{0});
}

TEST_CASE("reference pencil") {
  const NodeSet x({0.0, 1.0, 2.0});
  CHECK(std::abs(x.w(1) / x.w(2) + 0.5) < 1e-15);
  std::mt19937_64 rng(11);
  for (int k = 2; k <= 4; ++k) {
    const auto P = rand_poly(BasisKind::Lagrange, k, k == 2 ? 1 : 2, k == 2 ? 1 : 2, rng);
    const BlockPencil R = reference_pencil_lagrange(P);
    CHECK(R.L0.rows() == k * P.rows());
    const auto col = colleague_lagrange(P, 0);
    const auto m = match_spectra(solve_gep(R.L0, R.L1).values,
                                 solve_gep(col.pencil.L0, col.pencil.L1).values, 1e-8);
    CHECK(m.same_size);
    CHECK(m.max_distance < 1e-8);
  }
}
