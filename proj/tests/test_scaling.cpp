#include "treewalks/moments.hpp"
#include "treewalks/pipeline.hpp"
#include "treewalks/scaling.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace treewalks;
using namespace treewalks::moments;
using treewalks::gf::CatalanFraction;
using treewalks::gf::Pipeline;

namespace {

const Pipeline& pipeline5() {
  static const Pipeline p(5);
  return p;
}

const DerivativeTable& derivs5() {
  static const DerivativeTable t(pipeline5().walk_gfs());
  return t;
}

const ScalingSearchResult& search5() {
  static const ScalingSearchResult r = scaling_search(pipeline5().walk_gfs(), 5);
  return r;
}

Poly poly_from(std::initializer_list<std::pair<int, long long>> terms) {
  Poly p;
  for (const auto& [k, c] : terms) p.set_coeff(k, Rational(c));
  return p;
}

}  // namespace

TEST_CASE("scaling search reproduces the degree-5 scaling polynomial") {
  const auto& r = search5();
  REQUIRE(r.all_ok);
  CHECK(r.scaling.a == std::vector<Rational>{1, 1, 1, 4, 33, 386});
  CHECK(r.scaling.b == std::vector<Rational>{1, -1, 0, -3, -26, -324});
  for (const auto& st : r.orders) CHECK(st.success);
}

TEST_CASE("the reduced polynomials of the refined scaling") {
  const auto& r = search5();
  REQUIRE(r.all_ok);
  REQUIRE(r.Q.size() == 6);
  CHECK(r.Q[0] == Poly::constant(1));
  CHECK(r.Q[1] == poly_from({{1, -1}}));
  CHECK(r.Q[2] == poly_from({{3, -2}}));
  CHECK(r.Q[3] == -poly_from({{5, 11}, {4, 1}, {3, -2}, {2, 2}, {1, 3}}));
  CHECK(r.Q[4] ==
        -poly_from({{7, 90}, {6, 27}, {5, -19}, {4, 17}, {3, 23}, {2, 20}, {1, 26}}));
  CHECK(r.Q[5] == -poly_from({{9, 931}, {8, 529}, {7, -163}, {6, 166}, {5, 301},
                              {4, 239}, {3, 249}, {2, 266}, {1, 324}}));
  // zero-mass property
  for (int i = 1; i <= 5; ++i) CHECK(r.Q[i].coeff(0) == 0);
}

TEST_CASE("compute_Vi against the known forms") {
  const std::vector<Rational> b{-1, 0, -3, -26, -324};
  const ViPolyForm v1 = compute_Vi(derivs5(), 1, b);
  REQUIRE(v1.polynomial);
  CHECK(v1.Q == poly_from({{1, -1}}));
  const ViPolyForm v2 = compute_Vi(derivs5(), 2, b);
  REQUIRE(v2.polynomial);
  CHECK(v2.Q == poly_from({{3, -2}}));
  const ViPolyForm v5 = compute_Vi(derivs5(), 5, b);
  REQUIRE(v5.polynomial);
  CHECK(v5.Q.coeff(9) == -931);
  CHECK(v5.Q.coeff(8) == -529);
}

TEST_CASE("certified series re-expansion of the reduced forms") {
  // V_i from the exact algebra re-expanded as a z-series must match the
  // series assembled independently from derivatives of the walk series.
  const int order = 4 * 5 + 2 * 5 + 8;  // certified comparison depth
  const std::vector<Rational> b{-1, 0, -3, -26, -324};
  const auto& p = pipeline5();
  for (int i = 0; i <= 5; ++i) {
    const CatalanFraction vi = vi_fraction(derivs5(), i, b);
    const Poly direct = vi.z_series(order);
    Poly series;
    for (int xi = 0; xi <= i; ++xi) {
      const int n = i - xi;
      if (n == 0) {
        series += p.walk_series(xi, order);
        continue;
      }
      for (int k = 1; k <= n; ++k) {
        const Rational bell = ordinary_bell(n, k, b);
        if (bell == 0) continue;
        Poly d = p.walk_series(xi, order + k);
        for (int j = 0; j < k; ++j) d = d.derivative();
        const Poly zk_d = (Poly::monomial(k) * d).truncated(order);
        series += zk_d * (bell / Rational(factorial(k)));
      }
    }
    CHECK(direct == series.truncated(order));
  }
}

TEST_CASE("perturbed second-order walk function breaks the search") {
  // W~_2 = W_2 + z^3 C^7 / (1 - z C^2)^3 = W_2 + x^3 (1+x) / (1-x)^3
  std::vector<CatalanFraction> walks = pipeline5().walk_gfs();
  walks[2] += CatalanFraction(poly_from({{3, 1}, {4, 1}}), 3, 0);
  const ScalingSearchResult r = scaling_search(walks, 5);
  CHECK_FALSE(r.all_ok);
  REQUIRE(r.orders.size() == 2);
  CHECK(r.orders[0].success);
  CHECK(r.orders[0].b == -1);
  CHECK_FALSE(r.orders[1].success);
  CHECK(r.orders[1].pole_order >= 2);
}

TEST_CASE("geometric scaling check") {
  for (int i = 0; i <= 5; ++i) {
    const GeometricCheckResult r = geometric_scaling_check(derivs5(), i);
    CHECK(r.catalan_factor_clean);
    CHECK(r.upper_bound_holds);
    if (i <= 2) CHECK(r.min_denominator_order == 0);
  }
}

TEST_CASE("derivative leading structure") {
  for (int xi = 0; xi <= 5; ++xi)
    for (int k = 0; k <= 5; ++k) {
      if (xi == 0 && k == 0) continue;
      INFO("xi=" << xi << " k=" << k);
      CHECK(derivative_leading_check(derivs5(), xi, k));
    }
}

TEST_CASE("first derivative of the excess-1 series") {
  const CatalanFraction w1p = derivs5().derivative(1, 1);
  CHECK(w1p.pole_order_at_one() == 3);
  // 2 x (1+x)^3 (1 + x - x^2) / (1-x)^3
  const Poly one_plus({Rational(1), Rational(1)});
  const Poly expect = poly_from({{1, 2}}) * one_plus * one_plus * one_plus *
                      poly_from({{0, 1}, {1, 1}, {2, -1}});
  CHECK(w1p == CatalanFraction(expect, 3, 0));
}

TEST_CASE("moment table basics") {
  const MomentTable table(pipeline5(), 7);
  CHECK(table.moment_exact(0, Rational(3, 2)) == 1);
  CHECK(table.moment_exact(1, Rational(7, 3)) == 1);
  // l = 2: 2 + 1/c
  CHECK(table.moment_in_u(2) == poly_from({{0, 2}, {1, 1}}));
  // l = 3: 5 + 6/c + 1/c^2
  CHECK(table.moment_in_u(3) == poly_from({{0, 5}, {1, 6}, {2, 1}}));
}

TEST_CASE("moments agree with the census formula at random c") {
  const MomentTable table(pipeline5(), 6);
  const auto census = treewalks::oracle::enumerate_census(6);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(2, 40);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 20; ++trial) {
    Rational c(num(rng), den(rng));
    if (c <= 1) c += 1;
    for (int l = 0; l <= 6; ++l)
      CHECK(table.moment_exact(l, c) == moment_from_census(census, l, c));
  }
}

TEST_CASE("dilation") {
  const MomentTable table(pipeline5(), 4);
  const MomentVector v = moment_vector(table, 4);
  // identity
  const MomentVector same = dilate(v, Rational(1));
  for (int l = 0; l <= 4; ++l) CHECK(same.m[l] == v.m[l]);
  // alpha = 2 multiplies m_2 by 4
  MomentVector two = dilate(v, Rational(2));
  CHECK(two.m[1] == v.m[1] * Rational(4));
  // round trip
  const MomentVector back = dilate(dilate(v, Rational(5, 3)), Rational(3, 5));
  for (int l = 0; l <= 4; ++l) CHECK(back.m[l] == v.m[l]);
}

TEST_CASE("dilating by the inverse square root of the scaling matches the reduced forms") {
  // m_{2l}(mu^p) = p(1/c)^{-l} m_{2l}(mu^c); its u-expansion coefficient
  // at u^i equals [z^l] of C Q_i for every i within the modulus
  const auto& r = search5();
  const int mod = 6;
  const MomentTable table(pipeline5(), 7);
  const MomentVector v = moment_vector(table, 7);
  const Poly p_u = r.scaling.p_poly();
  const Poly inv_sqrt = Poly::reciprocal_trunc(Poly::sqrt_trunc(p_u, mod - 1), mod - 1);
  const MomentVector scaled = dilate_series(v, inv_sqrt, mod - 1);
  for (int l = 0; l <= 7; ++l) {
    for (int i = 0; i < mod; ++i) {
      const CatalanFraction ci = CatalanFraction::from_poly(r.Q[i]).mul_catalan();
      CHECK(scaled.m[l].coeff(i) == ci.z_series(l).coeff(l));
    }
  }
}
