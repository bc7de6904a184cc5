#include "treewalks/catalan_form.hpp"
#include "treewalks/census.hpp"
#include "treewalks/pipeline.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <tuple>

using namespace treewalks;
using namespace treewalks::gf;
using treewalks::oracle::WalkCensus;

namespace {

const Pipeline& pipeline5() {
  static const Pipeline p(5);
  return p;
}

const WalkCensus& census7() {
  static const WalkCensus c = treewalks::oracle::enumerate_census(7);
  return c;
}

Poly poly_from(std::initializer_list<std::pair<int, long long>> terms) {
  Poly p;
  for (const auto& [k, c] : terms) p.set_coeff(k, Rational(c));
  return p;
}

// u^s z^l -> coefficient
using UZ = std::map<std::pair<int, int>, long long>;

UZ uz_of(const ExactSeries& s) {
  UZ m;
  for (const auto& [e, c] : s.terms()) {
    REQUIRE(is_integer(c));
    m[{e[0], e[1]}] = numerator(c).convert_to<long long>();
  }
  return m;
}

}  // namespace

TEST_CASE("superreduced fixpoint reproduces the per-excess polynomials") {
  const auto& p = pipeline5();
  CHECK(extract_S_xi(p.superreduced(), 0) == poly_from({{0, 1}}));
  CHECK(extract_S_xi(p.superreduced(), 1) == poly_from({{2, 1}}));
  CHECK(extract_S_xi(p.superreduced(), 2) == poly_from({{4, 6}, {3, 1}}));
  CHECK(extract_S_xi(p.superreduced(), 3) == poly_from({{6, 57}, {5, 20}, {4, 1}}));
  CHECK(extract_S_xi(p.superreduced(), 4) ==
        poly_from({{8, 678}, {7, 378}, {6, 50}, {5, 1}}));
  CHECK(extract_S_xi(p.superreduced(), 5) ==
        poly_from({{10, 9270}, {9, 7272}, {8, 1684}, {7, 112}, {6, 1}}));
  CHECK_THROWS_AS(extract_S_xi(p.superreduced(), 6), std::invalid_argument);
}

TEST_CASE("superreduced counts match the brute-force census") {
  const auto& p = pipeline5();
  const auto& census = census7();
  CHECK(superreduced_count(p.superreduced(), 3, 8) == 36);
  // every (m, 2l) cell within both ranges, including zero cells
  for (int m = 1; m <= p.superreduced().xi_max + 1; ++m) {
    for (int two_l = 0; two_l <= 10; two_l += 2) {
      const Int expect = census.superreduced(m, two_l);
      CHECK(superreduced_count(p.superreduced(), m, two_l) == expect);
    }
  }
}

TEST_CASE("kernel polynomials reproduce the known table") {
  const auto& p = pipeline5();
  CHECK(uz_of(kernel_gf_u1(p.kernel(0))) == UZ{{{0, 0}, 1}});
  CHECK(uz_of(kernel_gf_u1(p.kernel(1))) == UZ{{{0, 2}, 1}});
  CHECK(uz_of(kernel_gf_u1(p.kernel(2))) ==
        UZ{{{2, 6}, 1}, {{1, 5}, 5}, {{0, 4}, 6}, {{0, 3}, 1}});
  CHECK(uz_of(kernel_gf_u1(p.kernel(3))) ==
        UZ{{{4, 10}, 2},
           {{3, 9}, 16},
           {{2, 8}, 52},
           {{2, 7}, 2},
           {{1, 7}, 84},
           {{1, 6}, 12},
           {{0, 6}, 57},
           {{0, 5}, 20},
           {{0, 4}, 1}});
  CHECK(uz_of(kernel_gf_u1(p.kernel(4))) ==
        UZ{{{6, 14}, 5},   {{5, 13}, 55},  {{4, 12}, 267}, {{4, 11}, 6},
           {{3, 11}, 745}, {{3, 10}, 54},  {{2, 10}, 1290}, {{2, 9}, 205},
           {{2, 8}, 3},    {{1, 9}, 1350}, {{1, 8}, 416},  {{1, 7}, 21},
           {{0, 8}, 678},  {{0, 7}, 378},  {{0, 6}, 50},   {{0, 5}, 1}});
  CHECK(uz_of(kernel_gf_u1(p.kernel(5))) ==
        UZ{{{8, 18}, 14},    {{7, 17}, 196},   {{6, 16}, 1254}, {{6, 15}, 20},
           {{5, 15}, 4836},  {{5, 14}, 240},   {{4, 14}, 12453}, {{4, 13}, 1296},
           {{4, 12}, 12},    {{3, 13}, 22296}, {{3, 12}, 4136}, {{3, 11}, 120},
           {{2, 12}, 27708}, {{2, 11}, 8502},  {{2, 10}, 532},  {{2, 9}, 4},
           {{1, 11}, 22440}, {{1, 10}, 11100}, {{1, 9}, 1368},  {{1, 8}, 32},
           {{0, 10}, 9270},  {{0, 9}, 7272},   {{0, 8}, 1684},  {{0, 7}, 112},
           {{0, 6}, 1}});
}

TEST_CASE("kernel polynomial degree bounds and integrality") {
  const auto& p = pipeline5();
  for (int xi = 1; xi <= 5; ++xi) {
    const auto& k = p.kernel(xi).k_uvz;
    CHECK(k.max_exponent(0) <= 2 * xi - 2);
    CHECK(k.max_exponent(1) <= 3 * xi - 1);
    CHECK(k.max_exponent(2) <= 4 * xi - 2);
    for (const auto& [e, c] : k.terms()) {
      const Rational n = c * Rational(factorial(e[1]));
      CHECK(is_integer(n));
      CHECK(n > 0);
    }
  }
}

TEST_CASE("kernel counts match the brute-force census") {
  const auto& p = pipeline5();
  const auto& census = census7();
  for (int xi = 1; xi <= 3; ++xi) {
    for (int s = 0; s <= 2 * xi - 2; ++s) {
      for (int two_l = 2; two_l <= 14; two_l += 2) {
        const Int expect = census.kernels(xi, s, two_l);
        CHECK(kernel_count(p.kernel(xi), s, two_l) == expect);
      }
    }
  }
  // excess 0: only the trivial kernel exists
  CHECK(census.kernels(0, 0, 0) == 1);
  CHECK(kernel_count(p.kernel(0), 0, 0) == 1);
  // the paper-level spot value: optimal kernels of excess 2 at length 12
  CHECK(kernel_count(p.kernel(2), 2, 12) == 120);
}

TEST_CASE("walk generating functions in closed form") {
  const auto& p = pipeline5();
  // W_1 = z^2 C^5 / (1 - z C^2) = x^2 (1+x) / (1-x)
  CHECK(p.walk_gf(1) == CatalanFraction(poly_from({{2, 1}, {3, 1}}), 1, 0));
  // W_2 = C (x^3 + 4x^4 - 6x^5 + 2x^6) / (1-x)^3
  CHECK(p.walk_gf(2) ==
        CatalanFraction(Poly({Rational(1), Rational(1)}) *
                            poly_from({{3, 1}, {4, 4}, {5, -6}, {6, 2}}),
                        3, 0));
  // W_3 = x^4 C (1 + 16x - 5x^2 - 62x^3 + 95x^4 - 54x^5 + 11x^6) / (1-x)^5
  CHECK(p.walk_gf(3) ==
        CatalanFraction(Poly({Rational(1), Rational(1)}) * Poly::monomial(4) *
                            poly_from({{0, 1}, {1, 16}, {2, -5}, {3, -62},
                                       {4, 95}, {5, -54}, {6, 11}}),
                        5, 0));
}

TEST_CASE("walk series examples") {
  const auto& p = pipeline5();
  const Poly w1 = p.walk_series(1, 4);
  CHECK(w1.coeff(2) == 1);
  CHECK(w1.coeff(3) == 6);
  CHECK(w1.coeff(4) == 28);
  const Poly w2 = p.walk_series(2, 4);
  CHECK(w2.coeff(0) == 0);
  CHECK(w2.coeff(2) == 0);
  CHECK(w2.coeff(3) == 1);
  const Poly w0 = p.walk_series(0, 5);
  CHECK(w0 == poly_from({{0, 1}, {1, 1}, {2, 2}, {3, 5}, {4, 14}, {5, 42}}));
}

TEST_CASE("oracle equality for the walk generating functions") {
  const auto& p = pipeline5();
  const auto& census = census7();
  for (int xi = 0; xi <= 3; ++xi) {
    for (int two_l = 0; two_l <= 14; two_l += 2) {
      const int l = two_l / 2;
      const int m = l - xi + 1;
      if (m < 1) continue;
      CHECK(p.labeled_walk_count(m, two_l) == Int(census.walks(m, two_l)));
    }
  }
}

TEST_CASE("catalan normal form") {
  const auto& p = pipeline5();
  const CatalanForm& f2 = p.form(2);
  CHECK(f2.K[2] == Poly::monomial(6));               // Cat(1) x^6
  CHECK(f2.K[1] == Poly::monomial(5, Rational(5)));  // (3*2-1) Cat(1) x^5
  const CatalanForm& f1 = p.form(1);
  CHECK(f1.K[0] == Poly::monomial(2));               // x^2
  for (int xi = 0; xi <= 5; ++xi) {
    std::string why;
    INFO(why);
    CHECK(catalan_form_structure_ok(p.form(xi), &why));
  }
}

TEST_CASE("closed form and reconstruction route agree") {
  const auto& p = pipeline5();
  for (int xi = 0; xi <= 5; ++xi) {
    const Poly direct = treewalk_gf(p.kernel(xi), 12);
    const Poly via_form = catalan_form_eval(p.form(xi), 12);
    CHECK(direct == via_form);
  }
}
