#pragma once

#include "treewalks/alg_elem.hpp"
#include "treewalks/catalan_fraction.hpp"
#include "treewalks/combinatorics.hpp"
#include "treewalks/even_poly.hpp"
#include "treewalks/scaling.hpp"
#include "treewalks/sturm.hpp"

#include <stdexcept>
#include <vector>

namespace treewalks::density {

using gf::CatalanFraction;
using moments::ViPolyForm;

// Polynomial P~ in the Catalan series: the moment generating function of
// the target measure is P~(C(z)).
struct CatalanPoly {
  Poly p;
};

// x = C - 1 turns a polynomial in x into one in C.
inline CatalanPoly to_catalan_poly(const ViPolyForm& v) {
  if (!v.polynomial)
    throw std::invalid_argument("to_catalan_poly: form did not reduce to a polynomial");
  // P~(y) = y * Q(y - 1)
  const Poly shifted = Poly::compose_trunc(v.Q, Poly({Rational(-1), Rational(1)}),
                                           v.Q.degree() < 0 ? 0 : v.Q.degree());
  return CatalanPoly{Poly::monomial(1) * shifted};
}

// Density P(z) sqrt(4 - z^2) / (2 pi) on (-2, 2), zero outside.
struct SemicircleDensityPoly {
  EvenPoly P;
};

// Density P(z) / (4 - z^2)^pole_order * sqrt(4 - z^2) / (2 pi) on (-2, 2);
// pole_order 0 is the plain polynomial case.
struct SemicircleDensityRational {
  EvenPoly P;
  int pole_order = 0;
};

namespace detail {

// Boundary value of the generating function N(x)/((1-x)^a (1+x)^b) read as
// a function of C and evaluated at C -> E = z^2/2 - (z/2) i y:
//   numerator N(E-1) (2 - E~)^a E~^b over (4 - z^2)^a z^{2b},
// using (2-E)(2-E~) = 4 - z^2 and E E~ = z^2 (E~ the conjugate).
inline std::pair<BoundaryElem, int> boundary_value(const CatalanFraction& v, int* z_power) {
  const BoundaryElem E = BoundaryElem::catalan_boundary();
  const BoundaryElem Ebar = E.conjugate();
  const BoundaryElem one(AlgElem::from_poly(Poly::constant(1)), AlgElem());
  // Horner for N(E - 1)
  const Poly& n = v.numerator();
  BoundaryElem acc;
  const BoundaryElem x_arg = E - one;
  for (int k = n.degree(); k >= 0; --k) {
    acc = acc * x_arg;
    acc = acc + one * n.coeff(k);
  }
  const BoundaryElem two_minus_Ebar = one * Rational(2) - Ebar;
  for (int i = 0; i < v.pole_order_at_one(); ++i) acc = acc * two_minus_Ebar;
  for (int i = 0; i < v.pole_order_at_minus_one(); ++i) acc = acc * Ebar;
  *z_power = 2 * v.pole_order_at_minus_one();
  return {acc, v.pole_order_at_one()};
}

}  // namespace detail

// Stieltjes-Perron inversion of the measure whose even-moment generating
// function is the given element of the Catalan algebra. The boundary value
// of the transform at z + i0 is computed exactly in Q[z][y]/(y^2-(4-z^2))
// adjoined i; the density is -(1/pi) times its imaginary part.
inline SemicircleDensityRational stieltjes_invert_fraction(const CatalanFraction& v) {
  int z_power = 0;
  auto [bv, pole] = detail::boundary_value(v, &z_power);
  // transform boundary value = (1/z) * bv / ((4-z^2)^pole z^{z_power});
  // its imaginary part must be a pure multiple of y
  if (!bv.im.a.is_zero())
    throw std::logic_error("stieltjes inversion: non-algebraic imaginary part survived");
  Poly B = bv.im.b;
  // density = -(1/pi) * B y / (z^{z_power+1} (4-z^2)^pole)
  //         = [-2 B / z^{z_power+1}] / (4-z^2)^pole * y / (2 pi)
  Poly denom_z = Poly::monomial(z_power + 1);
  if (!Poly::divides(denom_z, B))
    throw std::logic_error("stieltjes inversion: pole at zero survived");
  Poly P = Poly::divexact(B, denom_z) * Rational(-2);
  int pole_order = pole;
  static const Poly weight({Rational(4), Rational(0), Rational(-1)});  // 4 - z^2
  while (pole_order > 0 && Poly::divides(weight, P)) {
    P = Poly::divexact(P, weight);
    --pole_order;
  }
  SemicircleDensityRational out;
  out.P = EvenPoly::from_poly_in_z(P);
  out.pole_order = pole_order;
  return out;
}

inline SemicircleDensityPoly stieltjes_invert(const CatalanPoly& p) {
  // rewrite P~(C) as a polynomial in x = C - 1
  const Poly in_x = Poly::compose_trunc(p.p, Poly({Rational(1), Rational(1)}),
                                        p.p.degree() < 0 ? 0 : p.p.degree());
  const SemicircleDensityRational r =
      stieltjes_invert_fraction(CatalanFraction::from_poly(in_x));
  if (r.pole_order != 0)
    throw std::logic_error("stieltjes inversion of a polynomial form produced a pole");
  return SemicircleDensityPoly{r.P};
}

// Exact moment of order two_l: sum_j P_{2j} Cat(l + j); odd orders vanish
// by symmetry.
inline Rational density_moment(const SemicircleDensityPoly& d, int two_l) {
  if (two_l < 0) throw std::invalid_argument("density_moment: negative order");
  if (two_l % 2 != 0) return 0;
  const int l = two_l / 2;
  Rational acc = 0;
  for (size_t j = 0; j < d.P.c.size(); ++j)
    acc += d.P.c[j] * Rational(catalan_number(l + static_cast<int>(j)));
  return acc;
}

// The polynomial factors of the density family: entry i is the factor of
// the order-i correction (entry 0 is the constant 1 of the semicircle).
inline std::vector<EvenPoly> density_family(const std::vector<Poly>& Q) {
  std::vector<EvenPoly> out;
  for (size_t i = 0; i < Q.size(); ++i) {
    ViPolyForm form;
    form.i = static_cast<int>(i);
    form.polynomial = true;
    form.Q = Q[i];
    out.push_back(stieltjes_invert(to_catalan_poly(form)).P);
  }
  return out;
}

// Partial sum sum_{i<=T} c^{-i} P_i as a single even polynomial.
inline EvenPoly density_partial_sum(const std::vector<EvenPoly>& family, const Rational& c,
                                    int T) {
  if (T < 0 || T >= static_cast<int>(family.size()))
    throw std::invalid_argument("density_partial_sum: order out of range");
  EvenPoly acc;
  Rational u = 1;
  for (int i = 0; i <= T; ++i) {
    acc = acc + family[i] * u;
    u /= c;
  }
  return acc;
}

// Largest T <= max_order whose partial density sum is certified
// non-negative on (-2, 2) by Sturm root counting.
inline int truncation_order_t(const std::vector<EvenPoly>& family, const Rational& c,
                              int max_order = 5) {
  if (c <= 0) throw std::invalid_argument("truncation_order_t: c must be positive");
  max_order = std::min<int>(max_order, static_cast<int>(family.size()) - 1);
  for (int T = max_order; T >= 0; --T) {
    const EvenPoly sum = density_partial_sum(family, c, T);
    if (sturm_sign_constant(sum, Rational(-2), Rational(2))) return T;
  }
  throw std::logic_error("truncation_order_t: even the leading term failed");
}

// Pointwise value of the density P(z) sqrt(4-z^2) / (2 pi), zero outside.
inline double density_value(const EvenPoly& P, double z) {
  if (z <= -2.0 || z >= 2.0) return 0.0;
  constexpr double kPi = 3.14159265358979323846;
  return P.eval_double(z) * std::sqrt(4.0 - z * z) / (2.0 * kPi);
}

}  // namespace treewalks::density
