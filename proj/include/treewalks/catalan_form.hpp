#pragma once

#include "treewalks/catalan_fraction.hpp"
#include "treewalks/combinatorics.hpp"
#include "treewalks/kernel_gf.hpp"

#include <stdexcept>
#include <vector>

namespace treewalks::gf {

// The structural normal form of the walk generating function:
//   W_xi = C(z) * sum_s K[s](x) / (1-x)^{s+1},   x = z C(z)^2,
// with K[s] of non-negative coefficients and degree exactly 2 xi + s.
// Excess zero is the bare Catalan series W_0 = C.
struct CatalanForm {
  int xi = 0;
  std::vector<Poly> K;  // K[s], 0 <= s <= 2 xi - 2 (single entry {1} for xi = 0)
};

// K_{xi,s}(x) = [u^s] K_xi(u, 1, z) with z renamed to x; the substitution
// z -> zC^2 of the reconstruction makes the two readings coincide.
inline CatalanForm to_catalan_form(const KernelGF& k) {
  CatalanForm f;
  f.xi = k.xi;
  const ExactSeries ku1 = kernel_gf_u1(k);
  const int smax = k.xi == 0 ? 0 : 2 * k.xi - 2;
  f.K.assign(smax + 1, Poly());
  for (const auto& [e, c] : ku1.terms()) {
    Poly& p = f.K[e[0]];
    p.set_coeff(e[1], p.coeff(e[1]) + c);
  }
  return f;
}

// W_xi as an element of the exact Catalan algebra.
inline CatalanFraction catalan_form_fraction(const CatalanForm& f) {
  if (f.xi == 0) return CatalanFraction::catalan();
  CatalanFraction w = CatalanFraction::zero();
  for (size_t s = 0; s < f.K.size(); ++s)
    w += CatalanFraction(f.K[s], static_cast<int>(s) + 1, 0);
  return w.mul_catalan();
}

// W_xi(z) through z^order by direct series substitution into the kernel
// polynomial (the reconstruction route).
inline Poly treewalk_gf(const KernelGF& k, int order) {
  if (order < 0) throw std::invalid_argument("treewalk_gf: negative order");
  if (k.xi == 0) return catalan_series_poly(order);
  const Poly x = catalan_x_series(order);
  const Poly c = catalan_series_poly(order);
  const Poly inv = Poly::reciprocal_trunc(Poly::constant(1) - x, order);
  const ExactSeries ku1 = kernel_gf_u1(k);
  // K_xi(1/(1-x), 1, x) * C / (1-x), assembled per power of u
  const int smax = 2 * k.xi - 2;
  std::vector<Poly> per_s(smax + 1, Poly());
  for (const auto& [e, cc] : ku1.terms()) per_s[e[0]].set_coeff(e[1], cc);
  Poly acc;
  Poly inv_pow = inv;  // (1/(1-x))^{s+1}
  for (int s = 0; s <= smax; ++s) {
    if (!per_s[s].is_zero()) {
      const Poly ks = Poly::compose_trunc(per_s[s], x, order);
      acc += Poly::mul_trunc(ks, inv_pow, order);
    }
    inv_pow = Poly::mul_trunc(inv_pow, inv, order);
  }
  return Poly::mul_trunc(acc, c, order);
}

// The same series from the reduced closed form; must agree with the
// reconstruction route exactly.
inline Poly catalan_form_eval(const CatalanForm& f, int order) {
  if (order < 0) throw std::invalid_argument("catalan_form_eval: negative order");
  return catalan_form_fraction(f).z_series(order);
}

// Structural facts of the normal form for xi >= 1: non-negative
// coefficients, degree exactly 2 xi + s, and the two top closed forms
// Cat(xi-1) x^{4xi-2} and (3xi-1) Cat(xi-1) x^{4xi-3}.
inline bool catalan_form_structure_ok(const CatalanForm& f, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (f.xi == 0) return f.K.size() == 1 && f.K[0] == Poly::constant(1);
  const int xi = f.xi;
  if (static_cast<int>(f.K.size()) != 2 * xi - 1) return fail("wrong number of K polynomials");
  for (int s = 0; s <= 2 * xi - 2; ++s) {
    const Poly& p = f.K[s];
    for (int d = 0; d <= p.degree(); ++d)
      if (p.coeff(d) < 0) return fail("negative coefficient in K_{xi,s}");
    if (p.degree() != 2 * xi + s) return fail("degree of K_{xi,s} is not 2 xi + s");
  }
  const Poly top = Poly::monomial(4 * xi - 2, Rational(catalan_number(xi - 1)));
  if (f.K[2 * xi - 2] != top) return fail("K_{xi,2xi-2} is not Cat(xi-1) x^{4xi-2}");
  if (xi >= 2) {
    const Poly next =
        Poly::monomial(4 * xi - 3, Rational((3 * xi - 1) * catalan_number(xi - 1)));
    if (f.K[2 * xi - 3] != next) return fail("K_{xi,2xi-3} is not (3xi-1) Cat(xi-1) x^{4xi-3}");
  }
  return true;
}

}  // namespace treewalks::gf
