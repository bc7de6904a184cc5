#pragma once

#include "treewalks/superreduced.hpp"

#include <stdexcept>

namespace treewalks::gf {

// K_xi(u, v, z): kernel walks of excess xi, u marking simple edges, v the
// vertices (exponentially) and z the half-length. Polynomial of degree at
// most 2xi-2 in u, 3xi-1 in v and 4xi-2 in z.
struct KernelGF {
  int xi = 0;
  ExactSeries k_uvz;  // vars u, v, z; coefficients carry the 1/m! factors
};

// Lagrange inversion of the root-decomposition equation: the coefficient
// of u^s is [t^s] Phi^{s+1} / (s+1) with
//   Phi(t, v, z) = S_{<=xi}(v, z/(1-zt)^2) / (1-zt) - v z t - v,
// and the grade z-degree minus v-degree selects the excess slice, playing
// the role of the auxiliary y-marking without a fourth variable.
inline KernelGF kernel_gf(const SuperreducedGF& s, int xi) {
  if (xi < 0 || xi > s.xi_max)
    throw std::invalid_argument("kernel_gf: excess out of range");
  const std::vector<std::string> uvz{"u", "v", "z"};
  if (xi == 0) {
    // the trivial walk is the only kernel of excess zero
    KernelGF out;
    out.xi = 0;
    out.k_uvz = ExactSeries::monomial(uvz, {0, 1, 0}, {0, 1, 0}, 1);
    return out;
  }

  const int smax = 2 * xi - 2;
  const int vmax = 3 * xi - 1;
  const int zmax = 4 * xi - 2;
  const std::vector<std::string> tvz{"t", "v", "z"};
  const std::vector<int> tvz_t{std::max(smax, 0), vmax, zmax};

  const ExactSeries Sle = superreduced_up_to_excess(s, xi);

  // z / (1 - z t)^2 and 1 / (1 - z t)
  ExactSeries one_minus_zt = ExactSeries::constant(tvz, tvz_t, 1);
  one_minus_zt.add_term({1, 0, 1}, -1);
  const ExactSeries inv = ExactSeries::reciprocal(one_minus_zt);
  const ExactSeries g = ExactSeries::monomial(tvz, tvz_t, {0, 0, 1}, 1) * inv * inv;

  ExactSeries phi = inv * ExactSeries::compose(Sle, "z", g);
  phi -= ExactSeries::monomial(tvz, tvz_t, {1, 1, 1}, 1);  // v z t
  phi -= ExactSeries::monomial(tvz, tvz_t, {0, 1, 0}, 1);  // v
  // the two subtractions cancel the grade -1 and the stray grade-0 term,
  // so grades in products only grow: pruning above xi-1 is lossless
  const auto grade = [](const ExactSeries::Exponents& e) { return e[2] - e[1]; };
  for (const auto& [e, c] : phi.terms()) {
    if (grade(e) < 0) throw std::logic_error("kernel_gf: negative grade survived in Phi");
    (void)c;
  }
  const auto keep = [&](const ExactSeries::Exponents& e) { return grade(e) <= xi - 1; };
  phi = phi.filtered(keep);

  KernelGF out;
  out.xi = xi;
  out.k_uvz = ExactSeries(uvz, {std::max(smax, 0), vmax, zmax});
  // u^0 row: superreduced walks of excess exactly xi
  for (const auto& [e, c] : Sle.terms())
    if (excess_of(e) == xi) out.k_uvz.add_term({0, e[0], e[1]}, c);

  ExactSeries pw = phi;
  for (int sdeg = 1; sdeg <= smax; ++sdeg) {
    pw = ExactSeries::mul(pw, phi, keep);  // pw = Phi^{s+1}
    const Rational inv_s1 = Rational(1, sdeg + 1);
    for (const auto& [e, c] : pw.terms())
      if (e[0] == sdeg && grade(e) == xi - 1)
        out.k_uvz.add_term({sdeg, e[1], e[2]}, c * inv_s1);
  }
  return out;
}

// K_xi(u, 1, z).
inline ExactSeries kernel_gf_u1(const KernelGF& k) {
  return k.k_uvz.eliminate_set_one("v");
}

// Exact labeled count k_{xi, s, 2l}.
inline Int kernel_count(const KernelGF& k, int s, int two_l) {
  if (two_l % 2 != 0) return 0;
  const int l = two_l / 2;
  const int m = l - k.xi + 1;
  if (m < 1) return 0;
  const Rational c = k.k_uvz.coeff({s, m, l});
  const Rational n = c * Rational(factorial(m));
  if (!is_integer(n)) throw std::logic_error("kernel count is not an integer");
  return numerator(n);
}

}  // namespace treewalks::gf
