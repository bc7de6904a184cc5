#pragma once

#include "treewalks/combinatorics.hpp"
#include "treewalks/poly.hpp"
#include "treewalks/series.hpp"

#include <stdexcept>

namespace treewalks::gf {

// Generating function of superreduced walks (tree walks without simple
// edges). The trivariate series in (x, v, z) marks root departures
// exponentially in x, vertices exponentially in v and half-length
// ordinarily in z; stored coefficients carry the 1/j! 1/m! factors.
// The bivariate series is its Laplace sum over x.
struct SuperreducedGF {
  int xi_max = 0;
  ExactSeries trivariate;  // vars x, v, z
  ExactSeries bivariate;   // vars v, z
};

namespace detail {

// D(t, x z) = sum_{k>=1} (x z)^{k+1} / (k+1)! * t^k / k! in (t, x, v, z).
inline ExactSeries departure_kernel(const std::vector<std::string>& vars,
                                    const std::vector<int>& trunc) {
  ExactSeries d(vars, trunc);
  const int zmax = trunc[3];
  for (int k = 1; k + 1 <= zmax; ++k) {
    const Rational c = Rational(1, Int(factorial(k + 1) * factorial(k)));
    d.add_term({k, k + 1, 0, k + 1}, c);
  }
  return d;
}

}  // namespace detail

// Solves S(x,v,z) = v * exp(L_{t=1}(D(t, xz) * S(t,v,z))) by fixpoint
// iteration from S = v; every iteration pins strictly more coefficients,
// so the truncated solution is reached within the degree bounds.
inline SuperreducedGF superreduced_gf(int xi_max) {
  if (xi_max < 0) throw std::invalid_argument("superreduced_gf needs xi_max >= 0");
  const int V = xi_max + 1;      // vertex degree bound
  const int Z = 2 * xi_max;      // half-length bound
  const int X = Z;               // root departures never exceed the half-length
  const std::vector<std::string> xvz{"x", "v", "z"};
  const std::vector<int> xvz_t{X, V, Z};
  const std::vector<std::string> txvz{"t", "x", "v", "z"};
  const std::vector<int> txvz_t{Z, X, V, Z};

  const ExactSeries D = detail::departure_kernel(txvz, txvz_t);
  ExactSeries S = ExactSeries::monomial(xvz, xvz_t, {0, 1, 0}, 1);

  const int max_iter = V + Z + 2;
  for (int iter = 0; iter < max_iter; ++iter) {
    const ExactSeries St =
        S.renamed({"t", "v", "z"}).embedded(txvz, txvz_t);
    const ExactSeries L = (D * St).laplace_eliminate("t");
    ExactSeries next = ExactSeries::exp(L);
    next = ExactSeries::monomial(xvz, xvz_t, {0, 1, 0}, 1) * next;
    if (next == S) {
      SuperreducedGF out;
      out.xi_max = xi_max;
      out.trivariate = std::move(S);
      out.bivariate = out.trivariate.laplace_eliminate("x");
      return out;
    }
    S = std::move(next);
  }
  throw std::logic_error("superreduced fixpoint did not converge within the degree bound");
}

// Excess of a bivariate (v, z) monomial: half-length minus vertices plus one.
inline int excess_of(const ExactSeries::Exponents& e_vz) {
  return e_vz[1] - e_vz[0] + 1;
}

// S_xi(z): the Table-style polynomial of superreduced walks with fixed
// excess; coefficient of z^l is s_{m,2l}/m! with m = l - xi + 1.
inline Poly extract_S_xi(const SuperreducedGF& s, int xi) {
  if (xi < 0 || xi > s.xi_max)
    throw std::invalid_argument("extract_S_xi: excess out of range");
  Poly p;
  for (const auto& [e, c] : s.bivariate.terms())
    if (excess_of(e) == xi) p.set_coeff(e[1], p.coeff(e[1]) + c);
  return p;
}

// S_{<=xi}(v, z): superreduced walks of excess at most xi.
inline ExactSeries superreduced_up_to_excess(const SuperreducedGF& s, int xi) {
  return s.bivariate.filtered(
      [&](const ExactSeries::Exponents& e) { return excess_of(e) <= xi; });
}

// Exact labeled count s_{m, 2l}.
inline Int superreduced_count(const SuperreducedGF& s, int m, int two_l) {
  if (two_l % 2 != 0) return 0;
  const Rational c = s.bivariate.coeff({m, two_l / 2});
  const Rational n = c * Rational(factorial(m));
  if (!is_integer(n)) throw std::logic_error("superreduced count is not an integer");
  return numerator(n);
}

}  // namespace treewalks::gf
