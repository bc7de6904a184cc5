#pragma once

#include "treewalks/census.hpp"
#include "treewalks/pipeline.hpp"
#include "treewalks/poly.hpp"
#include "treewalks/scaling.hpp"

#include <stdexcept>
#include <vector>

namespace treewalks::moments {

// m_{2l}(mu^c) = sum_xi c^{-xi} [z^l] W_xi, carried exactly as a
// polynomial in u = 1/c. Walks of excess beyond the built pipeline only
// occur on one or two vertices, where the counts are 0 and 2.
class MomentTable {
 public:
  explicit MomentTable(const gf::Pipeline& pipe, int l_max)
      : l_max_(l_max) {
    if (l_max < 0) throw std::invalid_argument("MomentTable: negative l_max");
    if (l_max > pipe.xi_max() + 2)
      throw std::invalid_argument(
          "MomentTable: walk generating functions beyond the built excess are required");
    series_.reserve(pipe.xi_max() + 1);
    for (int xi = 0; xi <= pipe.xi_max(); ++xi)
      series_.push_back(pipe.walk_series(xi, l_max));
    xi_max_ = pipe.xi_max();
  }

  int l_max() const { return l_max_; }

  // [z^l] W_xi
  Rational walk_coeff(int xi, int l) const {
    if (xi <= xi_max_) return series_[xi].coeff(l);
    const int m = l - xi + 1;
    if (m == 1) return 0;                    // no tree walks on one vertex
    if (m == 2) return l >= 1 ? 1 : 0;       // one doubled edge: 2 / 2!
    throw std::invalid_argument("walk_coeff: excess out of range");
  }

  // m_{2l} as a dense polynomial in u = 1/c (exact, degree <= l).
  Poly moment_in_u(int l) const {
    if (l < 0 || l > l_max_) throw std::invalid_argument("moment_in_u: order out of range");
    Poly p;
    for (int xi = 0; xi <= l; ++xi) p.set_coeff(xi, walk_coeff(xi, l));
    return p;
  }

  Rational moment_exact(int l, const Rational& c) const {
    if (c <= 0) throw std::invalid_argument("moment_exact: c must be positive");
    return moment_in_u(l).eval(Rational(1) / c);
  }

 private:
  int l_max_;
  int xi_max_;
  std::vector<Poly> series_;
};

// Direct evaluation sum_m w_{m,2l} / m! * c^{m-l-1} from the census.
inline Rational moment_from_census(const oracle::WalkCensus& census, int l,
                                   const Rational& c) {
  Rational acc = 0;
  for (int m = 1; m <= l + 1; ++m) {
    const Int w = census.walks(m, 2 * l);
    if (w == 0) continue;
    acc += Rational(w, factorial(m)) * rational_pow(c, m - l - 1);
  }
  if (l == 0) acc = 1;  // the trivial walk
  return acc;
}

// Even-moment vector with entries polynomial in u = 1/c.
struct MomentVector {
  std::vector<Poly> m;  // m[l] = m_{2l} as a u-polynomial

  int l_max() const { return static_cast<int>(m.size()) - 1; }
};

inline MomentVector moment_vector(const MomentTable& table, int l_max) {
  MomentVector v;
  for (int l = 0; l <= l_max; ++l) v.m.push_back(table.moment_in_u(l));
  return v;
}

// Dilation by a constant factor: m_{2l} -> alpha^{2l} m_{2l}.
inline MomentVector dilate(const MomentVector& v, const Rational& alpha) {
  MomentVector out;
  Rational a2l = 1;
  const Rational a2 = alpha * alpha;
  for (const Poly& p : v.m) {
    out.m.push_back(p * a2l);
    a2l *= a2;
  }
  return out;
}

// Dilation by a u-series factor, truncated at u^order.
inline MomentVector dilate_series(const MomentVector& v, const Poly& alpha_u, int order) {
  MomentVector out;
  Poly a2l = Poly::constant(1);
  const Poly a2 = Poly::mul_trunc(alpha_u, alpha_u, order);
  for (const Poly& p : v.m) {
    out.m.push_back(Poly::mul_trunc(p.truncated(order), a2l, order));
    a2l = Poly::mul_trunc(a2l, a2, order);
  }
  return out;
}

// The dilation factor of the five-term expansion: f(u) = sqrt(p_5(u)).
inline Poly expansion_dilation_factor(const Poly& p5, int order) {
  return Poly::sqrt_trunc(p5, order);
}

// Residual m_{2l}(mu^c) - m_{2l}(Lambda_{f(1/c)}(sigma + sum_i c^{-i} sigma_i))
// modulo u^{mod_order}, with the correction-measure moments supplied by the
// density side (sigma_moments[i][l] = m_{2l}(sigma_i), sigma_moments[0] = sigma).
inline Poly moment_expansion_residual(const MomentTable& table,
                                      const std::vector<std::vector<Rational>>& sigma_moments,
                                      const Poly& f_u, int l, int mod_order) {
  const int trunc = mod_order - 1;
  const Poly lhs = table.moment_in_u(l).truncated(trunc);
  Poly mix;  // sum_i u^i m_{2l}(sigma_i)
  for (size_t i = 0; i < sigma_moments.size(); ++i)
    mix.set_coeff(static_cast<int>(i), sigma_moments[i].at(l));
  Poly f2l = Poly::constant(1);
  const Poly f2 = Poly::mul_trunc(f_u, f_u, trunc);
  for (int j = 0; j < l; ++j) f2l = Poly::mul_trunc(f2l, f2, trunc);
  const Poly rhs = Poly::mul_trunc(f2l, mix.truncated(trunc), trunc);
  return lhs - rhs;
}

}  // namespace treewalks::moments
