#pragma once

#include "treewalks/poly.hpp"
#include "treewalks/rational.hpp"

#include <vector>

namespace treewalks {

// Even polynomial in z, stored as coefficients of z^0, z^2, z^4, ...
struct EvenPoly {
  std::vector<Rational> c;

  EvenPoly() = default;
  explicit EvenPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

  static EvenPoly from_poly_in_z(const Poly& p) {
    EvenPoly e;
    for (int k = 0; k <= p.degree(); ++k) {
      if (k % 2 == 1) {
        if (p.coeff(k) != 0)
          throw std::invalid_argument("polynomial is not even");
        continue;
      }
      e.set(k / 2, p.coeff(k));
    }
    return e;
  }

  Rational coeff(int j) const {  // coefficient of z^{2j}
    return j < static_cast<int>(c.size()) ? c[j] : Rational(0);
  }
  void set(int j, Rational v) {
    if (j >= static_cast<int>(c.size())) {
      if (v == 0) return;
      c.resize(j + 1, Rational(0));
    }
    c[j] = std::move(v);
    trim();
  }
  bool is_zero() const { return c.empty(); }
  int degree_in_z() const { return c.empty() ? -1 : 2 * (static_cast<int>(c.size()) - 1); }

  // As a polynomial in w = z^2.
  Poly to_poly_in_w() const { return Poly(c); }
  Poly to_poly_in_z() const {
    Poly p;
    for (size_t j = 0; j < c.size(); ++j) p.set_coeff(2 * static_cast<int>(j), c[j]);
    return p;
  }

  double eval_double(double z) const { return to_poly_in_w().eval_double(z * z); }
  Rational eval(const Rational& z) const { return to_poly_in_w().eval(z * z); }

  friend EvenPoly operator+(const EvenPoly& a, const EvenPoly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return EvenPoly(std::move(r));
  }
  friend EvenPoly operator*(const EvenPoly& a, const Rational& s) {
    std::vector<Rational> r(a.c);
    for (auto& x : r) x *= s;
    return EvenPoly(std::move(r));
  }
  friend bool operator==(const EvenPoly& a, const EvenPoly& b) { return a.c == b.c; }

 private:
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

}  // namespace treewalks
