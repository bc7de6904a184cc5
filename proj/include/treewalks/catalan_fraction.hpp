#pragma once

#include "treewalks/poly.hpp"
#include "treewalks/series.hpp"

#include <stdexcept>

namespace treewalks::gf {

// N(x) / ((1-x)^a (1+x)^b) viewed as a function of z through x = z C(z)^2,
// kept reduced (the numerator shares no (1-x) or (1+x) factor with the
// denominator). Since C = 1 + x, every polynomial in z and C(z) with
// denominator powers of 1 - zC^2 lives here, and the ring is closed under
// d/dz and multiplication by z.
class CatalanFraction {
 public:
  CatalanFraction() = default;
  CatalanFraction(Poly num, int pole_one, int pole_minus_one)
      : num_(std::move(num)), a_(pole_one), b_(pole_minus_one) {
    if (a_ < 0 || b_ < 0) throw std::invalid_argument("negative denominator exponent");
    reduce();
  }
  static CatalanFraction from_poly(Poly p) { return CatalanFraction(std::move(p), 0, 0); }
  static CatalanFraction catalan() {  // C = 1 + x
    return from_poly(Poly({Rational(1), Rational(1)}));
  }
  static CatalanFraction zero() { return CatalanFraction(); }

  const Poly& numerator() const { return num_; }
  int pole_order_at_one() const { return a_; }
  int pole_order_at_minus_one() const { return b_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return a_ == 0 && b_ == 0; }

  friend CatalanFraction operator+(const CatalanFraction& f, const CatalanFraction& g) {
    const int a = std::max(f.a_, g.a_);
    const int b = std::max(f.b_, g.b_);
    Poly n = f.num_ * one_minus_pow(a - f.a_) * one_plus_pow(b - f.b_) +
             g.num_ * one_minus_pow(a - g.a_) * one_plus_pow(b - g.b_);
    return CatalanFraction(std::move(n), a, b);
  }
  friend CatalanFraction operator-(const CatalanFraction& f, const CatalanFraction& g) {
    return f + (-g);
  }
  CatalanFraction operator-() const {
    CatalanFraction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend CatalanFraction operator*(const CatalanFraction& f, const CatalanFraction& g) {
    return CatalanFraction(f.num_ * g.num_, f.a_ + g.a_, f.b_ + g.b_);
  }
  friend CatalanFraction operator*(const CatalanFraction& f, const Rational& s) {
    if (s == 0) return CatalanFraction();
    CatalanFraction r = f;
    r.num_ *= s;
    return r;
  }
  friend CatalanFraction operator*(const Rational& s, const CatalanFraction& f) {
    return f * s;
  }
  CatalanFraction& operator+=(const CatalanFraction& o) { return *this = *this + o; }
  CatalanFraction& operator-=(const CatalanFraction& o) { return *this = *this - o; }
  CatalanFraction& operator*=(const CatalanFraction& o) { return *this = *this * o; }
  friend bool operator==(const CatalanFraction& f, const CatalanFraction& g) {
    return f.num_ == g.num_ && f.a_ == g.a_ && f.b_ == g.b_;
  }

  // Multiplication by z = x / (1+x)^2.
  CatalanFraction mul_z() const {
    return CatalanFraction(num_ * Poly::monomial(1), a_, b_ + 2);
  }
  CatalanFraction mul_z_pow(int k) const {
    CatalanFraction r = *this;
    for (int i = 0; i < k; ++i) r = r.mul_z();
    return r;
  }
  // Multiplication and division by C = 1 + x.
  CatalanFraction mul_catalan() const {
    return CatalanFraction(num_ * Poly({Rational(1), Rational(1)}), a_, b_);
  }
  CatalanFraction div_catalan() const { return CatalanFraction(num_, a_, b_ + 1); }

  // d/dz via dx/dz = C^2 (1+x)/(1-x) = (1+x)^3 / (1-x).
  CatalanFraction ddz() const {
    static const Poly one_minus({Rational(1), Rational(-1)});
    static const Poly one_plus({Rational(1), Rational(1)});
    Poly inner = num_.derivative() * one_minus * one_plus +
                 Rational(a_) * num_ * one_plus - Rational(b_) * num_ * one_minus;
    return CatalanFraction(inner * one_plus * one_plus, a_ + 2, b_);
  }
  CatalanFraction ddz(int k) const {
    CatalanFraction r = *this;
    for (int i = 0; i < k; ++i) r = r.ddz();
    return r;
  }

  // z-series expansion through z^order.
  Poly z_series(int order) const {
    const Poly x = catalan_x_series(order);
    Poly r = Poly::compose_trunc(num_, x, order);
    if (a_ > 0) {
      const Poly inv = Poly::reciprocal_trunc(Poly::constant(1) - x, order);
      for (int i = 0; i < a_; ++i) r = Poly::mul_trunc(r, inv, order);
    }
    if (b_ > 0) {
      const Poly inv = Poly::reciprocal_trunc(Poly::constant(1) + x, order);
      for (int i = 0; i < b_; ++i) r = Poly::mul_trunc(r, inv, order);
    }
    return r;
  }

 private:
  static Poly one_minus_pow(int k) {
    Poly r = Poly::constant(1);
    const Poly f({Rational(1), Rational(-1)});
    for (int i = 0; i < k; ++i) r *= f;
    return r;
  }
  static Poly one_plus_pow(int k) {
    Poly r = Poly::constant(1);
    const Poly f({Rational(1), Rational(1)});
    for (int i = 0; i < k; ++i) r *= f;
    return r;
  }

  void reduce() {
    if (num_.is_zero()) {
      a_ = b_ = 0;
      return;
    }
    static const Poly one_minus({Rational(1), Rational(-1)});
    static const Poly one_plus({Rational(1), Rational(1)});
    while (a_ > 0 && num_.eval(1) == 0) {
      num_ = Poly::divexact(num_, one_minus);
      --a_;
    }
    while (b_ > 0 && num_.eval(-1) == 0) {
      num_ = Poly::divexact(num_, one_plus);
      --b_;
    }
  }

  Poly num_;
  int a_ = 0;
  int b_ = 0;
};

}  // namespace treewalks::gf
