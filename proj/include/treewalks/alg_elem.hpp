#pragma once

#include "treewalks/poly.hpp"
#include "treewalks/rational.hpp"

#include <cmath>

namespace treewalks {

// Element a(z) + b(z)*y of Q[z][y] / (y^2 - (4 - z^2)); the reduction
// y^2 = 4 - z^2 is applied on every multiplication, so the y-degree
// never exceeds 1.
struct AlgElem {
  Poly a, b;

  AlgElem() = default;
  AlgElem(Poly a_, Poly b_) : a(std::move(a_)), b(std::move(b_)) {}
  static AlgElem from_poly(Poly p) { return AlgElem(std::move(p), Poly()); }
  static AlgElem y() { return AlgElem(Poly(), Poly::constant(1)); }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  friend AlgElem operator+(const AlgElem& x, const AlgElem& w) {
    return AlgElem(x.a + w.a, x.b + w.b);
  }
  friend AlgElem operator-(const AlgElem& x, const AlgElem& w) {
    return AlgElem(x.a - w.a, x.b - w.b);
  }
  AlgElem operator-() const { return AlgElem(-a, -b); }
  friend AlgElem operator*(const AlgElem& x, const AlgElem& w) {
    static const Poly rel({Rational(4), Rational(0), Rational(-1)});  // 4 - z^2
    return AlgElem(x.a * w.a + x.b * w.b * rel, x.a * w.b + x.b * w.a);
  }
  friend AlgElem operator*(const AlgElem& x, const Rational& s) {
    return AlgElem(x.a * s, x.b * s);
  }
  AlgElem& operator+=(const AlgElem& o) { return *this = *this + o; }
  AlgElem& operator-=(const AlgElem& o) { return *this = *this - o; }
  AlgElem& operator*=(const AlgElem& o) { return *this = *this * o; }
  friend bool operator==(const AlgElem& x, const AlgElem& w) {
    return x.a == w.a && x.b == w.b;
  }

  // Numeric value with y = sqrt(4 - z^2); meaningful for z in (-2, 2).
  double eval_double(double z) const {
    return a.eval_double(z) + b.eval_double(z) * std::sqrt(4.0 - z * z);
  }
};

// Complex combination re + i*im with AlgElem components; used for the
// boundary values of Stieltjes transforms on the cut.
struct BoundaryElem {
  AlgElem re, im;

  BoundaryElem() = default;
  BoundaryElem(AlgElem r, AlgElem i) : re(std::move(r)), im(std::move(i)) {}

  friend BoundaryElem operator+(const BoundaryElem& x, const BoundaryElem& w) {
    return BoundaryElem(x.re + w.re, x.im + w.im);
  }
  friend BoundaryElem operator-(const BoundaryElem& x, const BoundaryElem& w) {
    return BoundaryElem(x.re - w.re, x.im - w.im);
  }
  friend BoundaryElem operator*(const BoundaryElem& x, const BoundaryElem& w) {
    return BoundaryElem(x.re * w.re - x.im * w.im, x.re * w.im + x.im * w.re);
  }
  friend BoundaryElem operator*(const BoundaryElem& x, const Rational& s) {
    return BoundaryElem(x.re * s, x.im * s);
  }
  BoundaryElem conjugate() const { return BoundaryElem(re, -im); }

  // Boundary value of the semicircle moment generating function:
  // C(1/w^2) at w = z + i0 equals z^2/2 - (z/2) i y.
  static BoundaryElem catalan_boundary() {
    return BoundaryElem(AlgElem(Poly({Rational(0), Rational(0), Rational(1, 2)}), Poly()),
                        AlgElem(Poly(), Poly({Rational(0), Rational(-1, 2)})));
  }
};

}  // namespace treewalks
