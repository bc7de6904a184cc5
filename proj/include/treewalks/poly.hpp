#pragma once

#include "treewalks/rational.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace treewalks {

// Dense univariate polynomial over Rational, coefficients stored ascending.
// Doubles as a truncated power series where the operation names say so.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(Rational a) {
    Poly p;
    if (a != 0) p.c_.push_back(std::move(a));
    return p;
  }
  static Poly monomial(int k, Rational a = Rational(1)) {
    Poly p;
    if (a != 0) {
      p.c_.assign(k + 1, Rational(0));
      p.c_[k] = std::move(a);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
  }
  void set_coeff(int k, Rational v) {
    if (k >= static_cast<int>(c_.size())) {
      if (v == 0) return;
      c_.resize(k + 1, Rational(0));
    }
    c_[k] = std::move(v);
    trim();
  }

  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-() const {
    std::vector<Rational> r(c_);
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Rational& s) {
    if (s == 0) return Poly();
    std::vector<Rational> r(a.c_);
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
  }
  friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& s) { return *this = *this * s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  static Poly mul_trunc(const Poly& a, const Poly& b, int order) {
    std::vector<Rational> r(std::min<size_t>(order + 1, a.c_.size() + b.c_.size()), Rational(0));
    if (a.is_zero() || b.is_zero()) return Poly();
    for (size_t i = 0; i < a.c_.size() && static_cast<int>(i) <= order; ++i) {
      if (a.c_[i] == 0) continue;
      const size_t jmax = std::min(b.c_.size(), static_cast<size_t>(order + 1 - i));
      for (size_t j = 0; j < jmax; ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }

  Poly truncated(int order) const {
    if (degree() <= order) return *this;
    std::vector<Rational> r(c_.begin(), c_.begin() + order + 1);
    return Poly(std::move(r));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long long>(i));
    return Poly(std::move(r));
  }

  Rational eval(const Rational& x) const {
    Rational r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  double eval_double(double x) const {
    double r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + to_double(c_[i]);
    return r;
  }

  // Quotient/remainder over the rationals; b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Poly rem = a;
    std::vector<Rational> q;
    const int db = b.degree();
    if (rem.degree() >= db) q.assign(rem.degree() - db + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= db) {
      const int k = rem.degree() - db;
      const Rational f = rem.leading() / b.leading();
      q[k] = f;
      for (int i = 0; i <= db; ++i) rem.c_[k + i] -= f * b.c_[i];
      rem.trim();
    }
    return {Poly(std::move(q)), rem};
  }

  static bool divides(const Poly& d, const Poly& a) {
    return divmod(a, d).second.is_zero();
  }
  static Poly divexact(const Poly& a, const Poly& d) {
    auto [q, r] = divmod(a, d);
    if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
    return q;
  }

  // Monic gcd.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero() && a.leading() != 1) a *= Rational(1) / a.leading();
    return a;
  }

  // f(g) truncated; for series use g should have zero constant term.
  static Poly compose_trunc(const Poly& f, const Poly& g, int order) {
    Poly r;
    for (size_t i = f.c_.size(); i-- > 0;) {
      r = mul_trunc(r, g, order);
      r += Poly::constant(f.c_[i]);
    }
    return r.truncated(order);
  }

  // 1/f as a truncated series; f must have nonzero constant term.
  static Poly reciprocal_trunc(const Poly& f, int order) {
    if (f.coeff(0) == 0)
      throw std::invalid_argument("series reciprocal requires a nonzero constant term");
    const Rational c0 = f.coeff(0);
    std::vector<Rational> r(order + 1, Rational(0));
    r[0] = Rational(1) / c0;
    for (int n = 1; n <= order; ++n) {
      Rational s = 0;
      for (int k = 1; k <= n && k <= f.degree(); ++k) s += f.c_[k] * r[n - k];
      r[n] = -s / c0;
    }
    return Poly(std::move(r));
  }

  // sqrt(f) as a truncated series; f must have constant term 1.
  static Poly sqrt_trunc(const Poly& f, int order) {
    if (f.coeff(0) != 1)
      throw std::invalid_argument("series sqrt requires constant term 1");
    std::vector<Rational> r(order + 1, Rational(0));
    r[0] = 1;
    for (int n = 1; n <= order; ++n) {
      Rational s = f.coeff(n);
      for (int k = 1; k < n; ++k) s -= r[k] * r[n - k];
      r[n] = s / 2;
    }
    return Poly(std::move(r));
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!first) os << " + ";
      os << to_fraction_string(c_[i]);
      if (i > 0) os << "*" << var << "^" << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace treewalks
