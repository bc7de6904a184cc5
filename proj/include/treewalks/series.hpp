#pragma once

#include "treewalks/combinatorics.hpp"
#include "treewalks/poly.hpp"
#include "treewalks/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treewalks {

// Truncated multivariate power series over Rational with a sparse
// exponent-tuple representation. Truncation bounds are explicit per
// variable and every operation re-truncates its result; no stored zero
// coefficients.
class ExactSeries {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  ExactSeries() = default;
  ExactSeries(std::vector<std::string> vars, std::vector<int> trunc)
      : vars_(std::move(vars)), trunc_(std::move(trunc)) {
    if (vars_.size() != trunc_.size())
      throw std::invalid_argument("vars/trunc size mismatch");
  }

  static ExactSeries constant(std::vector<std::string> vars, std::vector<int> trunc,
                              const Rational& a) {
    ExactSeries s(std::move(vars), std::move(trunc));
    s.add_term(Exponents(s.vars_.size(), 0), a);
    return s;
  }
  static ExactSeries monomial(std::vector<std::string> vars, std::vector<int> trunc,
                              Exponents e, const Rational& a) {
    ExactSeries s(std::move(vars), std::move(trunc));
    s.add_term(std::move(e), a);
    return s;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& trunc() const { return trunc_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("no such variable: " + name);
  }

  bool within_trunc(const Exponents& e) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > trunc_[i]) return false;
    return true;
  }

  void add_term(Exponents e, const Rational& a) {
    if (a == 0 || e.size() != vars_.size() || !within_trunc(e)) {
      if (e.size() != vars_.size())
        throw std::invalid_argument("exponent tuple arity mismatch");
      return;
    }
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), a);
    } else {
      it->second += a;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  friend ExactSeries operator+(const ExactSeries& a, const ExactSeries& b) {
    a.require_same_space(b);
    ExactSeries r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend ExactSeries operator-(const ExactSeries& a, const ExactSeries& b) {
    a.require_same_space(b);
    ExactSeries r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  ExactSeries operator-() const {
    ExactSeries r(vars_, trunc_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend ExactSeries operator*(const ExactSeries& a, const ExactSeries& b) {
    return mul(a, b, [](const Exponents&) { return true; });
  }
  friend ExactSeries operator*(const ExactSeries& a, const Rational& s) {
    ExactSeries r(a.vars_, a.trunc_);
    if (s == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
    return r;
  }
  friend ExactSeries operator*(const Rational& s, const ExactSeries& a) { return a * s; }
  ExactSeries& operator+=(const ExactSeries& o) { return *this = *this + o; }
  ExactSeries& operator-=(const ExactSeries& o) { return *this = *this - o; }
  ExactSeries& operator*=(const ExactSeries& o) { return *this = *this * o; }

  friend bool operator==(const ExactSeries& a, const ExactSeries& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Product with an extra monomial filter (on top of the truncation bounds).
  template <class Keep>
  static ExactSeries mul(const ExactSeries& a, const ExactSeries& b, Keep keep) {
    a.require_same_space(b);
    ExactSeries r(a.vars_, a.trunc_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        bool ok = true;
        for (size_t i = 0; i < e.size(); ++i) {
          e[i] = ea[i] + eb[i];
          if (e[i] > a.trunc_[i]) {
            ok = false;
            break;
          }
        }
        if (!ok || !keep(e)) continue;
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
          r.terms_.emplace(e, ca * cb);
        } else {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    }
    return r;
  }

  ExactSeries truncated(std::vector<int> new_trunc) const {
    ExactSeries r(vars_, std::move(new_trunc));
    for (const auto& [e, c] : terms_)
      if (r.within_trunc(e)) r.terms_.emplace(e, c);
    return r;
  }

  template <class Pred>
  ExactSeries filtered(Pred pred) const {
    ExactSeries r(vars_, trunc_);
    for (const auto& [e, c] : terms_)
      if (pred(e)) r.terms_.emplace(e, c);
    return r;
  }

  ExactSeries renamed(std::vector<std::string> new_vars) const {
    ExactSeries r = *this;
    if (new_vars.size() != vars_.size())
      throw std::invalid_argument("renamed: arity mismatch");
    r.vars_ = std::move(new_vars);
    return r;
  }

  // Re-embed into a larger variable space (matching names keep exponents).
  ExactSeries embedded(const std::vector<std::string>& new_vars,
                       const std::vector<int>& new_trunc) const {
    ExactSeries r(new_vars, new_trunc);
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
      pos[i] = -1;
      for (size_t j = 0; j < new_vars.size(); ++j)
        if (new_vars[j] == vars_[i]) pos[i] = static_cast<int>(j);
      if (pos[i] < 0) throw std::invalid_argument("embedded: missing variable " + vars_[i]);
    }
    for (const auto& [e, c] : terms_) {
      Exponents ne(new_vars.size(), 0);
      for (size_t i = 0; i < vars_.size(); ++i) ne[pos[i]] = e[i];
      r.add_term(std::move(ne), c);
    }
    return r;
  }

  // Substitute g for variable `var` of f. Every other variable of f must
  // exist in g's space; the result lives in g's space. g needs a zero
  // constant term for the substitution to be well defined on truncations.
  static ExactSeries compose(const ExactSeries& f, const std::string& var,
                             const ExactSeries& g) {
    if (g.coeff(Exponents(g.vars_.size(), 0)) != 0)
      throw std::invalid_argument("compose: inner series has a nonzero constant term");
    const int vi = f.var_index(var);
    int dmax = 0;
    for (const auto& [e, c] : f.terms_) dmax = std::max(dmax, e[vi]);
    ExactSeries r(g.vars_, g.trunc_);
    for (int k = dmax; k >= 0; --k) {
      r = r * g;
      r += f.coeff_of(vi, k).embedded(g.vars_, g.trunc_);
    }
    return r;
  }

  // Slice [var^k], dropping the variable.
  ExactSeries coeff_of(int vi, int k) const {
    std::vector<std::string> nv;
    std::vector<int> nt;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (static_cast<int>(i) == vi) continue;
      nv.push_back(vars_[i]);
      nt.push_back(trunc_[i]);
    }
    ExactSeries r(std::move(nv), std::move(nt));
    for (const auto& [e, c] : terms_) {
      if (e[vi] != k) continue;
      Exponents ne;
      ne.reserve(e.size() - 1);
      for (size_t i = 0; i < e.size(); ++i)
        if (static_cast<int>(i) != vi) ne.push_back(e[i]);
      r.terms_.emplace(std::move(ne), c);
    }
    return r;
  }

  int max_exponent(int vi) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[vi]);
    return m;
  }

  // 1/f; f must have a nonzero constant term.
  static ExactSeries reciprocal(const ExactSeries& f) {
    const Rational c0 = f.coeff(Exponents(f.vars_.size(), 0));
    if (c0 == 0)
      throw std::invalid_argument("series reciprocal requires a nonzero constant term");
    ExactSeries h = f * (Rational(-1) / c0);
    h.add_term(Exponents(f.vars_.size(), 0), 1);  // h = 1 - f/c0, zero constant term
    ExactSeries r = ExactSeries::constant(f.vars_, f.trunc_, 1);
    ExactSeries p = ExactSeries::constant(f.vars_, f.trunc_, 1);
    int total = 0;
    for (int t : f.trunc_) total += t;
    for (int k = 1; k <= total; ++k) {
      p = p * h;
      if (p.is_zero()) break;
      r += p;
    }
    return r * (Rational(1) / c0);
  }

  // exp(f); f must have a zero constant term.
  static ExactSeries exp(const ExactSeries& f) {
    if (f.coeff(Exponents(f.vars_.size(), 0)) != 0)
      throw std::invalid_argument("series exp requires a zero constant term");
    ExactSeries r = ExactSeries::constant(f.vars_, f.trunc_, 1);
    ExactSeries p = ExactSeries::constant(f.vars_, f.trunc_, 1);
    int total = 0;
    for (int t : f.trunc_) total += t;
    Rational inv_fact = 1;
    for (int k = 1; k <= total; ++k) {
      p = p * f;
      if (p.is_zero()) break;
      inv_fact /= k;
      r += p * inv_fact;
    }
    return r;
  }

  // The coefficient-wise Laplace sum over one exponential variable:
  // sum_k k! * [var^k] f, the variable disappears from the result.
  ExactSeries laplace_eliminate(const std::string& var) const {
    const int vi = var_index(var);
    const int kmax = max_exponent(vi);
    ExactSeries r = coeff_of(vi, 0);
    for (int k = 1; k <= kmax; ++k) {
      ExactSeries s = coeff_of(vi, k);
      if (s.is_zero()) continue;
      r += s * Rational(factorial(k));
    }
    return r;
  }

  // Set a variable to 1 by summing its exponents away.
  ExactSeries eliminate_set_one(const std::string& var) const {
    const int vi = var_index(var);
    const int kmax = max_exponent(vi);
    ExactSeries r = coeff_of(vi, 0);
    for (int k = 1; k <= kmax; ++k) r += coeff_of(vi, k);
    return r;
  }

  ExactSeries derivative(const std::string& var) const {
    const int vi = var_index(var);
    ExactSeries r(vars_, trunc_);
    for (const auto& [e, c] : terms_) {
      if (e[vi] == 0) continue;
      Exponents ne = e;
      ne[vi] -= 1;
      r.add_term(std::move(ne), c * Rational(e[vi]));
    }
    return r;
  }

  // Univariate helpers.
  static ExactSeries from_poly(const Poly& p, const std::string& var, int trunc) {
    ExactSeries s({var}, {trunc});
    for (int k = 0; k <= std::min(p.degree(), trunc); ++k)
      s.add_term({k}, p.coeff(k));
    return s;
  }
  Poly to_poly() const {
    if (vars_.size() != 1)
      throw std::invalid_argument("to_poly requires a univariate series");
    Poly p;
    for (const auto& [e, c] : terms_) p.set_coeff(e[0], c);
    return p;
  }

 private:
  void require_same_space(const ExactSeries& o) const {
    if (vars_ != o.vars_ || trunc_ != o.trunc_)
      throw std::invalid_argument("series operate in different variable spaces");
  }

  std::vector<std::string> vars_;
  std::vector<int> trunc_;
  TermMap terms_;
};

// Sum_{n <= order} Cat(n) z^n.
inline ExactSeries catalan_series(int order) {
  if (order < 0) throw std::invalid_argument("catalan_series: negative order");
  ExactSeries s({"z"}, {order});
  for (int n = 0; n <= order; ++n) s.add_term({n}, Rational(catalan_number(n)));
  return s;
}

inline Poly catalan_series_poly(int order) {
  Poly p;
  for (int n = 0; n <= order; ++n) p.set_coeff(n, Rational(catalan_number(n)));
  return p;
}

// x(z) = z*C(z)^2 = C(z) - 1 as a truncated series.
inline Poly catalan_x_series(int order) {
  Poly p = catalan_series_poly(order);
  p.set_coeff(0, 0);
  return p;
}

// f(g) truncated to `order`; f univariate, g arbitrary with zero constant term.
inline ExactSeries series_compose(const ExactSeries& f, const ExactSeries& g, int order) {
  if (f.vars().size() != 1)
    throw std::invalid_argument("series_compose expects univariate outer series");
  std::vector<int> t(g.vars().size(), order);
  return ExactSeries::compose(f, f.vars()[0], g.truncated(std::move(t)));
}

inline ExactSeries series_reciprocal(const ExactSeries& f, int order) {
  std::vector<int> t(f.vars().size(), order);
  return ExactSeries::reciprocal(f.truncated(std::move(t)));
}

}  // namespace treewalks
