#pragma once

#include "treewalks/even_poly.hpp"
#include "treewalks/poly.hpp"
#include "treewalks/rational.hpp"

#include <stdexcept>
#include <vector>

namespace treewalks {

// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
inline std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  if (p.degree() >= 1) chain.push_back(p.derivative());
  while (chain.size() >= 2 && !chain.back().is_zero() && chain.back().degree() >= 0) {
    Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

inline int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline int sign_variations_at(const std::vector<Poly>& chain, const Rational& x) {
  int v = 0, prev = 0;
  for (const auto& p : chain) {
    const int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Number of distinct real roots of p in the open interval (lo, hi).
// Roots at the endpoints are divided out first so the standard count
// V(lo) - V(hi) over (lo, hi] applies cleanly.
inline int count_roots_open(Poly p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("count_roots_open: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("count_roots_open: empty interval");
  // square-free part
  if (p.degree() >= 1) {
    Poly g = Poly::gcd(p, p.derivative());
    if (g.degree() >= 1) p = Poly::divexact(p, g);
  }
  for (const Rational& endpoint : {lo, hi}) {
    while (!p.is_zero() && p.degree() >= 1 && p.eval(endpoint) == 0)
      p = Poly::divexact(p, Poly({-endpoint, Rational(1)}));
  }
  if (p.degree() < 1) return 0;
  const auto chain = sturm_chain(p);
  return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

// Square-free decomposition by Yun's algorithm: p = lc * prod a_i^i.
inline std::vector<Poly> squarefree_decomposition(const Poly& p) {
  std::vector<Poly> parts;  // parts[i-1] = a_i (monic)
  if (p.degree() < 1) return parts;
  Poly f = p * (Rational(1) / p.leading());
  Poly g = Poly::gcd(f, f.derivative());
  if (g.degree() < 1) {
    parts.push_back(f);
    return parts;
  }
  Poly w = Poly::divexact(f, g);
  Poly y = Poly::divexact(f.derivative(), g);
  Poly z = y - w.derivative();
  while (!z.is_zero()) {
    Poly a = Poly::gcd(w, z);
    parts.push_back(a);
    w = Poly::divexact(w, a);
    y = Poly::divexact(z, a);
    z = y - w.derivative();
  }
  parts.push_back(w);
  return parts;
}

// Product of the odd-multiplicity factors; sign changes of p happen
// exactly at its roots.
inline Poly odd_multiplicity_part(const Poly& p) {
  Poly r = Poly::constant(1);
  const auto parts = squarefree_decomposition(p);
  for (size_t i = 0; i < parts.size(); ++i)
    if (i % 2 == 0) r *= parts[i];
  return r;
}

// p >= 0 on the open interval (lo, hi): no odd-multiplicity root inside
// plus a positive sample value.
inline bool poly_nonnegative_open(const Poly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) return true;
  if (p.degree() == 0) return p.coeff(0) > 0;
  const Poly odd = odd_multiplicity_part(p);
  if (odd.degree() >= 1 && count_roots_open(odd, lo, hi) > 0) return false;
  // sample at a point that is not a root
  const int tries = p.degree() + 2;
  for (int k = 1; k <= tries; ++k) {
    const Rational x = lo + (hi - lo) * Rational(k, tries + 1);
    const Rational v = p.eval(x);
    if (v != 0) return v > 0;
  }
  return true;  // p vanishes at more points than its degree only if p == 0
}

// True iff p(z) >= 0 for all z in (lo, hi). Decided exactly: substitute
// w = z^2, count sign changes of the odd-multiplicity part by Sturm
// sequences on the image interval, and check the sign at a sample point.
inline bool sturm_sign_constant(const EvenPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) return true;
  if (!(lo < hi)) throw std::invalid_argument("sturm_sign_constant: empty interval");
  const Poly q = p.to_poly_in_w();
  const Rational lo2 = lo * lo, hi2 = hi * hi;
  if (lo < 0 && hi > 0) {
    // image of (lo,hi) under z^2 is [0, max(lo^2,hi^2))
    if (q.eval(0) < 0) return false;
    const Rational wmax = lo2 > hi2 ? lo2 : hi2;
    return poly_nonnegative_open(q, Rational(0), wmax);
  }
  // interval on one side of zero: image is an open interval (m^2, M^2)
  const Rational a = lo2 < hi2 ? lo2 : hi2;
  const Rational b = lo2 < hi2 ? hi2 : lo2;
  return poly_nonnegative_open(q, a, b);
}

}  // namespace treewalks
