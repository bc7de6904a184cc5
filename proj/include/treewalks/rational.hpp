#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace treewalks {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Canonical "num/den" form in lowest terms, denominator always explicit.
inline std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "num/den" or a bare integer.
inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  const Int n(s.substr(0, slash));
  const Int d(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rational(n, d);
}

inline Rational rational_pow(const Rational& base, long long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / rational_pow(base, -e);
  }
  Rational r = 1;
  Rational b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace treewalks
