#pragma once

#include "treewalks/rational.hpp"

#include <algorithm>

namespace treewalks {

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: r is always an integer binomial prefix
  }
  return r;
}

// Cat(n) = binom(2n, n) / (n + 1)
inline Int catalan_number(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace treewalks
