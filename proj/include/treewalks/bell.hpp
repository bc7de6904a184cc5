#pragma once

#include "treewalks/rational.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace treewalks {

// Ordinary Bell polynomial B^_{n,k}(b_1, ..., b_{n-k+1}):
// the coefficient of u^n in (b_1 u + b_2 u^2 + ...)^k, computed by the
// recurrence B^_{n,k} = sum_j b_j B^_{n-j,k-1} with B^_{0,0} = 1.
// b is 0-indexed as b[0] = b_1.
inline Rational ordinary_bell(int n, int k, std::span<const Rational> b) {
  if (k < 1 || k > n) throw std::invalid_argument("ordinary_bell requires 1 <= k <= n");
  if (static_cast<int>(b.size()) < n - k + 1)
    throw std::invalid_argument("ordinary_bell: need at least n-k+1 coefficients");
  // dp[m][j] = B^_{m,j}
  std::vector<std::vector<Rational>> dp(n + 1, std::vector<Rational>(k + 1, Rational(0)));
  dp[0][0] = 1;
  for (int j = 1; j <= k; ++j) {
    for (int m = j; m <= n; ++m) {
      Rational s = 0;
      for (int i = 1; i <= m - j + 1 && i <= static_cast<int>(b.size()); ++i)
        s += b[i - 1] * dp[m - i][j - 1];
      dp[m][j] = s;
    }
  }
  return dp[n][k];
}

inline Rational ordinary_bell(int n, int k, const std::vector<Rational>& b) {
  return ordinary_bell(n, k, std::span<const Rational>(b));
}

}  // namespace treewalks
