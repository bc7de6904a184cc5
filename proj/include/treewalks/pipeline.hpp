#pragma once

#include "treewalks/catalan_form.hpp"
#include "treewalks/catalan_fraction.hpp"
#include "treewalks/kernel_gf.hpp"
#include "treewalks/superreduced.hpp"

#include <stdexcept>
#include <vector>

namespace treewalks::gf {

// Builds and caches the whole exact pipeline up to a fixed excess:
// superreduced fixpoint -> kernel polynomials -> normal forms -> walk
// generating functions in the Catalan algebra.
class Pipeline {
 public:
  explicit Pipeline(int xi_max) : xi_max_(xi_max), sgf_(superreduced_gf(xi_max)) {
    kernels_.reserve(xi_max + 1);
    forms_.reserve(xi_max + 1);
    fractions_.reserve(xi_max + 1);
    for (int xi = 0; xi <= xi_max; ++xi) {
      kernels_.push_back(kernel_gf(sgf_, xi));
      forms_.push_back(to_catalan_form(kernels_.back()));
      fractions_.push_back(catalan_form_fraction(forms_.back()));
    }
  }

  int xi_max() const { return xi_max_; }
  const SuperreducedGF& superreduced() const { return sgf_; }
  const KernelGF& kernel(int xi) const { return kernels_.at(xi); }
  const CatalanForm& form(int xi) const { return forms_.at(xi); }
  const CatalanFraction& walk_gf(int xi) const { return fractions_.at(xi); }
  const std::vector<CatalanFraction>& walk_gfs() const { return fractions_; }

  // [z^l] W_xi as an exact rational.
  Rational walk_coeff(int xi, int l) const {
    return walk_series(xi, l).coeff(l);
  }

  // (l - xi + 1)! [z^l] W_xi: the labeled walk count w_{m, 2l}.
  Int labeled_walk_count(int m, int two_l) const {
    if (two_l % 2 != 0) return 0;
    const int l = two_l / 2;
    const int xi = l - m + 1;
    if (m < 1 || xi < 0) return 0;
    if (xi > xi_max_) throw std::invalid_argument("labeled_walk_count: excess out of range");
    const Rational n = walk_coeff(xi, l) * Rational(factorial(m));
    if (!is_integer(n)) throw std::logic_error("labeled walk count is not an integer");
    return numerator(n);
  }

  Poly walk_series(int xi, int order) const {
    if (xi == 0) return catalan_series_poly(order);
    return fractions_.at(xi).z_series(order);
  }

 private:
  int xi_max_;
  SuperreducedGF sgf_;
  std::vector<KernelGF> kernels_;
  std::vector<CatalanForm> forms_;
  std::vector<CatalanFraction> fractions_;
};

}  // namespace treewalks::gf
