#pragma once

#include <cstddef>
#include <vector>

#include "descpoly/polynomial.hpp"

namespace descpoly {

/// sum_n B_{n,k}(y) z^n as numerator(z, y) / denominator(z, y). Entry t of
/// each list is the coefficient of z^t, a polynomial in y.
struct RationalBivariateGF {
  std::size_t k = 0;
  std::vector<IntPoly> numerator;    // length k + 1
  std::vector<IntPoly> denominator;  // length k + 2
};

/// numerator   = 1 + sum_{t=1}^{k} (A_t - sum_{i=1}^{t} C(k+1,i) (y-1)^{i-1} A_{t-i}) z^t
/// denominator = 1 - sum_{i=1}^{k+1} C(k+1,i) (y-1)^{i-1} z^i
RationalBivariateGF build_gf(std::size_t k);

/// [B_{0,k}, ..., B_{upto,k}] from the recurrence the denominator induces.
std::vector<IntPoly> series_coefficients(const RationalBivariateGF& gf, std::size_t upto);

/// z^0 .. z^{len-1} coefficients of denominator * series - numerator.
std::vector<IntPoly> convolution_residual(const RationalBivariateGF& gf,
                                          const std::vector<IntPoly>& series);

}  // namespace descpoly
