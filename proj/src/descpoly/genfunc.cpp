#include "descpoly/genfunc.hpp"

#include <stdexcept>

#include "descpoly/eulerian.hpp"

namespace descpoly {

RationalBivariateGF build_gf(std::size_t k) {
  const auto kk = static_cast<unsigned>(k);
  const EulerianTable eulerian(kk);
  const IntPoly y_minus_1{-1, 1};

  std::vector<IntPoly> weights(k + 2);  // weights[i] = C(k+1,i) (y-1)^{i-1}
  IntPoly power = IntPoly::constant(1);
  for (std::size_t i = 1; i <= k + 1; ++i) {
    weights[i] = binomial(kk + 1, static_cast<unsigned>(i)) * power;
    power *= y_minus_1;
  }

  RationalBivariateGF gf;
  gf.k = k;
  gf.numerator.push_back(IntPoly::constant(1));
  for (std::size_t t = 1; t <= k; ++t) {
    IntPoly term = eulerian[static_cast<unsigned>(t)];
    for (std::size_t i = 1; i <= t; ++i) term -= weights[i] * eulerian[static_cast<unsigned>(t - i)];
    gf.numerator.push_back(std::move(term));
  }
  gf.denominator.push_back(IntPoly::constant(1));
  for (std::size_t i = 1; i <= k + 1; ++i) gf.denominator.push_back(-weights[i]);
  return gf;
}

std::vector<IntPoly> series_coefficients(const RationalBivariateGF& gf, std::size_t upto) {
  if (gf.denominator.empty() || gf.denominator[0] != IntPoly::constant(1))
    throw std::logic_error("series_coefficients: denominator constant term must be 1");
  std::vector<IntPoly> series;
  series.reserve(upto + 1);
  for (std::size_t n = 0; n <= upto; ++n) {
    IntPoly term = n < gf.numerator.size() ? gf.numerator[n] : IntPoly{};
    for (std::size_t i = 1; i < gf.denominator.size() && i <= n; ++i)
      term -= gf.denominator[i] * series[n - i];
    series.push_back(std::move(term));
  }
  return series;
}

std::vector<IntPoly> convolution_residual(const RationalBivariateGF& gf,
                                          const std::vector<IntPoly>& series) {
  std::vector<IntPoly> residual;
  residual.reserve(series.size());
  for (std::size_t n = 0; n < series.size(); ++n) {
    IntPoly acc;
    for (std::size_t i = 0; i < gf.denominator.size() && i <= n; ++i) acc += gf.denominator[i] * series[n - i];
    if (n < gf.numerator.size()) acc -= gf.numerator[n];
    residual.push_back(std::move(acc));
  }
  return residual;
}

}  // namespace descpoly
