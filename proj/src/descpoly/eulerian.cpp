#include "descpoly/eulerian.hpp"

#include <algorithm>
#include <string>

#include "descpoly/error.hpp"

namespace descpoly {

Integer binomial(unsigned n, unsigned j) {
  if (j > n) return 0;
  j = std::min(j, n - j);
  Integer r = 1;
  for (unsigned t = 0; t < j; ++t) r = r * (n - t) / (t + 1);
  return r;
}

Integer gen_binomial(long a, unsigned j) {
  Integer num = 1;
  Integer den = 1;
  for (unsigned t = 0; t < j; ++t) {
    num *= Integer(a) - t;
    den *= t + 1;
  }
  return num / den;
}

Integer eulerian_number(unsigned n, long k) {
  if (k < 0 || k >= static_cast<long>(std::max(n, 1u))) return 0;
  // Terms with k + 1 - i <= 0 are dropped (positive-part power); taken
  // literally over 0..n they would not vanish for i > k + 1.
  Integer sum = 0;
  for (unsigned i = 0; i <= std::min<long>(n, k); ++i) {
    Integer base = Integer(k + 1) - i;
    Integer term = binomial(n + 1, i) * boost::multiprecision::pow(base, n);
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

IntPoly eulerian_poly(unsigned n) {
  std::vector<Integer> coeffs;
  for (long k = 0; k < static_cast<long>(std::max(n, 1u)); ++k) coeffs.push_back(eulerian_number(n, k));
  return IntPoly(std::move(coeffs));
}

EulerianTable::EulerianTable(unsigned max_n) : max_n_(max_n) {
  rows_.reserve(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) rows_.push_back(eulerian_poly(n));
}

IntPoly euler_identity_residual(unsigned kp) {
  const IntPoly x_minus_1{-1, 1};
  IntPoly lhs;
  IntPoly power = IntPoly::constant(1);
  for (unsigned t = 0; t <= kp; ++t) {
    lhs += binomial(kp, t) * (power * eulerian_poly(kp - t));
    power *= x_minus_1;
  }
  return lhs - IntPoly{0, 1} * eulerian_poly(kp);
}

IntPoly ab_identity_residual(long a, long b) {
  if (a + b < 0)
    fail(ErrorCode::InvalidArgument,
         "ab_identity_residual: a + b must be >= 0, got " + std::to_string(a + b));
  const auto total = static_cast<unsigned>(a + b);
  const IntPoly one_minus_x{1, -1};
  const EulerianTable eulerian(total);

  IntPoly lhs;
  IntPoly rhs_sum;
  IntPoly power = IntPoly::constant(1);
  for (unsigned j = 0; j <= total; ++j) {
    IntPoly term = power * eulerian[total - j];
    Integer ca = gen_binomial(a, j);
    if (j % 2 == 1) ca = -ca;
    lhs += ca * term;
    rhs_sum += gen_binomial(b, j) * term;
    power *= one_minus_x;
  }
  // power is now (1-x)^{a+b+1}
  IntPoly rhs = IntPoly{0, 1} * rhs_sum + gen_binomial(b, total) * power;
  return lhs - rhs;
}

}  // namespace descpoly
