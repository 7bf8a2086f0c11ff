#pragma once

#include <vector>

#include "descpoly/polynomial.hpp"

namespace descpoly {

/// Ordinary binomial coefficient C(n, j) for n >= 0; zero when j > n.
Integer binomial(unsigned n, unsigned j);

/// Falling-factorial binomial a(a-1)...(a-j+1)/j!, valid for negative a.
Integer gen_binomial(long a, unsigned j);

/// Eulerian number <n, k> via the alternating sum
///   sum_{i} C(n+1, i) (k+1-i)^n (-1)^i  over 0 <= i <= min(n, k).
/// Zero for k < 0 or k >= max(n, 1).
Integer eulerian_number(unsigned n, long k);

/// A_n(x), the descent generating polynomial over S_n.
IntPoly eulerian_poly(unsigned n);

/// Rows A_0 .. A_max_n, built once.
class EulerianTable {
 public:
  explicit EulerianTable(unsigned max_n);

  unsigned max_n() const noexcept { return max_n_; }
  const IntPoly& operator[](unsigned n) const { return rows_.at(n); }

 private:
  unsigned max_n_;
  std::vector<IntPoly> rows_;
};

/// sum_{t=0}^{kp} C(kp, t) (x-1)^t A_{kp-t}(x) - x A_kp(x).
/// Zero for kp >= 1; equals 1 - x at kp = 0.
IntPoly euler_identity_residual(unsigned kp);

/// LHS - RHS of
///   sum_j (-1)^j C(a,j) (1-x)^j A_{a+b-j}(x)
///     = x sum_j C(b,j) (1-x)^j A_{a+b-j}(x) + C(b, a+b) (1-x)^{a+b+1},
/// with j running over 0..a+b. Requires a + b >= 0.
IntPoly ab_identity_residual(long a, long b);

}  // namespace descpoly
