#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace descpoly {

using Integer = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored lowest degree first. The highest stored entry is
/// always nonzero; the zero polynomial has no entries and no degree.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of the j-th power; zero past the end.
  Integer coeff(std::size_t j) const;

  Integer eval(const Integer& x) const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& scalar);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const Integer& rhs) { return lhs *= rhs; }
  friend IntPoly operator*(const Integer& lhs, IntPoly rhs) { return rhs *= lhs; }
  friend IntPoly operator-(IntPoly p);

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Human-readable form in the given variable, e.g. "1 + 3y + y^2".
  std::string to_string(char var = 'x') const;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly pow(const IntPoly& p, unsigned e);

/// 1 + u + ... + u^k.
IntPoly geometric(std::size_t k);

/// p(u^m). Requires m >= 1.
IntPoly substitute_power(const IntPoly& p, std::size_t m);

/// Every step-th coefficient: result[d] = p[d * step]. Requires step >= 1.
IntPoly multisect(const IntPoly& p, std::size_t step);

/// u^d p(1/u). Requires d >= degree(p).
IntPoly reverse(const IntPoly& p, std::size_t d);

bool is_symmetric(const IntPoly& p);
bool is_unimodal(const IntPoly& p);

/// Polynomial with possibly negative exponents. Zero coefficients are trimmed
/// at both ends after every operation; the zero value has min_exp 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long min_exp, std::vector<Integer> coeffs);
  explicit LaurentPoly(const IntPoly& p);

  static LaurentPoly monomial(const Integer& c, long exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long min_exp() const noexcept { return min_exp_; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  Integer coeff(long exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Integer& scalar);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void normalize();

  long min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

LaurentPoly l_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly l_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly l_scale(const LaurentPoly& p, const Integer& c);

/// Converts to an ordinary polynomial; throws NegativeExponentResidue if any
/// negative power survives.
IntPoly to_poly(const LaurentPoly& lp);

}  // namespace descpoly
