#include "descpoly/descent.hpp"

#include <stdexcept>
#include <string>

#include "descpoly/error.hpp"
#include "descpoly/eulerian.hpp"
#include "descpoly/permutation.hpp"

namespace descpoly {

std::string_view route_name(Route route) noexcept {
  switch (route) {
    case Route::Enumeration:
      return "enum";
    case Route::Recurrence:
      return "rec";
    case Route::ClosedForm:
      return "closed";
  }
  return "unknown";
}

DescentPolyResult bnk_enumeration(std::size_t n, std::size_t k, std::size_t cap) {
  if (n > cap)
    fail(ErrorCode::CapExceeded, "enumeration of B_{" + std::to_string(n) + "," + std::to_string(k) +
                                     "} exceeds cap n <= " + std::to_string(cap));
  std::vector<unsigned long long> census(n == 0 ? 1 : n, 0);
  BnkEnumerator it(n, k);
  std::vector<int> values;
  while (it.next(values)) {
    std::size_t d = 0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
      if (values[i] > values[i + 1]) ++d;
    ++census[d];
  }
  std::vector<Integer> coeffs(census.begin(), census.end());
  return {n, k, IntPoly(std::move(coeffs)), Route::Enumeration};
}

std::vector<IntPoly> bnk_recurrence_table(std::size_t n, std::size_t k) {
  std::vector<IntPoly> table;
  table.reserve(n + 1);
  for (std::size_t m = 0; m <= std::min(n, k); ++m) table.push_back(eulerian_poly(static_cast<unsigned>(m)));
  if (n <= k) return table;

  // weights[i-1] = C(k+1, i) (y-1)^{i-1}
  std::vector<IntPoly> weights;
  const IntPoly y_minus_1{-1, 1};
  IntPoly power = IntPoly::constant(1);
  for (std::size_t i = 1; i <= k + 1; ++i) {
    weights.push_back(binomial(static_cast<unsigned>(k + 1), static_cast<unsigned>(i)) * power);
    power *= y_minus_1;
  }
  for (std::size_t m = k + 1; m <= n; ++m) {
    IntPoly next;
    for (std::size_t i = 1; i <= k + 1; ++i) next += weights[i - 1] * table[m - i];
    table.push_back(std::move(next));
  }
  return table;
}

DescentPolyResult bnk_recurrence(std::size_t n, std::size_t k) {
  auto table = bnk_recurrence_table(n, k);
  return {n, k, std::move(table.back()), Route::Recurrence};
}

DescentPolyResult bnk_closedform(std::size_t n, std::size_t k) {
  if (n < k) return {n, k, eulerian_poly(static_cast<unsigned>(n)), Route::ClosedForm};
  IntPoly expansion = p_poly(k).poly * pow(geometric(k), static_cast<unsigned>(n - k));
  return {n, k, multisect(expansion, k + 1), Route::ClosedForm};
}

DescentPolyResult bnk(std::size_t n, std::size_t k, Route route, std::size_t cap) {
  switch (route) {
    case Route::Enumeration:
      return bnk_enumeration(n, k, cap);
    case Route::Recurrence:
      return bnk_recurrence(n, k);
    case Route::ClosedForm:
      return bnk_closedform(n, k);
  }
  throw std::logic_error("bnk: unknown route");
}

namespace {

// sum_{t=0}^{k} (x^m - 1)^t A_{k-t}(x^m) sum_{s=t}^{k} C(s,t) x^{-s}, with x^m = u^modulus.
IntPoly eulerian_multisection_formula(std::size_t k, std::size_t modulus) {
  const IntPoly shifted_minus_1 = IntPoly::monomial(1, modulus) - IntPoly::constant(1);
  LaurentPoly total;
  IntPoly power = IntPoly::constant(1);
  for (std::size_t t = 0; t <= k; ++t) {
    LaurentPoly inner;
    for (std::size_t s = t; s <= k; ++s)
      inner += LaurentPoly::monomial(binomial(static_cast<unsigned>(s), static_cast<unsigned>(t)),
                                     -static_cast<long>(s));
    IntPoly outer = power * substitute_power(eulerian_poly(static_cast<unsigned>(k - t)), modulus);
    total += LaurentPoly(outer) * inner;
    power *= shifted_minus_1;
  }
  return to_poly(total);
}

void check_pk(const IntPoly& p, std::size_t k, const char* who) {
  if (p.degree() != k * k)
    throw std::logic_error(std::string(who) + ": P_" + std::to_string(k) + " has degree " +
                           (p.degree() ? std::to_string(*p.degree()) : std::string("none")) +
                           ", expected " + std::to_string(k * k));
}

}  // namespace

PkPoly p_poly(std::size_t k) {
  IntPoly p = eulerian_multisection_formula(k, k + 1);
  check_pk(p, k, "p_poly");
  return {k, std::move(p)};
}

IntPoly stretch(const PkPoly& p) {
  const auto& alpha = p.poly.coeffs();
  if (alpha.empty()) return {};
  const std::size_t block = p.k + 1;
  const std::size_t top = alpha.size() - 1;
  std::vector<Integer> out(top == 0 ? 1 : top + 1 + (top - 1) / block + 1);
  out[0] = alpha[0];
  for (std::size_t i = 1; i < alpha.size(); ++i) out[i + 1 + (i - 1) / block] = alpha[i];
  return IntPoly(std::move(out));
}

IntPoly pp_poly_formula(std::size_t k) { return eulerian_multisection_formula(k, k + 2); }

PkPoly p_poly_via_stretch(std::size_t k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "p_poly_via_stretch requires k >= 1");
  PkPoly current{1, IntPoly{1, 1}};
  while (current.k < k) {
    IntPoly next = stretch(current) * geometric(current.k + 1);
    current = {current.k + 1, std::move(next)};
  }
  check_pk(current.poly, k, "p_poly_via_stretch");
  return current;
}

std::vector<Integer> duplication_step(const std::vector<Integer>& alpha, std::size_t k) {
  const std::size_t beta_len = k * k + k + 1;
  std::vector<Integer> beta(beta_len);
  for (std::size_t i = 0; i < beta_len; ++i)
    for (std::size_t j = i >= k ? i - k : 0; j <= i; ++j)
      if (j < alpha.size()) beta[i] += alpha[j];

  std::vector<Integer> out;
  out.reserve(beta_len + k + 1);
  for (std::size_t i = 0; i < beta_len; ++i) {
    out.push_back(beta[i]);
    if (i % (k + 1) == 0) out.push_back(beta[i]);
  }
  return out;
}

PkPoly p_poly_via_duplication(std::size_t k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "p_poly_via_duplication requires k >= 1");
  std::vector<Integer> alpha{1, 1};
  for (std::size_t j = 1; j < k; ++j) alpha = duplication_step(alpha, j);
  IntPoly p(std::move(alpha));
  check_pk(p, k, "p_poly_via_duplication");
  return {k, std::move(p)};
}

}  // namespace descpoly
