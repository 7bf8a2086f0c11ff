#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "descpoly/polynomial.hpp"

namespace descpoly {

enum class Route { Enumeration, Recurrence, ClosedForm };

std::string_view route_name(Route route) noexcept;

/// B_{n,k}(y): coefficient of y^r counts permutations in B_{n,k} with r descents.
struct DescentPolyResult {
  std::size_t n = 0;
  std::size_t k = 0;
  IntPoly poly;
  Route route = Route::Recurrence;
};

inline constexpr std::size_t kDefaultEnumerationCap = 10;

/// Descent census over B_{n,k}. Throws CapExceeded when n > cap.
DescentPolyResult bnk_enumeration(std::size_t n, std::size_t k,
                                  std::size_t cap = kDefaultEnumerationCap);

/// B_{m,k} = sum_{i=1}^{k+1} C(k+1, i) (y-1)^{i-1} B_{m-i,k} for m > k,
/// seeded with B_{i,k} = A_i for i <= k.
DescentPolyResult bnk_recurrence(std::size_t n, std::size_t k);

/// All of B_{0,k} .. B_{n,k} from one run of the recurrence.
std::vector<IntPoly> bnk_recurrence_table(std::size_t n, std::size_t k);

/// Every (k+1)-th coefficient of P_k(u) (1 + u + ... + u^k)^{n-k}.
/// For n < k this is A_n.
DescentPolyResult bnk_closedform(std::size_t n, std::size_t k);

/// dispatch on route; enumeration honours cap.
DescentPolyResult bnk(std::size_t n, std::size_t k, Route route,
                      std::size_t cap = kDefaultEnumerationCap);

/// The degree-k^2 polynomial P_k(u).
struct PkPoly {
  std::size_t k = 0;
  IntPoly poly;

  friend bool operator==(const PkPoly&, const PkPoly&) = default;
};

/// P_k(u) = sum_{j=0}^{k} A_{k-j}(u^{k+1}) (u^{k+1}-1)^j sum_{i=j}^{k} C(i,j) u^{-i},
/// evaluated over Laurent polynomials. Throws NegativeExponentResidue if the
/// negative powers fail to cancel.
PkPoly p_poly(std::size_t k);

/// Inserts a zero after alpha_0 and then after every further k+1 coefficients:
/// alpha_i (i >= 1) lands at i + 1 + floor((i-1)/(k+1)). Degree becomes k^2 + k.
IntPoly stretch(const PkPoly& p);

/// PP_k(u) = sum_{t=0}^{k} (u^{k+2}-1)^t A_{k-t}(u^{k+2}) sum_{s=t}^{k} C(s,t) u^{-s}.
IntPoly pp_poly_formula(std::size_t k);

/// P_k from P_1 = 1 + u via P_{j+1} = stretch(P_j) (1 + u + ... + u^{j+1}). k >= 1.
PkPoly p_poly_via_stretch(std::size_t k);

/// One duplicate-insertion step: window sums beta_i = sum_{j=i-k}^{i} alpha_j,
/// then the entries at positions 0, k+1, ..., k(k+1) are written twice.
std::vector<Integer> duplication_step(const std::vector<Integer>& alpha, std::size_t k);

/// P_k from P_1 = 1 + u by repeated duplication_step. k >= 1.
PkPoly p_poly_via_duplication(std::size_t k);

}  // namespace descpoly
