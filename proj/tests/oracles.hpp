#pragma once

// Brute-force reference computations used as test oracles. Deliberately
// independent of the library: plain vectors of machine integers, all of S_n
// via std::next_permutation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Coeffs = std::vector<long long>;

inline Word identity(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

// Calls fn(w) for every permutation of 1..n in lexicographic order.
template <class Fn>
void for_each_perm(int n, Fn&& fn) {
  Word w = identity(n);
  do {
    fn(static_cast<const Word&>(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

inline int descents(const Word& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

inline std::vector<int> descent_positions(const Word& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

inline int max_drop(const Word& w) {
  int m = 0;
  for (std::size_t i = 0; i < w.size(); ++i) m = std::max(m, static_cast<int>(i) + 1 - w[i]);
  return m;
}

inline void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Coefficient list of sum over pi in S_n with maxdrop <= k of y^des(pi).
inline Coeffs descent_census(int n, int k) {
  Coeffs c(std::max(n, 1), 0);
  for_each_perm(n, [&](const Word& w) {
    if (max_drop(w) <= k) ++c[descents(w)];
  });
  trim(c);
  return c;
}

inline Coeffs eulerian(int n) { return descent_census(n, std::max(n, 1)); }

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline long long choose(int n, int j) {
  if (j < 0 || j > n) return 0;
  long long r = 1;
  for (int t = 0; t < j; ++t) r = r * (n - t) / (t + 1);
  return r;
}

inline Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Recursive bubble-sort pass straight from bsort(L n R) = bsort(L) R n.
inline Word bsort(const Word& w) {
  if (w.empty()) return w;
  auto it = std::max_element(w.begin(), w.end());
  Word left(w.begin(), it);
  Word out = bsort(left);
  out.insert(out.end(), it + 1, w.end());
  out.push_back(*it);
  return out;
}

// ssort(L n R) = ssort(L) ssort(R) n.
inline Word ssort(const Word& w) {
  if (w.empty()) return w;
  auto it = std::max_element(w.begin(), w.end());
  Word out = ssort(Word(w.begin(), it));
  Word right = ssort(Word(it + 1, w.end()));
  out.insert(out.end(), right.begin(), right.end());
  out.push_back(*it);
  return out;
}

}  // namespace oracle
