#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descpoly/polynomial.hpp"

namespace descpoly {

/// A permutation pi_1 .. pi_n of 1..n. Positions and values are 1-based in
/// every public accessor. The empty permutation (n = 0) is allowed.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless values is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(std::size_t n);
  /// Accepts "3142" (single digits) or "3,1,4,2".
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  /// pi_i for 1 <= i <= n.
  int operator()(std::size_t i) const { return values_.at(i - 1); }
  std::span<const int> values() const noexcept { return values_; }
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Digits run together when every value is below 10, comma-separated otherwise.
  std::string to_string() const;

 private:
  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// A set S of descent positions inside [1, n-1], kept sorted.
class DescentSetSpec {
 public:
  DescentSetSpec(std::size_t n, std::vector<int> positions);

  std::size_t n() const noexcept { return n_; }
  std::span<const int> positions() const noexcept { return positions_; }
  bool contains(int i) const;

 private:
  std::size_t n_;
  std::vector<int> positions_;
};

std::vector<int> descent_set(std::span<const int> word);
std::vector<int> descent_set(const Permutation& p);
std::size_t des(const Permutation& p);
/// max(i - pi_i), 0 for the empty permutation.
int maxdrop(const Permutation& p);

/// One bubble-sort pass: bsort(L n R) = bsort(L) R n.
std::vector<int> bsort_pass(std::span<const int> word);
Permutation bsort_pass(const Permutation& p);

/// One stack-sort pass: ssort(L n R) = ssort(L) ssort(R) n.
std::vector<int> ssort(std::span<const int> word);
Permutation ssort(const Permutation& p);

/// Number of bubble-sort passes needed to reach the identity.
std::size_t bsc(const Permutation& p);

/// Order-isomorphic relabelling onto 1..len. Throws on duplicate entries.
Permutation standardize(std::span<const int> word);

/// Inverse of standardization onto the ground set (any order; it is sorted).
std::vector<int> unstandardize(const Permutation& p, std::span<const int> ground);

/// t_n(S): largest i with [n-i, n-1] contained in S.
std::size_t tail_length(const DescentSetSpec& spec);

struct SplitResult {
  Permutation sigma;
  std::vector<int> tail;  // the removed values, increasing

  friend bool operator==(const SplitResult&, const SplitResult&) = default;
};

/// f(pi) = (st(pi_1 .. pi_{n-i-1}), {pi_{n-i}, .., pi_n}) with i = t_n(S).
/// Throws InvalidArgument unless S is contained in Des(pi).
SplitResult bijection_f(const Permutation& p, const DescentSetSpec& spec);

/// g(pi, X) = st^{-1}_V(pi) followed by X in decreasing order, V = [m+|X|] \ X.
/// Throws InvalidArgument if X is empty, has repeats, or leaves [1, m+|X|].
Permutation bijection_g(const Permutation& p, std::span<const int> tail);

/// Streams B_{n,k} = {pi in S_n : maxdrop(pi) <= k} in lexicographic order,
/// choosing pi_i >= i - k from the unused values left to right.
class BnkEnumerator {
 public:
  BnkEnumerator(std::size_t n, std::size_t k);

  /// Writes the next permutation's values (1-based) and returns true, or
  /// returns false once exhausted.
  bool next(std::vector<int>& out);
  std::optional<Permutation> next();

 private:
  bool advance();

  std::size_t n_;
  long k_;
  std::vector<int> current_;
  std::vector<bool> used_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Permutation> enumerate_bnk(std::size_t n, std::size_t k);

/// k!(k+1)^{n-k} for n >= k, n! otherwise.
Integer bnk_cardinality(std::size_t n, std::size_t k);

enum class CountStrategy { BruteForce, Recurrence };

/// a_{n,k}(S) = |{pi in B_{n,k} : Des(pi) contains S}|.
Integer count_ank(std::size_t n, std::size_t k, const DescentSetSpec& spec,
                  CountStrategy strategy = CountStrategy::Recurrence);

}  // namespace descpoly
