#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "descpoly/permutation.hpp"

namespace descpoly {

/// A periodic throw pattern (t_1, ..., t_n), n >= 1, every t_i >= 0.
/// Validity (no two landings coincide) is checked on demand, not at construction.
class JugglingSequence {
 public:
  explicit JugglingSequence(std::vector<std::int64_t> throws);
  JugglingSequence(std::initializer_list<std::int64_t> throws);

  std::size_t period() const noexcept { return throws_.size(); }
  std::span<const std::int64_t> throws() const noexcept { return throws_; }

  friend bool operator==(const JugglingSequence&, const JugglingSequence&) = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> throws_;
};

/// t_i = k - i + pi_i. Throws DropExceedsK if maxdrop(p) > k.
JugglingSequence phi(const Permutation& p, std::size_t k);

/// True iff t_i + i mod n are pairwise distinct.
bool is_valid(const JugglingSequence& t);

/// (sum t_i) / n. Throws InvalidSequence if t is not valid.
std::int64_t ball_count(const JugglingSequence& t);

/// f_k(T) = f_k(L) R s where t_j + j is the latest landing, T = L t_j R and
/// s = t_j + j - (n+1); the recursion on L uses len(L) for n.
///
/// T must be valid, juggle at least one ball, and be the image under phi of a
/// permutation (landing times t_i + i - balls form 1..n); otherwise throws
/// InvalidSequence or InvalidArgument.
JugglingSequence fk_transform(const JugglingSequence& t);

}  // namespace descpoly
