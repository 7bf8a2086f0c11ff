#include "descpoly/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "descpoly/error.hpp"
#include "descpoly/eulerian.hpp"

namespace descpoly {

namespace {

bool is_rearrangement_of_1_to_n(const std::vector<int>& v) {
  std::vector<bool> seen(v.size() + 1, false);
  for (int x : v) {
    if (x < 1 || static_cast<std::size_t>(x) > v.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

std::string join(std::span<const int> v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (!is_rearrangement_of_1_to_n(values_))
    fail(ErrorCode::InvalidArgument, "not a permutation of 1..n: " + join(values_));
}

Permutation::Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string field(text.substr(pos, end - pos));
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(field, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != field.size())
        fail(ErrorCode::InvalidArgument, "cannot parse permutation entry '" + field + "'");
      values.push_back(value);
      pos = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9')
        fail(ErrorCode::InvalidArgument, "cannot parse permutation '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

std::string Permutation::to_string() const {
  if (values_.size() < 10) {
    std::string s;
    for (int v : values_) s.push_back(static_cast<char>('0' + v));
    return s;
  }
  return join(values_);
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

DescentSetSpec::DescentSetSpec(std::size_t n, std::vector<int> positions)
    : n_(n), positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
  for (int i : positions_)
    if (i < 1 || static_cast<std::size_t>(i) + 1 > n_)
      fail(ErrorCode::InvalidArgument,
           "descent position " + std::to_string(i) + " outside [1, " + std::to_string(n_) + "-1]");
}

bool DescentSetSpec::contains(int i) const {
  return std::binary_search(positions_.begin(), positions_.end(), i);
}

std::vector<int> descent_set(std::span<const int> word) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) out.push_back(static_cast<int>(i + 1));
  return out;
}

std::vector<int> descent_set(const Permutation& p) { return descent_set(p.values()); }

std::size_t des(const Permutation& p) {
  std::size_t count = 0;
  auto v = p.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] > v[i + 1]) ++count;
  return count;
}

int maxdrop(const Permutation& p) {
  int best = 0;
  auto v = p.values();
  for (std::size_t i = 0; i < v.size(); ++i) best = std::max(best, static_cast<int>(i + 1) - v[i]);
  return best;
}

std::vector<int> bsort_pass(std::span<const int> word) {
  std::vector<int> out(word.begin(), word.end());
  auto end = out.end();
  while (end != out.begin()) {
    auto top = std::max_element(out.begin(), end);
    std::rotate(top, top + 1, end);
    end = top;
  }
  return out;
}

Permutation bsort_pass(const Permutation& p) { return Permutation(bsort_pass(p.values())); }

std::vector<int> ssort(std::span<const int> word) {
  if (word.empty()) return {};
  auto top = std::max_element(word.begin(), word.end());
  auto split = static_cast<std::size_t>(top - word.begin());
  std::vector<int> out = ssort(word.first(split));
  std::vector<int> right = ssort(word.subspan(split + 1));
  out.insert(out.end(), right.begin(), right.end());
  out.push_back(*top);
  return out;
}

Permutation ssort(const Permutation& p) { return Permutation(ssort(p.values())); }

std::size_t bsc(const Permutation& p) {
  std::vector<int> cur(p.values().begin(), p.values().end());
  for (std::size_t passes = 0; passes <= p.size(); ++passes) {
    if (std::is_sorted(cur.begin(), cur.end())) return passes;
    cur = bsort_pass(cur);
  }
  throw std::logic_error("bsc: bubble sort did not terminate within n passes");
}

Permutation standardize(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::InvalidArgument, "standardize: duplicate entries in " + join(word));
  std::vector<int> out;
  out.reserve(word.size());
  for (int x : word)
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
  return Permutation(std::move(out));
}

std::vector<int> unstandardize(const Permutation& p, std::span<const int> ground) {
  if (ground.size() != p.size())
    fail(ErrorCode::InvalidArgument, "unstandardize: ground set has " + std::to_string(ground.size()) +
                                         " elements, permutation has " + std::to_string(p.size()));
  std::vector<int> sorted(ground.begin(), ground.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::InvalidArgument, "unstandardize: ground set has repeated elements");
  std::vector<int> out;
  out.reserve(p.size());
  for (int v : p.values()) out.push_back(sorted[static_cast<std::size_t>(v - 1)]);
  return out;
}

std::size_t tail_length(const DescentSetSpec& spec) {
  std::size_t i = 0;
  while (i + 1 < spec.n() && spec.contains(static_cast<int>(spec.n() - 1 - i))) ++i;
  return i;
}

SplitResult bijection_f(const Permutation& p, const DescentSetSpec& spec) {
  if (spec.n() != p.size())
    fail(ErrorCode::InvalidArgument, "bijection_f: descent-set context n does not match permutation length");
  if (p.empty()) fail(ErrorCode::InvalidArgument, "bijection_f: empty permutation");
  const auto descents = descent_set(p);
  for (int s : spec.positions())
    if (!std::binary_search(descents.begin(), descents.end(), s))
      fail(ErrorCode::InvalidArgument,
           "bijection_f: position " + std::to_string(s) + " is not a descent of " + p.to_string());
  const std::size_t i = tail_length(spec);
  const std::size_t head = p.size() - i - 1;
  auto v = p.values();
  std::vector<int> tail(v.begin() + static_cast<std::ptrdiff_t>(head), v.end());
  std::sort(tail.begin(), tail.end());
  return {standardize(v.first(head)), std::move(tail)};
}

Permutation bijection_g(const Permutation& p, std::span<const int> tail) {
  if (tail.empty()) fail(ErrorCode::InvalidArgument, "bijection_g: tail set must be nonempty");
  const auto total = static_cast<int>(p.size() + tail.size());
  std::vector<int> x(tail.begin(), tail.end());
  std::sort(x.begin(), x.end());
  if (std::adjacent_find(x.begin(), x.end()) != x.end())
    fail(ErrorCode::InvalidArgument, "bijection_g: tail set has repeated elements");
  if (x.front() < 1 || x.back() > total)
    fail(ErrorCode::InvalidArgument,
         "bijection_g: tail set must lie in [1, " + std::to_string(total) + "]");
  std::vector<int> ground;
  ground.reserve(p.size());
  for (int v = 1; v <= total; ++v)
    if (!std::binary_search(x.begin(), x.end(), v)) ground.push_back(v);
  std::vector<int> out = unstandardize(p, ground);
  out.insert(out.end(), x.rbegin(), x.rend());
  return Permutation(std::move(out));
}

// Values must be placed no later than position value + k. Taking the smallest
// unused value is always legal, and it is forced once its deadline arrives, so
// every partial assignment extends and no backtracking into dead ends occurs.

BnkEnumerator::BnkEnumerator(std::size_t n, std::size_t k)
    : n_(n), k_(static_cast<long>(k)), current_(n, 0), used_(n + 1, false) {}

bool BnkEnumerator::advance() {
  auto smallest_unused = [this] {
    int v = 1;
    while (used_[static_cast<std::size_t>(v)]) ++v;
    return v;
  };
  auto fill_from = [&](std::size_t pos) {
    for (std::size_t i = pos; i < n_; ++i) {
      int v = smallest_unused();
      current_[i] = v;
      used_[static_cast<std::size_t>(v)] = true;
    }
  };

  if (!started_) {
    started_ = true;
    fill_from(0);
    return true;
  }
  for (std::size_t i = n_; i-- > 0;) {
    const int old = current_[i];
    used_[static_cast<std::size_t>(old)] = false;
    const long position = static_cast<long>(i) + 1;
    const int lowest = smallest_unused();
    if (lowest + k_ == position) continue;  // forced; no alternative
    for (int v = old + 1; v <= static_cast<int>(n_); ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      current_[i] = v;
      used_[static_cast<std::size_t>(v)] = true;
      fill_from(i + 1);
      return true;
    }
  }
  return false;
}

bool BnkEnumerator::next(std::vector<int>& out) {
  if (done_) return false;
  if (!advance()) {
    done_ = true;
    return false;
  }
  out = current_;
  return true;
}

std::optional<Permutation> BnkEnumerator::next() {
  std::vector<int> values;
  if (!next(values)) return std::nullopt;
  return Permutation(std::move(values));
}

std::vector<Permutation> enumerate_bnk(std::size_t n, std::size_t k) {
  std::vector<Permutation> out;
  BnkEnumerator it(n, k);
  while (auto p = it.next()) out.push_back(std::move(*p));
  return out;
}

Integer bnk_cardinality(std::size_t n, std::size_t k) {
  Integer result = 1;
  const std::size_t eff = std::min(k, n);
  for (std::size_t t = 2; t <= eff; ++t) result *= t;
  for (std::size_t t = eff; t < n; ++t) result *= eff + 1;
  return result;
}

namespace {

Integer count_ank_brute(std::size_t n, std::size_t k, const DescentSetSpec& spec) {
  Integer count = 0;
  BnkEnumerator it(n, k);
  std::vector<int> values;
  while (it.next(values)) {
    bool ok = true;
    for (int s : spec.positions())
      if (values[static_cast<std::size_t>(s - 1)] <= values[static_cast<std::size_t>(s)]) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

Integer count_ank_recurrence(std::size_t n, std::size_t k, const DescentSetSpec& spec) {
  if (n == 0) return 1;
  const std::size_t i = tail_length(spec);
  const std::size_t rest = n - i - 1;
  std::vector<int> kept;
  for (int s : spec.positions())
    if (static_cast<std::size_t>(s) + 1 <= rest) kept.push_back(s);
  // The tail values come from [max(1, n-k), n], which has min(k+1, n) elements.
  const auto window = static_cast<unsigned>(std::min(k + 1, n));
  return binomial(window, static_cast<unsigned>(i + 1)) *
         count_ank_recurrence(rest, k, DescentSetSpec(rest, std::move(kept)));
}

}  // namespace

Integer count_ank(std::size_t n, std::size_t k, const DescentSetSpec& spec, CountStrategy strategy) {
  if (spec.n() != n) fail(ErrorCode::InvalidArgument, "count_ank: descent-set context n mismatch");
  return strategy == CountStrategy::BruteForce ? count_ank_brute(n, k, spec)
                                               : count_ank_recurrence(n, k, spec);
}

}  // namespace descpoly
