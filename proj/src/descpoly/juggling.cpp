#include "descpoly/juggling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "descpoly/error.hpp"

namespace descpoly {

JugglingSequence::JugglingSequence(std::vector<std::int64_t> throws) : throws_(std::move(throws)) {
  if (throws_.empty()) fail(ErrorCode::InvalidArgument, "juggling sequence must have period >= 1");
  for (auto t : throws_)
    if (t < 0) fail(ErrorCode::InvalidArgument, "throw heights must be nonnegative");
}

JugglingSequence::JugglingSequence(std::initializer_list<std::int64_t> throws)
    : JugglingSequence(std::vector<std::int64_t>(throws)) {}

std::string JugglingSequence::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < throws_.size(); ++i) os << (i ? "," : "") << throws_[i];
  os << ')';
  return os.str();
}

JugglingSequence phi(const Permutation& p, std::size_t k) {
  const int drop = maxdrop(p);
  if (static_cast<std::size_t>(drop) > k)
    fail(ErrorCode::DropExceedsK,
         "maxdrop " + std::to_string(drop) + " of " + p.to_string() + " exceeds k = " + std::to_string(k));
  std::vector<std::int64_t> throws;
  throws.reserve(p.size());
  for (std::size_t i = 1; i <= p.size(); ++i)
    throws.push_back(static_cast<std::int64_t>(k) - static_cast<std::int64_t>(i) + p(i));
  return JugglingSequence(std::move(throws));
}

bool is_valid(const JugglingSequence& t) {
  const auto n = static_cast<std::int64_t>(t.period());
  std::vector<bool> seen(t.period(), false);
  for (std::int64_t i = 1; i <= n; ++i) {
    auto r = static_cast<std::size_t>((t.throws()[static_cast<std::size_t>(i - 1)] + i) % n);
    if (seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

std::int64_t ball_count(const JugglingSequence& t) {
  if (!is_valid(t)) fail(ErrorCode::InvalidSequence, "not a juggling sequence: " + t.to_string());
  const std::int64_t sum = std::accumulate(t.throws().begin(), t.throws().end(), std::int64_t{0});
  return sum / static_cast<std::int64_t>(t.period());
}

namespace {

// Operates on a raw block of throws; `length` plays the role of n.
void transform_block(std::span<const std::int64_t> block, std::vector<std::int64_t>& out) {
  if (block.empty()) return;
  std::size_t j = 0;
  bool tie = false;
  for (std::size_t i = 1; i < block.size(); ++i) {
    const std::int64_t here = block[i] + static_cast<std::int64_t>(i);
    const std::int64_t best = block[j] + static_cast<std::int64_t>(j);
    if (here > best) {
      j = i;
      tie = false;
    } else if (here == best) {
      tie = true;
    }
  }
  if (tie) fail(ErrorCode::InvalidArgument, "fk_transform: latest landing time is not unique");
  const auto length = static_cast<std::int64_t>(block.size());
  const std::int64_t s = block[j] + static_cast<std::int64_t>(j + 1) - (length + 1);
  if (s < 0) fail(ErrorCode::InvalidArgument, "fk_transform: transformed throw would be negative");
  transform_block(block.first(j), out);
  out.insert(out.end(), block.begin() + static_cast<std::ptrdiff_t>(j + 1), block.end());
  out.push_back(s);
}

}  // namespace

JugglingSequence fk_transform(const JugglingSequence& t) {
  const std::int64_t balls = ball_count(t);
  if (balls == 0) fail(ErrorCode::InvalidArgument, "fk_transform: sequence juggles no balls");
  const auto n = static_cast<std::int64_t>(t.period());
  std::vector<bool> seen(t.period() + 1, false);
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int64_t value = t.throws()[static_cast<std::size_t>(i - 1)] + i - balls;
    if (value < 1 || value > n || seen[static_cast<std::size_t>(value)])
      fail(ErrorCode::InvalidArgument,
           "fk_transform: " + t.to_string() + " does not arise from a permutation with maxdrop <= balls");
    seen[static_cast<std::size_t>(value)] = true;
  }
  std::vector<std::int64_t> out;
  out.reserve(t.period());
  transform_block(t.throws(), out);
  return JugglingSequence(std::move(out));
}

}  // namespace descpoly
