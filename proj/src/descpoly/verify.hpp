#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace descpoly {

enum class Suite { Identities, Routes, Bijections, Juggling, Structure, All };

std::string_view suite_name(Suite suite) noexcept;
std::optional<Suite> parse_suite(std::string_view name) noexcept;

/// nmax bounds exhaustive permutation work, kmax bounds polynomial-side work.
struct VerifyBounds {
  std::size_t nmax = 8;
  std::size_t kmax = 8;
};

struct CheckResult {
  std::string suite;
  std::string claim;
  bool passed = true;
  std::size_t cases = 0;
  /// First counterexample (inputs and both sides) when the check failed.
  std::string counterexample;
};

/// Runs every claim of the named suite (or all suites) in a fixed order.
std::vector<CheckResult> run_suite(Suite suite, const VerifyBounds& bounds);

}  // namespace descpoly
