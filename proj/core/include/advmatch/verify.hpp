#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace advmatch {

enum class Suite { lr_optimal, divide_exact, family, props };

Suite parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct VerifyOptions {
  std::size_t n = 6;
  std::uint64_t seed = 1;
  std::size_t instances = 50;
};

struct VerifyReport {
  std::string suite;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Runs one self-check suite on seeded random instances of size n (or on
/// the family I_n for the family suite).
VerifyReport run_suite(Suite suite, const VerifyOptions& options);

}  // namespace advmatch
