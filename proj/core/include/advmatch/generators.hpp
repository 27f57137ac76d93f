#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "advmatch/instance.hpp"

namespace advmatch {

/// n servers and n requests drawn independently and uniformly from [lo, hi].
/// In integer mode positions are integers in [lo, hi] and everything is then
/// shifted so that the leftmost server sits at 1. Throws InvalidArgument for
/// n == 0 or an empty range.
Instance gen_uniform(std::size_t n, double lo, double hi, std::uint64_t seed, bool integer_mode);

/// Largest n accepted by gen_family (2^(n-1) members).
inline constexpr std::size_t kMaxFamilySize = 20;

/// A member of the lower-bound family I_n over servers 1..n: the first n-k
/// requests of rho_0 = (n - 1/2, n - 1/4, ..., n - 2^-n) followed by a member
/// of I_k. branch_depth == 0 marks rho_0 itself.
struct FamilyMember {
  std::vector<double> requests;
  std::size_t branch_depth = 0;
};

std::vector<double> family_rho0(std::size_t n);

/// All 2^(n-1) members of I_n: rho_0 first, then branches by increasing k.
std::vector<FamilyMember> gen_family(std::size_t n);

/// Servers 1..n with the member's requests.
Instance family_instance(std::size_t n, const FamilyMember& member);

struct FamilyCheck {
  std::size_t member = 0;
  std::size_t branch_depth = 0;
  std::size_t expected_request = 0;  // 0-based index that must own s_n
  std::size_t optima = 0;
  std::size_t violating_optima = 0;
  bool passed = false;
};

/// For every member with branch depth k, enumerates all optimal matchings and
/// checks that each pairs s_n with request n-k (request n for rho_0).
std::vector<FamilyCheck> verify_family(std::size_t n);

/// Two distinct members share their common rho_0 prefix and first differ
/// where one leaves rho_0; returns false if some pair breaks this.
bool family_prefix_structure_holds(std::size_t n, std::span<const FamilyMember> members);

}  // namespace advmatch
