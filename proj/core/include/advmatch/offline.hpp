#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "advmatch/instance.hpp"

namespace advmatch {

/// Largest n accepted by the exhaustive oracles.
inline constexpr std::size_t kMaxBruteForceSize = 10;

/// Minimum-cost matching by exhaustive search over all n! permutations,
/// memoized on the set of already used servers. Among optimal permutations
/// the lexicographically smallest assignment is returned.
/// Throws InvalidArgument when n > kMaxBruteForceSize.
Matching brute_force_optimal(const Instance& instance);

/// Calls `visit` once for every minimum-cost assignment, in lexicographic
/// order. Returns the number of optima. Throws like brute_force_optimal.
std::size_t enumerate_optimal_matchings(
    const Instance& instance,
    const std::function<void(std::span<const std::size_t>)>& visit);

/// The sorted matching: the i-th smallest request (ties by arrival) goes to
/// server i. Optimal on the line.
Matching monotone_optimal(const Instance& instance);

/// Cost of the sorted matching between two position multisets of equal size.
double sorted_matching_cost(std::span<const double> servers, std::span<const double> requests);

/// Requests matched at-or-left (s <= r) versus strictly right (s > r).
struct LRPartition {
  std::vector<std::size_t> left_set;
  std::vector<std::size_t> right_set;
};

LRPartition classify_lr(const Instance& instance, const Matching& matching);

/// Swaps the servers of requests i and j. Only defined when both requests lie
/// on the same side of both servers; throws InvalidArgument otherwise.
Matching apply_switch(const Instance& instance, const Matching& matching, std::size_t i,
                      std::size_t j);

/// True when swapping the servers of i and j is cost-preserving by the
/// same-side condition.
bool switch_applicable(const Instance& instance, const Matching& matching, std::size_t i,
                       std::size_t j);

/// Looks for a pair (i, j) violating the ordering structure every optimal
/// matching has: r_i <= s(j) < s(i) with r_j > s(j), or r_i >= s(j) > s(i)
/// with r_j < s(j).
std::optional<std::pair<std::size_t, std::size_t>> find_order_violation(
    const Instance& instance, std::span<const std::size_t> assignment);

}  // namespace advmatch
