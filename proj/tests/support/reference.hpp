#pragma once

// Test-only oracles. They share no code with the library's algorithms:
// plain std::next_permutation enumeration, subset enumeration, and a
// SplitMix64 instance generator.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "advmatch/instance.hpp"

namespace reftest {

inline constexpr double kTol = 1e-9;

inline bool close(double a, double b) { return std::abs(a - b) <= kTol * std::max(1.0, std::abs(b)); }

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }

 private:
  std::uint64_t state_;
};

/// Integer instance with s_1 = 1, positions drawn from a span of `width`.
inline advmatch::Instance random_integer_instance(std::size_t n, std::int64_t width,
                                                  std::uint64_t seed) {
  SplitMix64 rng(seed);
  advmatch::RawInstance raw;
  for (std::size_t i = 0; i < n; ++i) raw.servers.push_back(static_cast<double>(rng.uniform_int(0, width)));
  for (std::size_t i = 0; i < n; ++i) raw.requests.push_back(static_cast<double>(rng.uniform_int(0, width)));
  const double shift = 1.0 - *std::min_element(raw.servers.begin(), raw.servers.end());
  for (auto& s : raw.servers) s += shift;
  for (auto& r : raw.requests) r += shift;
  return advmatch::validate_instance(std::move(raw));
}

inline advmatch::Instance random_real_instance(std::size_t n, double lo, double hi,
                                               std::uint64_t seed) {
  SplitMix64 rng(seed);
  advmatch::RawInstance raw;
  for (std::size_t i = 0; i < n; ++i) raw.servers.push_back(rng.uniform_real(lo, hi));
  for (std::size_t i = 0; i < n; ++i) raw.requests.push_back(rng.uniform_real(lo, hi));
  return advmatch::validate_instance(std::move(raw));
}

inline double assignment_cost(std::span<const double> servers, std::span<const double> requests,
                              std::span<const std::size_t> a) {
  long double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(static_cast<long double>(requests[i]) - servers[a[i]]);
  return static_cast<double>(sum);
}

struct Exhaustive {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<std::vector<std::size_t>> optima;
};

/// Every permutation, literally. Optima are those within kTol of the minimum
/// (exact equality when `exact`).
inline Exhaustive enumerate_all(std::span<const double> servers, std::span<const double> requests,
                                bool exact) {
  const std::size_t n = servers.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<double, std::vector<std::size_t>>> all;
  double best = std::numeric_limits<double>::infinity();
  do {
    const double c = assignment_cost(servers, requests, perm);
    best = std::min(best, c);
    all.emplace_back(c, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  Exhaustive out;
  out.cost = best;
  for (auto& [c, p] : all) {
    if (exact ? c == best : close(c, best)) out.optima.push_back(std::move(p));
  }
  return out;
}

inline Exhaustive enumerate_all(const advmatch::Instance& inst) {
  return enumerate_all(inst.servers(), inst.requests(), inst.integer_mode());
}

/// Minimum cost of matching `requests` into any |requests|-subset of `pool`,
/// by enumerating subsets and all their permutations.
inline double best_subset_cost(std::span<const double> pool, std::span<const double> requests) {
  const std::size_t m = pool.size();
  const std::size_t t = requests.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != t) continue;
    std::vector<double> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) chosen.push_back(pool[i]);
    }
    best = std::min(best, enumerate_all(chosen, requests, false).cost);
  }
  return best;
}

}  // namespace reftest
