#include "advmatch/offline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "advmatch/error.hpp"

namespace advmatch {
namespace {

// best[mask] is the cheapest way to serve requests popcount(mask)..n-1 with
// the servers outside `mask`.
struct SubsetTable {
  std::vector<double> best;
  std::vector<double> dist;  // dist[r * n + s]
  std::size_t n = 0;
  bool exact = false;

  double distance(std::size_t r, std::size_t s) const { return dist[r * n + s]; }

  // a reaches the optimum `target` (exactly or within tolerance).
  bool attains(double a, double target) const {
    return exact ? a == target : a <= target + kCostTolerance;
  }
};

SubsetTable build_table(const Instance& instance) {
  const std::size_t n = instance.size();
  if (n > kMaxBruteForceSize) {
    throw InvalidArgument("exhaustive search limited to n <= " +
                          std::to_string(kMaxBruteForceSize) + ", got " + std::to_string(n));
  }
  SubsetTable t;
  t.n = n;
  t.exact = instance.integer_mode();
  t.dist.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      t.dist[r * n + s] = std::abs(instance.request(r) - instance.server(s));
    }
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  t.best.assign(std::size_t{full} + 1, std::numeric_limits<double>::infinity());
  t.best[full] = 0.0;
  for (std::uint32_t mask = full; mask-- > 0;) {
    const auto r = static_cast<std::size_t>(std::popcount(mask));
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < n; ++s) {
      if (mask & (std::uint32_t{1} << s)) continue;
      best = std::min(best, t.distance(r, s) + t.best[mask | (std::uint32_t{1} << s)]);
    }
    t.best[mask] = best;
  }
  return t;
}

void enumerate(const SubsetTable& t, std::uint32_t mask, double spent, double target,
               std::vector<std::size_t>& prefix, std::size_t& count,
               const std::function<void(std::span<const std::size_t>)>& visit) {
  const std::size_t r = prefix.size();
  if (r == t.n) {
    ++count;
    visit(prefix);
    return;
  }
  for (std::size_t s = 0; s < t.n; ++s) {
    const std::uint32_t bit = std::uint32_t{1} << s;
    if (mask & bit) continue;
    const double next = spent + t.distance(r, s);
    if (!t.attains(next + t.best[mask | bit], target)) continue;
    prefix.push_back(s);
    enumerate(t, mask | bit, next, target, prefix, count, visit);
    prefix.pop_back();
  }
}

}  // namespace

Matching brute_force_optimal(const Instance& instance) {
  const SubsetTable t = build_table(instance);
  const std::size_t n = t.n;
  std::vector<std::size_t> assignment;
  assignment.reserve(n);
  std::uint32_t mask = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      const std::uint32_t bit = std::uint32_t{1} << s;
      if (mask & bit) continue;
      if (t.attains(t.distance(r, s) + t.best[mask | bit], t.best[mask])) {
        assignment.push_back(s);
        mask |= bit;
        break;
      }
    }
  }
  return make_matching(instance, std::move(assignment));
}

std::size_t enumerate_optimal_matchings(
    const Instance& instance, const std::function<void(std::span<const std::size_t>)>& visit) {
  const SubsetTable t = build_table(instance);
  std::vector<std::size_t> prefix;
  prefix.reserve(t.n);
  std::size_t count = 0;
  enumerate(t, 0, 0.0, t.best[0], prefix, count, visit);
  return count;
}

Matching monotone_optimal(const Instance& instance) {
  const std::size_t n = instance.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return instance.request(a) < instance.request(b);
  });
  std::vector<std::size_t> assignment(n);
  for (std::size_t t = 0; t < n; ++t) assignment[order[t]] = t;
  return make_matching(instance, std::move(assignment));
}

double sorted_matching_cost(std::span<const double> servers, std::span<const double> requests) {
  if (servers.size() != requests.size()) throw InvalidArgument("size mismatch");
  std::vector<double> s(servers.begin(), servers.end());
  std::vector<double> r(requests.begin(), requests.end());
  std::sort(s.begin(), s.end());
  std::sort(r.begin(), r.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) sum += std::abs(s[i] - r[i]);
  return sum;
}

LRPartition classify_lr(const Instance& instance, const Matching& matching) {
  LRPartition out;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (instance.server(matching.assignment[i]) <= instance.request(i)) {
      out.left_set.push_back(i);
    } else {
      out.right_set.push_back(i);
    }
  }
  return out;
}

bool switch_applicable(const Instance& instance, const Matching& matching, std::size_t i,
                       std::size_t j) {
  const double ri = instance.request(i);
  const double rj = instance.request(j);
  const double si = instance.server(matching.assignment[i]);
  const double sj = instance.server(matching.assignment[j]);
  return std::max(ri, rj) <= std::min(si, sj) || std::min(ri, rj) >= std::max(si, sj);
}

Matching apply_switch(const Instance& instance, const Matching& matching, std::size_t i,
                      std::size_t j) {
  const std::size_t n = instance.size();
  if (i >= n || j >= n) throw InvalidArgument("request index out of range");
  if (!switch_applicable(instance, matching, i, j)) {
    throw InvalidArgument("switch precondition violated: requests " + std::to_string(i) + " and " +
                          std::to_string(j) + " are not on one side of both servers");
  }
  std::vector<std::size_t> swapped = matching.assignment;
  std::swap(swapped[i], swapped[j]);
  return make_matching(instance, std::move(swapped));
}

std::optional<std::pair<std::size_t, std::size_t>> find_order_violation(
    const Instance& instance, std::span<const std::size_t> assignment) {
  const std::size_t n = instance.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double ri = instance.request(i);
    const double si = instance.server(assignment[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const double rj = instance.request(j);
      const double sj = instance.server(assignment[j]);
      if (ri <= sj && sj < si && rj > sj) return std::pair{i, j};
      if (ri >= sj && sj > si && rj < sj) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

}  // namespace advmatch
