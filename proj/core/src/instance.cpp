#include "advmatch/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "advmatch/error.hpp"

namespace advmatch {

bool costs_equal(double a, double b, bool exact) {
  if (exact) return a == b;
  return std::abs(a - b) <= kCostTolerance;
}

bool all_integral(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v) && std::nearbyint(v) == v; });
}

std::int64_t Instance::bound() const {
  return static_cast<std::int64_t>(servers_.back()) + 1;
}

Instance validate_instance(RawInstance raw) {
  if (raw.servers.size() != raw.requests.size()) {
    throw InvalidArgument("size mismatch: " + std::to_string(raw.servers.size()) +
                          " servers vs " + std::to_string(raw.requests.size()) + " requests");
  }
  if (raw.servers.empty()) throw InvalidArgument("instance must contain at least one server");

  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(raw.servers.begin(), raw.servers.end(), finite) ||
      !std::all_of(raw.requests.begin(), raw.requests.end(), finite)) {
    throw InvalidArgument("non-finite coordinate");
  }

  Instance out;
  out.servers_ = std::move(raw.servers);
  out.requests_ = std::move(raw.requests);
  std::sort(out.servers_.begin(), out.servers_.end());
  out.integer_mode_ =
      all_integral(out.servers_) && all_integral(out.requests_) && out.servers_.front() == 1.0;
  return out;
}

std::vector<PoolServer> server_pool(const Instance& instance) {
  std::vector<PoolServer> pool;
  pool.reserve(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) pool.push_back({i, instance.server(i)});
  return pool;
}

double total_cost(const Instance& instance, std::span<const std::size_t> assignment) {
  const std::size_t n = instance.size();
  if (assignment.size() != n) throw InvalidArgument("assignment size differs from instance size");
  std::vector<bool> used(n, false);
  for (std::size_t s : assignment) {
    if (s >= n || used[s]) throw InvalidArgument("assignment is not a bijection");
    used[s] = true;
  }

  if (instance.integer_mode()) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = static_cast<std::int64_t>(instance.request(i));
      const auto s = static_cast<std::int64_t>(instance.server(assignment[i]));
      sum += r > s ? r - s : s - r;
    }
    return static_cast<double>(sum);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += std::abs(instance.request(i) - instance.server(assignment[i]));
  }
  return sum;
}

Matching make_matching(const Instance& instance, std::vector<std::size_t> assignment) {
  Matching m;
  m.cost = total_cost(instance, assignment);
  m.assignment = std::move(assignment);
  return m;
}

}  // namespace advmatch
