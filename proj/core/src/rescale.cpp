#include <cmath>

#include "advmatch/divide.hpp"
#include "advmatch/error.hpp"

namespace advmatch {

namespace {

constexpr double kMaxScaledCoordinate = 9.0e15;

}  // namespace

RescaledInstance rescale_instance(const Instance& instance) {
  const auto n = static_cast<double>(instance.size());
  const double s1 = instance.server(0);

  RescaledInstance out;
  out.scale = n * n * n;
  out.servers.reserve(instance.size());
  for (double s : instance.servers()) out.servers.push_back(out.scale * (s - s1) + 1.0);
  out.requests.reserve(instance.size());
  for (double r : instance.requests()) {
    const double scaled = std::floor(out.scale * (r - s1)) + 1.0;
    if (std::abs(scaled) > kMaxScaledCoordinate) throw InvalidArgument("rescaled request out of range");
    out.requests.push_back(static_cast<std::int64_t>(scaled));
  }
  if (out.servers.back() > kMaxScaledCoordinate) throw InvalidArgument("rescaled server out of range");
  out.bound = static_cast<std::int64_t>(std::ceil(out.servers.back())) + 1;
  return out;
}

RescaleRun rescale_run(const Instance& instance, std::size_t k, SubroutineKind kind) {
  RescaleRun run;
  run.scaled_instance = rescale_instance(instance);
  const auto& scaled = run.scaled_instance;
  run.scaled = divide_run(scaled.servers, scaled.requests, scaled.bound, k, kind);
  run.scaled_cost = run.scaled.matching.cost;
  // Scaling is monotone, so server indices carry over unchanged.
  run.matching = make_matching(instance, run.scaled.matching.assignment);
  return run;
}

}  // namespace advmatch
