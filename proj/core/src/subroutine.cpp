#include "advmatch/subroutine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "advmatch/error.hpp"
#include "advmatch/offline.hpp"

namespace advmatch {

std::string_view to_string(SubroutineKind kind) {
  switch (kind) {
    case SubroutineKind::greedy:
      return "greedy";
    case SubroutineKind::permutation:
      return "permutation";
    case SubroutineKind::clairvoyant:
      return "clairvoyant";
  }
  return "unknown";
}

SubroutineKind parse_subroutine_kind(std::string_view name) {
  if (name == "greedy") return SubroutineKind::greedy;
  if (name == "permutation") return SubroutineKind::permutation;
  if (name == "clairvoyant") return SubroutineKind::clairvoyant;
  throw InvalidArgument("unknown subroutine '" + std::string(name) + "'");
}

PoolServer greedy_serve(std::span<const PoolServer> available, double request) {
  if (available.empty()) throw SubroutineError("greedy: empty server pool");
  const PoolServer* best = &available.front();
  double best_dist = std::abs(request - best->position);
  for (const auto& s : available.subspan(1)) {
    const double d = std::abs(request - s.position);
    const bool better = d < best_dist ||
                        (d == best_dist && (s.position < best->position ||
                                            (s.position == best->position && s.index < best->index)));
    if (better) {
      best = &s;
      best_dist = d;
    }
  }
  return *best;
}

namespace {

bool by_position(const PoolServer& a, const PoolServer& b) {
  return a.position < b.position || (a.position == b.position && a.index < b.index);
}

bool contains(std::span<const PoolServer> pool, const PoolServer& s) {
  return std::find(pool.begin(), pool.end(), s) != pool.end();
}

}  // namespace

PermutationSubroutine::PermutationSubroutine(std::span<const PoolServer> pool)
    : pool_(pool.begin(), pool.end()), in_set_(pool.size(), false) {
  std::sort(pool_.begin(), pool_.end(), by_position);
}

PoolServer PermutationSubroutine::serve(std::span<const PoolServer> available, double request) {
  if (available.empty()) throw SubroutineError("permutation: empty server pool");
  seen_.push_back(request);
  std::vector<double> requests = seen_;
  std::sort(requests.begin(), requests.end());

  std::vector<double> positions;
  const bool exact = all_integral(requests) && std::all_of(pool_.begin(), pool_.end(), [](const auto& s) {
                       return std::nearbyint(s.position) == s.position;
                     });

  // Grow the previous optimal server set by the single server that keeps it
  // optimal; among several, the smallest index.
  std::size_t chosen = pool_.size();
  double chosen_cost = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < pool_.size(); ++c) {
    if (in_set_[c]) continue;
    positions.clear();
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      if (in_set_[i] || i == c) positions.push_back(pool_[i].position);
    }
    const double cost = sorted_matching_cost(positions, requests);
    const bool strictly_better = exact ? cost < chosen_cost : cost < chosen_cost - kCostTolerance;
    const bool tie = !strictly_better && costs_equal(cost, chosen_cost, exact);
    if (strictly_better || (tie && pool_[c].index < pool_[chosen].index)) {
      chosen = c;
      chosen_cost = cost;
    }
  }
  if (chosen == pool_.size()) throw SubroutineError("permutation: more requests than servers");
  in_set_[chosen] = true;
  if (!contains(available, pool_[chosen])) {
    throw SubroutineError("permutation: server " + std::to_string(pool_[chosen].index) +
                          " already taken outside the subroutine");
  }
  return pool_[chosen];
}

ClairvoyantSubroutine::ClairvoyantSubroutine(std::span<const PoolServer> pool,
                                             std::span<const double> sealed_requests)
    : sealed_(sealed_requests.begin(), sealed_requests.end()) {
  if (pool.size() != sealed_.size()) {
    throw InvalidArgument("clairvoyant: " + std::to_string(sealed_.size()) + " sealed requests for " +
                          std::to_string(pool.size()) + " servers");
  }
  std::vector<PoolServer> sorted(pool.begin(), pool.end());
  std::sort(sorted.begin(), sorted.end(), by_position);
  std::vector<std::size_t> order(sealed_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sealed_[a] < sealed_[b]; });
  plan_.resize(sealed_.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) plan_[order[rank]] = sorted[rank];
}

PoolServer ClairvoyantSubroutine::serve(std::span<const PoolServer> available, double request) {
  if (next_ >= sealed_.size() || sealed_[next_] != request) {
    throw SubroutineError("clairvoyant: request not in sealed sequence");
  }
  const PoolServer s = plan_[next_++];
  if (!contains(available, s)) throw SubroutineError("clairvoyant: planned server unavailable");
  return s;
}

std::unique_ptr<Subroutine> make_subroutine(SubroutineKind kind, std::span<const PoolServer> pool,
                                            std::span<const double> sealed_requests) {
  switch (kind) {
    case SubroutineKind::greedy:
      return std::make_unique<GreedySubroutine>();
    case SubroutineKind::permutation:
      return std::make_unique<PermutationSubroutine>(pool);
    case SubroutineKind::clairvoyant:
      return std::make_unique<ClairvoyantSubroutine>(pool, sealed_requests);
  }
  throw InvalidArgument("unknown subroutine kind");
}

Matching run_online(const Instance& instance, Subroutine& algorithm) {
  std::vector<PoolServer> available = server_pool(instance);
  std::vector<std::size_t> assignment;
  assignment.reserve(instance.size());
  for (double r : instance.requests()) {
    const PoolServer s = algorithm.serve(available, r);
    const auto it = std::find(available.begin(), available.end(), s);
    if (it == available.end()) {
      throw SubroutineError(std::string(algorithm.name()) + " returned an unavailable server");
    }
    available.erase(it);
    assignment.push_back(s.index);
  }
  return make_matching(instance, std::move(assignment));
}

Matching run_online(const Instance& instance, SubroutineKind kind) {
  const auto pool = server_pool(instance);
  auto algorithm = make_subroutine(kind, pool, instance.requests());
  return run_online(instance, *algorithm);
}

}  // namespace advmatch
