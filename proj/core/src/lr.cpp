#include "advmatch/lr.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

#include "advmatch/error.hpp"
#include "advmatch/offline.hpp"

namespace advmatch {

LrMatcher::LrMatcher(std::span<const PoolServer> servers) {
  for (const auto& s : servers) unmatched_.emplace(s.position, s.index);
}

LrMatcher::Options LrMatcher::options(double request) const {
  if (unmatched_.empty()) throw InvalidArgument("LR has no unmatched server left");
  auto as_server = [](const Key& k) { return PoolServer{k.second, k.first}; };

  Options out;
  const auto at = unmatched_.lower_bound({request, 0});
  if (at != unmatched_.end() && at->first == request) {
    out.forced = as_server(*at);
  } else if (unmatched_.begin()->first > request) {
    out.forced = as_server(*unmatched_.begin());
  } else if (unmatched_.rbegin()->first < request) {
    out.forced = as_server(*unmatched_.rbegin());
  } else {
    out.left = as_server(*std::prev(at));
    out.right = as_server(*at);
  }
  return out;
}

void LrMatcher::commit(const PoolServer& server) {
  if (unmatched_.erase({server.position, server.index}) != 1) {
    throw InvalidArgument("server " + std::to_string(server.index) + " is not unmatched");
  }
}

LrMatcher::Step LrMatcher::serve(double request, BitTape& tape) {
  const Options opt = options(request);
  Step step;
  if (opt.forced) {
    step.server = *opt.forced;
  } else {
    step.read_bit = true;
    step.server = tape.read_bit() ? opt.right : opt.left;
  }
  commit(step.server);
  return step;
}

std::vector<PoolServer> LrMatcher::unmatched_servers() const {
  std::vector<PoolServer> out;
  out.reserve(unmatched_.size());
  for (const auto& [pos, idx] : unmatched_) out.push_back({idx, pos});
  return out;
}

namespace {

std::vector<double> positions_without(const std::vector<PoolServer>& servers, std::size_t skip) {
  std::vector<double> out;
  out.reserve(servers.size());
  for (const auto& s : servers) {
    if (s.index != skip) out.push_back(s.position);
  }
  return out;
}

}  // namespace

std::vector<bool> lr_oracle(const Instance& instance) {
  const bool exact = instance.integer_mode();
  const std::size_t n = instance.size();
  const auto requests = instance.requests();
  const auto pool = server_pool(instance);

  LrMatcher lr(pool);
  std::vector<bool> bits;
  const double target = sorted_matching_cost(instance.servers(), requests);
  double spent = 0.0;

  for (std::size_t t = 0; t < n; ++t) {
    const double r = requests[t];
    const auto opt = lr.options(r);
    PoolServer chosen;
    if (opt.forced) {
      chosen = *opt.forced;
    } else {
      const auto free = lr.unmatched_servers();
      const auto rest = requests.subspan(t + 1);
      const double remaining = target - spent;
      const double via_left =
          std::abs(r - opt.left.position) +
          sorted_matching_cost(positions_without(free, opt.left.index), rest);
      const bool left = exact ? via_left == remaining : via_left <= remaining + kCostTolerance;
      bits.push_back(!left);
      chosen = left ? opt.left : opt.right;
    }
    lr.commit(chosen);
    spent += std::abs(r - chosen.position);

    // The served prefix must leave the optimum reachable.
    const auto free = lr.unmatched_servers();
    std::vector<double> positions;
    positions.reserve(free.size());
    for (const auto& s : free) positions.push_back(s.position);
    const double reachable = spent + sorted_matching_cost(positions, requests.subspan(t + 1));
    const bool reachable_ok =
        exact ? reachable == target
              : std::abs(reachable - target) <= kCostTolerance * std::max(1.0, std::abs(target));
    if (!reachable_ok) {
      throw std::logic_error("LR oracle lost optimality after request " + std::to_string(t));
    }
  }
  return bits;
}

LrRun lr_run(const Instance& instance, BitTape& tape) {
  const std::size_t n = instance.size();
  LrMatcher lr(server_pool(instance));
  LrRun run;
  std::vector<std::size_t> assignment(n);
  run.bits_per_request.resize(n, 0);
  const std::size_t start = tape.bits_read();
  for (std::size_t t = 0; t < n; ++t) {
    const auto step = lr.serve(instance.request(t), tape);
    assignment[t] = step.server.index;
    run.bits_per_request[t] = step.read_bit ? 1 : 0;
  }
  run.oracle_bits_read = tape.bits_read() - start;
  run.matching = make_matching(instance, std::move(assignment));
  return run;
}

LrRun lr_run_with_oracle(const Instance& instance) {
  BitTape tape(lr_oracle(instance));
  return lr_run(instance, tape);
}

}  // namespace advmatch
