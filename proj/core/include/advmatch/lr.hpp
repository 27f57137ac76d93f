#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "advmatch/instance.hpp"
#include "advmatch/tape.hpp"

namespace advmatch {

/// Algorithm LR over an arbitrary server pool.
///
/// A request is matched to an equal unmatched server if one exists; to the
/// least server when all are greater; to the largest when all are smaller.
/// Otherwise one advice bit picks the nearest unmatched server strictly to
/// the left (0) or strictly to the right (1).
class LrMatcher {
 public:
  explicit LrMatcher(std::span<const PoolServer> servers);

  /// Where a request would go before any bit is consulted.
  struct Options {
    std::optional<PoolServer> forced;
    PoolServer left;   // greatest unmatched server < request
    PoolServer right;  // least unmatched server > request
  };

  struct Step {
    PoolServer server;
    bool read_bit = false;
  };

  /// Throws InvalidArgument when no server is left.
  Options options(double request) const;
  void commit(const PoolServer& server);

  /// Serves one request, reading at most one bit from `tape`.
  Step serve(double request, BitTape& tape);

  std::size_t unmatched() const { return unmatched_.size(); }
  std::vector<PoolServer> unmatched_servers() const;

 private:
  using Key = std::pair<double, std::size_t>;
  std::set<Key> unmatched_;
};

/// Advice for LR: one bit per request whose move is not forced, chosen by
/// suffix lookahead so that LR's output is optimal. When both directions
/// keep the optimum reachable the bit is 0.
std::vector<bool> lr_oracle(const Instance& instance);

struct LrRun {
  Matching matching;
  std::size_t oracle_bits_read = 0;
  /// Bits read while serving each request (0 or 1).
  std::vector<unsigned> bits_per_request;
};

/// Runs LR on the whole instance reading advice from `tape`.
LrRun lr_run(const Instance& instance, BitTape& tape);

/// lr_oracle followed by lr_run on the produced tape.
LrRun lr_run_with_oracle(const Instance& instance);

}  // namespace advmatch
