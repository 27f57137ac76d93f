#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "advmatch/instance.hpp"

namespace advmatch {

/// An advice-free online matching algorithm. Each call receives the servers
/// still free in the subroutine's pool and must return one of them.
class Subroutine {
 public:
  virtual ~Subroutine() = default;
  virtual std::string_view name() const = 0;
  virtual PoolServer serve(std::span<const PoolServer> available, double request) = 0;
};

enum class SubroutineKind { greedy, permutation, clairvoyant };

std::string_view to_string(SubroutineKind kind);
/// Throws InvalidArgument for an unknown name.
SubroutineKind parse_subroutine_kind(std::string_view name);

/// Nearest available server; ties go left (smaller position, then smaller
/// index). Throws SubroutineError on an empty pool.
PoolServer greedy_serve(std::span<const PoolServer> available, double request);

class GreedySubroutine final : public Subroutine {
 public:
  std::string_view name() const override { return "greedy"; }
  PoolServer serve(std::span<const PoolServer> available, double request) override {
    return greedy_serve(available, request);
  }
};

/// The Permutation algorithm: after t requests it keeps an optimal set of t
/// servers for the requests seen so far, growing the previous set by one
/// server, and hands the added server to the new request.
class PermutationSubroutine final : public Subroutine {
 public:
  explicit PermutationSubroutine(std::span<const PoolServer> pool);
  std::string_view name() const override { return "permutation"; }
  PoolServer serve(std::span<const PoolServer> available, double request) override;

 private:
  std::vector<PoolServer> pool_;  // sorted by (position, index)
  std::vector<bool> in_set_;
  std::vector<double> seen_;
};

/// Test double that knows the whole request sequence in advance and plays
/// the sorted optimum of its pool against it.
class ClairvoyantSubroutine final : public Subroutine {
 public:
  ClairvoyantSubroutine(std::span<const PoolServer> pool, std::span<const double> sealed_requests);
  std::string_view name() const override { return "clairvoyant"; }
  PoolServer serve(std::span<const PoolServer> available, double request) override;

 private:
  std::vector<double> sealed_;
  std::vector<PoolServer> plan_;  // server for the i-th sealed request
  std::size_t next_ = 0;
};

/// `sealed_requests` is only consulted by the clairvoyant double.
std::unique_ptr<Subroutine> make_subroutine(SubroutineKind kind, std::span<const PoolServer> pool,
                                            std::span<const double> sealed_requests = {});

/// Serves every request of `instance` with `algorithm` over the full server
/// pool, checking that each answer was actually available.
Matching run_online(const Instance& instance, Subroutine& algorithm);

/// Convenience: builds the subroutine for the whole instance and runs it.
Matching run_online(const Instance& instance, SubroutineKind kind);

}  // namespace advmatch
