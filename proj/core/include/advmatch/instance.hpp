#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace advmatch {

/// Absolute tolerance for comparing costs of non-integer instances.
inline constexpr double kCostTolerance = 1e-9;

/// Cost equality: exact for integer instances, absolute tolerance otherwise.
bool costs_equal(double a, double b, bool exact);

/// Instance as read from a file: no ordering or consistency guarantees.
struct RawInstance {
  std::vector<double> servers;
  std::vector<double> requests;
};

/// A validated input for online matching on the line.
///
/// Servers are kept sorted nondecreasing (their order carries no meaning);
/// requests keep arrival order. Duplicate positions are allowed. An instance
/// is in integer mode when every coordinate is integral and the leftmost
/// server sits at 1; then `bound()` returns N = s_n + 1.
class Instance {
 public:
  std::size_t size() const { return servers_.size(); }
  std::span<const double> servers() const { return servers_; }
  std::span<const double> requests() const { return requests_; }
  double server(std::size_t i) const { return servers_[i]; }
  double request(std::size_t i) const { return requests_[i]; }

  bool integer_mode() const { return integer_mode_; }
  /// N; only meaningful in integer mode.
  std::int64_t bound() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  friend Instance validate_instance(RawInstance raw);
  Instance() = default;

  std::vector<double> servers_;
  std::vector<double> requests_;
  bool integer_mode_ = false;
};

/// Sorts servers, checks sizes and finiteness, and derives integer mode.
/// Throws InvalidArgument on a size mismatch, an empty instance, or a
/// non-finite coordinate.
Instance validate_instance(RawInstance raw);

/// request i -> server assignment[i], together with its total cost.
struct Matching {
  std::vector<std::size_t> assignment;
  double cost = 0.0;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Sum of |r_i - s_assignment[i]|. Integer instances are summed in 64-bit
/// integer arithmetic. Throws InvalidArgument unless `assignment` is a
/// bijection onto the server indices.
double total_cost(const Instance& instance, std::span<const std::size_t> assignment);

/// Builds a Matching and fills in its cost.
Matching make_matching(const Instance& instance, std::vector<std::size_t> assignment);

/// A server as seen by an online algorithm: its index in the instance and
/// its position.
struct PoolServer {
  std::size_t index = 0;
  double position = 0.0;

  friend bool operator==(const PoolServer&, const PoolServer&) = default;
};

/// All servers of `instance` as a pool, in index order.
std::vector<PoolServer> server_pool(const Instance& instance);

/// True when every value is finite and integral.
bool all_integral(std::span<const double> values);

}  // namespace advmatch
