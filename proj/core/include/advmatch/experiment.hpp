#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "advmatch/instance.hpp"
#include "advmatch/subroutine.hpp"

namespace advmatch {

enum class Algorithm { lr, divide, rescale, greedy, permutation };

std::string_view to_string(Algorithm algo);
Algorithm parse_algorithm(std::string_view name);

struct UniformSource {
  std::size_t n = 8;
  double lo = 0.0;
  double hi = 100.0;
  bool integer_mode = true;
  std::uint64_t first_seed = 1;
  std::size_t repetitions = 1;
};

struct FamilySource {
  std::size_t n = 4;
};

struct FileSource {
  std::filesystem::path path;
};

struct ExperimentConfig {
  Algorithm algo = Algorithm::lr;
  /// Number of DIVIDE_k blocks; 0 means k = n.
  std::size_t k = 0;
  SubroutineKind sub = SubroutineKind::greedy;
  std::variant<UniformSource, FamilySource, FileSource> source = UniformSource{};
  /// Cross-check the sorted optimum against the exhaustive one when n is
  /// small enough.
  bool brute_force_check = true;
};

struct RunReport {
  std::string instance_id;
  std::string algo;
  std::size_t k = 0;
  double cost = 0.0;
  double opt_cost = 0.0;
  double ratio = 1.0;
  std::size_t oracle_bits_read = 0;
  std::size_t aux_bits = 0;
  std::uint64_t seed = 0;
  double wall_time_ms = 0.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// cost / opt; 1 when both vanish; +inf when only opt vanishes.
double competitive_ratio(double cost, double opt);

/// One labelled input of an experiment.
struct LabelledInstance {
  std::string id;
  std::uint64_t seed = 0;
  Instance instance;
};

/// Expands the configured source. Throws InvalidArgument on a bad config.
std::vector<LabelledInstance> collect_instances(const ExperimentConfig& config);

/// Runs one algorithm on one instance.
RunReport run_single(const ExperimentConfig& config, const LabelledInstance& input);

std::vector<RunReport> run_experiment(const ExperimentConfig& config);

}  // namespace advmatch
