#include "advmatch/experiment.hpp"

#include <chrono>
#include <limits>
#include <string>

#include "advmatch/divide.hpp"
#include "advmatch/error.hpp"
#include "advmatch/generators.hpp"
#include "advmatch/instance_io.hpp"
#include "advmatch/lr.hpp"
#include "advmatch/offline.hpp"

namespace advmatch {

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::lr: return "lr";
    case Algorithm::divide: return "divide";
    case Algorithm::rescale: return "rescale";
    case Algorithm::greedy: return "greedy";
    case Algorithm::permutation: return "permutation";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::lr, Algorithm::divide, Algorithm::rescale, Algorithm::greedy,
                 Algorithm::permutation}) {
    if (name == to_string(a)) return a;
  }
  throw InvalidArgument("unknown algorithm '" + std::string(name) + "'");
}

double competitive_ratio(double cost, double opt) {
  if (opt == 0.0) return cost == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return cost / opt;
}

namespace {

struct SourceExpander {
  std::vector<LabelledInstance> operator()(const UniformSource& src) const {
    if (src.repetitions == 0) throw InvalidArgument("uniform source needs at least one repetition");
    std::vector<LabelledInstance> out;
    for (std::size_t rep = 0; rep < src.repetitions; ++rep) {
      const std::uint64_t seed = src.first_seed + rep;
      out.push_back({"uniform-n" + std::to_string(src.n) + "-seed" + std::to_string(seed), seed,
                     gen_uniform(src.n, src.lo, src.hi, seed, src.integer_mode)});
    }
    return out;
  }

  std::vector<LabelledInstance> operator()(const FamilySource& src) const {
    std::vector<LabelledInstance> out;
    const auto members = gen_family(src.n);
    for (std::size_t i = 0; i < members.size(); ++i) {
      out.push_back({"family-n" + std::to_string(src.n) + "-m" + std::to_string(i) + "-d" +
                         std::to_string(members[i].branch_depth),
                     0, family_instance(src.n, members[i])});
    }
    return out;
  }

  std::vector<LabelledInstance> operator()(const FileSource& src) const {
    std::vector<LabelledInstance> out;
    const auto instances = load_instances(src.path);
    const std::string stem = src.path.filename().string();
    for (std::size_t i = 0; i < instances.size(); ++i) {
      out.push_back({stem + "#" + std::to_string(i), 0, instances[i]});
    }
    return out;
  }
};

}  // namespace

std::vector<LabelledInstance> collect_instances(const ExperimentConfig& config) {
  return std::visit(SourceExpander{}, config.source);
}

RunReport run_single(const ExperimentConfig& config, const LabelledInstance& input) {
  const Instance& inst = input.instance;
  const std::size_t n = inst.size();
  RunReport report;
  report.instance_id = input.id;
  report.algo = std::string(to_string(config.algo));
  report.seed = input.seed;

  const auto start = std::chrono::steady_clock::now();
  switch (config.algo) {
    case Algorithm::lr: {
      const LrRun run = lr_run_with_oracle(inst);
      report.cost = run.matching.cost;
      report.oracle_bits_read = run.oracle_bits_read;
      break;
    }
    case Algorithm::divide: {
      report.k = config.k == 0 ? n : config.k;
      const DivideRun run = divide_run(inst, report.k, config.sub);
      report.cost = run.matching.cost;
      report.oracle_bits_read = run.oracle_bits_read;
      report.aux_bits = run.aux_bits_read;
      break;
    }
    case Algorithm::rescale: {
      report.k = config.k == 0 ? n : config.k;
      const RescaleRun run = rescale_run(inst, report.k, config.sub);
      report.cost = run.matching.cost;
      report.oracle_bits_read = run.scaled.oracle_bits_read;
      report.aux_bits = run.scaled.aux_bits_read;
      break;
    }
    case Algorithm::greedy:
    case Algorithm::permutation: {
      const auto kind = config.algo == Algorithm::greedy ? SubroutineKind::greedy
                                                         : SubroutineKind::permutation;
      report.cost = run_online(inst, kind).cost;
      break;
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  report.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  report.opt_cost = monotone_optimal(inst).cost;
  if (config.brute_force_check && n <= kMaxBruteForceSize) {
    const double exhaustive = brute_force_optimal(inst).cost;
    if (!costs_equal(report.opt_cost, exhaustive, inst.integer_mode())) {
      throw Error("sorted optimum disagrees with exhaustive optimum on " + input.id);
    }
  }
  report.ratio = competitive_ratio(report.cost, report.opt_cost);
  return report;
}

std::vector<RunReport> run_experiment(const ExperimentConfig& config) {
  std::vector<RunReport> reports;
  for (const auto& input : collect_instances(config)) reports.push_back(run_single(config, input));
  return reports;
}

}  // namespace advmatch
