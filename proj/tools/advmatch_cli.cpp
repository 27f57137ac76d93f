// advmatch: generate instances, run online matching algorithms with advice,
// and run the built-in verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "advmatch/divide.hpp"
#include "advmatch/error.hpp"
#include "advmatch/experiment.hpp"
#include "advmatch/generators.hpp"
#include "advmatch/instance_io.hpp"
#include "advmatch/lr.hpp"
#include "advmatch/report.hpp"
#include "advmatch/verify.hpp"

namespace {

using namespace advmatch;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::uint64_t seed = 1;
  int verbosity = 0;
};

struct GenArgs {
  std::string mode = "uniform";
  std::size_t n = 8;
  std::string range = "0:100";
  bool real = false;
  std::string out = "-";
};

struct RunArgs {
  std::string algo;
  std::size_t k = 0;
  std::string sub = "greedy";
  std::string input;
  std::string report = "-";
  std::string format = "json";
  bool verbose_tape = false;
};

struct VerifyArgs {
  std::string suite;
  std::size_t n = 6;
  std::size_t instances = 50;
};

struct ReportArgs {
  std::string input;
  std::string format = "summary";
  std::string out = "-";
};

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument("--range must look like LO:HI");
  try {
    std::size_t used = 0;
    const double lo = std::stod(text.substr(0, colon), &used);
    if (used != colon) throw InvalidArgument("bad LO in --range");
    const std::string hi_text = text.substr(colon + 1);
    const double hi = std::stod(hi_text, &used);
    if (used != hi_text.size()) throw InvalidArgument("bad HI in --range");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InvalidArgument("--range must look like LO:HI");
  }
}

int cmd_gen(const Globals& g, const GenArgs& a) {
  if (a.mode == "uniform") {
    const auto [lo, hi] = parse_range(a.range);
    const Instance inst = gen_uniform(a.n, lo, hi, g.seed, !a.real);
    write_output(a.out, format_instance(inst));
  } else if (a.mode == "family") {
    std::vector<Instance> all;
    for (const auto& m : gen_family(a.n)) all.push_back(family_instance(a.n, m));
    if (a.out == "-") {
      for (const auto& inst : all) std::cout << format_instance(inst);
    } else {
      save_instances(all, a.out);
    }
    if (g.verbosity > 0) std::cerr << "wrote " << all.size() << " family members\n";
  } else {
    throw InvalidArgument("unknown --mode '" + a.mode + "'");
  }
  return kExitOk;
}

void dump_tapes(const ExperimentConfig& config, const LabelledInstance& input) {
  const Instance& inst = input.instance;
  const std::size_t k = config.k == 0 ? inst.size() : config.k;
  std::cerr << "== " << input.id << '\n';
  switch (config.algo) {
    case Algorithm::lr: {
      std::string bits;
      for (bool b : lr_oracle(inst)) bits += b ? '1' : '0';
      std::cerr << "oracle bits: " << (bits.empty() ? "(none)" : bits) << '\n';
      break;
    }
    case Algorithm::divide:
    case Algorithm::rescale: {
      const DivideRun run = config.algo == Algorithm::divide
                                ? divide_run(inst, k, config.sub)
                                : rescale_run(inst, k, config.sub).scaled;
      std::cerr << format_advice_schedule(run.schedule);
      std::cerr << "aux bits: written=" << run.aux_bits_written
                << " removed=" << run.aux_bits_removed << " read=" << run.aux_bits_read << '\n';
      break;
    }
    default:
      std::cerr << "(no advice)\n";
  }
}

int cmd_run(const Globals& g, const RunArgs& a) {
  ExperimentConfig config;
  config.algo = parse_algorithm(a.algo);
  config.k = a.k;
  config.sub = parse_subroutine_kind(a.sub);
  config.source = FileSource{a.input};
  const ReportFormat format = parse_report_format(a.format);

  std::vector<RunReport> reports;
  int status = kExitOk;
  for (auto& input : collect_instances(config)) {
    input.seed = g.seed;
    if (a.verbose_tape) dump_tapes(config, input);
    reports.push_back(run_single(config, input));
    const RunReport& r = reports.back();
    if (g.verbosity > 0) {
      std::cerr << r.instance_id << ": cost=" << r.cost << " opt=" << r.opt_cost
                << " ratio=" << r.ratio << '\n';
    }
    if (r.ratio < 1.0 - 1e-9) {
      std::cerr << r.instance_id << ": cost below the optimum\n";
      status = kExitFailed;
    }
  }
  write_output(a.report, format_reports(reports, format));
  return status;
}

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  VerifyOptions options;
  options.n = a.n;
  options.seed = g.seed;
  options.instances = a.instances;
  const VerifyReport report = run_suite(parse_suite(a.suite), options);
  const std::size_t shown = g.verbosity > 0 ? report.failures.size() : std::min<std::size_t>(report.failures.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) std::cerr << "FAIL " << report.failures[i] << '\n';
  std::cout << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " ("
            << report.checks - report.failures.size() << "/" << report.checks << " checks)\n";
  return report.passed() ? kExitOk : kExitFailed;
}

int cmd_report(const ReportArgs& a) {
  const auto reports = load_reports_json(a.input);
  if (a.format == "summary") {
    const ReportSummary s = summarize(reports);
    std::ostringstream out;
    out << "runs " << s.runs << "\nmean_ratio " << s.mean_ratio << "\nmax_ratio " << s.max_ratio
        << "\nmax_oracle_bits " << s.max_bits << "\ntotal_cost " << s.total_cost
        << "\ntotal_opt " << s.total_opt << '\n';
    write_output(a.out, out.str());
  } else {
    write_output(a.out, format_reports(reports, parse_report_format(a.format)));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online min-cost matching on the line with advice"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_flag("-v,--verbose", g.verbosity, "More output (repeatable)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->fallthrough();
  gen->add_option("--mode", gen_args.mode, "uniform or family")
      ->check(CLI::IsMember({"uniform", "family"}))
      ->capture_default_str();
  gen->add_option("--n", gen_args.n, "Instance size")->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--range", gen_args.range, "Position range LO:HI")->capture_default_str();
  gen->add_flag("--real", gen_args.real, "Real-valued positions instead of integers");
  gen->add_option("--out", gen_args.out, "Output file, - for stdout")->capture_default_str();

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run one algorithm on every instance of a file");
  run->fallthrough();
  run->add_option("--algo", run_args.algo, "lr, divide, rescale, greedy or permutation")
      ->required()
      ->check(CLI::IsMember({"lr", "divide", "rescale", "greedy", "permutation"}));
  run->add_option("--k", run_args.k, "DIVIDE_k blocks, 0 for k = n")->capture_default_str();
  run->add_option("--sub", run_args.sub, "Block subroutine")
      ->check(CLI::IsMember({"greedy", "permutation", "clairvoyant"}))
      ->capture_default_str();
  run->add_option("--input", run_args.input, "Instance or instance-set JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--report", run_args.report, "Report file, - for stdout")->capture_default_str();
  run->add_option("--format", run_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  run->add_flag("--verbose-tape", run_args.verbose_tape, "Dump advice and auxiliary tapes to stderr");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a self-check suite");
  verify->fallthrough();
  verify->add_option("--suite", verify_args.suite, "lr-optimal, divide-exact, family or props")
      ->required()
      ->check(CLI::IsMember({"lr-optimal", "divide-exact", "family", "props"}));
  verify->add_option("--n", verify_args.n, "Instance size")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--instances", verify_args.instances, "Random instances per suite")
      ->capture_default_str();

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "Convert or summarize a JSON report");
  report->add_option("--input", report_args.input, "JSON report")->required()->check(CLI::ExistingFile);
  report->add_option("--format", report_args.format, "summary, json or csv")
      ->check(CLI::IsMember({"summary", "json", "csv"}))
      ->capture_default_str();
  report->add_option("--out", report_args.out, "Output file, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(g, gen_args);
    if (*run) return cmd_run(g, run_args);
    if (*verify) return cmd_verify(g, verify_args);
    if (*report) return cmd_report(report_args);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
