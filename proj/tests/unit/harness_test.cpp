#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "advmatch/error.hpp"
#include "advmatch/experiment.hpp"
#include "advmatch/generators.hpp"
#include "advmatch/report.hpp"
#include "advmatch/verify.hpp"
#include "reference.hpp"

using namespace advmatch;

TEST(GenUniform, Deterministic) {
  EXPECT_EQ(gen_uniform(3, 0, 100, 7, true), gen_uniform(3, 0, 100, 7, true));
  EXPECT_EQ(gen_uniform(5, 0, 1, 7, false), gen_uniform(5, 0, 1, 7, false));
  EXPECT_NE(gen_uniform(5, 0, 100, 7, true), gen_uniform(5, 0, 100, 8, true));
}

TEST(GenUniform, IntegerModeStartsAtOne) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance inst = gen_uniform(6, -40, 40, seed, true);
    EXPECT_TRUE(inst.integer_mode());
    EXPECT_EQ(inst.server(0), 1.0);
  }
}

TEST(GenUniform, SizeOneAndErrors) {
  const Instance inst = gen_uniform(1, 0, 10, 3, true);
  EXPECT_EQ(inst.size(), 1u);
  EXPECT_THROW(gen_uniform(0, 0, 10, 3, true), InvalidArgument);
  EXPECT_THROW(gen_uniform(2, 5, 1, 3, true), InvalidArgument);
  EXPECT_THROW(gen_uniform(2, 0.2, 0.8, 3, true), InvalidArgument);
}

TEST(GenFamily, Base) {
  const auto one = gen_family(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].requests, (std::vector<double>{1}));
  EXPECT_EQ(one[0].branch_depth, 0u);
}

TEST(GenFamily, ThreeUnrolled) {
  const auto fam = gen_family(3);
  ASSERT_EQ(fam.size(), 4u);
  EXPECT_EQ(fam[0].requests, (std::vector<double>{2.5, 2.75, 2.875}));
  EXPECT_EQ(fam[1].requests, (std::vector<double>{2.5, 2.75, 1}));
  EXPECT_EQ(fam[2].requests, (std::vector<double>{2.5, 1.5, 1.75}));
  EXPECT_EQ(fam[3].requests, (std::vector<double>{2.5, 1.5, 1}));
  EXPECT_EQ(fam[1].branch_depth, 1u);
  EXPECT_EQ(fam[2].branch_depth, 2u);
}

TEST(GenFamily, CardinalityAndPrefixes) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto fam = gen_family(n);
    EXPECT_EQ(fam.size(), std::size_t{1} << (n - 1));
    const auto rho = family_rho0(n);
    for (const auto& m : fam) {
      if (n == 1) break;  // I_1 = {(1)} is the base case, not rho_0
      for (std::size_t i = 0; i + m.branch_depth < n; ++i) EXPECT_EQ(m.requests[i], rho[i]);
    }
    if (n <= 9) EXPECT_TRUE(family_prefix_structure_holds(n, fam));
  }
  EXPECT_THROW(gen_family(0), InvalidArgument);
  EXPECT_THROW(gen_family(kMaxFamilySize + 1), InvalidArgument);
}

TEST(GenFamily, PrefixCheckRejectsForeignMember) {
  auto fam = gen_family(4);
  fam.push_back(fam[1]);
  EXPECT_FALSE(family_prefix_structure_holds(4, fam));
}

TEST(VerifyFamily, SmallCases) {
  const auto two = verify_family(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].expected_request, 1u);  // rho_0 = (1.5, 1.75): s_2 -> r_2
  EXPECT_EQ(two[1].expected_request, 0u);  // (1.5, 1): s_2 -> r_1
  for (const auto& c : two) EXPECT_TRUE(c.passed);
  for (const auto& c : verify_family(3)) EXPECT_TRUE(c.passed);
}

TEST(VerifyFamily, AgreesWithLiteralEnumeration) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto fam = gen_family(n);
    const auto checks = verify_family(n);
    for (std::size_t m = 0; m < fam.size(); ++m) {
      const auto ref = reftest::enumerate_all(family_instance(n, fam[m]));
      EXPECT_EQ(checks[m].optima, ref.optima.size());
      for (const auto& a : ref.optima) EXPECT_EQ(a[checks[m].expected_request], n - 1);
    }
  }
}

TEST(Experiment, LrOnFamily) {
  ExperimentConfig config;
  config.algo = Algorithm::lr;
  config.source = FamilySource{6};
  const auto reports = run_experiment(config);
  ASSERT_EQ(reports.size(), 32u);
  for (const auto& r : reports) {
    EXPECT_NEAR(r.ratio, 1.0, 1e-9);
    EXPECT_LE(r.oracle_bits_read, 5u);
  }
}

TEST(Experiment, DivideWithSingletonBlocks) {
  ExperimentConfig config;
  config.algo = Algorithm::divide;
  config.k = 0;
  config.sub = SubroutineKind::greedy;
  config.source = UniformSource{8, 0, 100, true, 1, 20};
  for (const auto& r : run_experiment(config)) {
    EXPECT_EQ(r.ratio, 1.0);
    EXPECT_EQ(r.k, 8u);
  }
}

TEST(Experiment, GreedyRatiosAtLeastOne) {
  ExperimentConfig config;
  config.algo = Algorithm::greedy;
  config.source = UniformSource{8, 0, 100, true, 1, 100};
  const auto reports = run_experiment(config);
  ASSERT_EQ(reports.size(), 100u);
  for (const auto& r : reports) EXPECT_GE(r.ratio, 1.0 - 1e-9);
  EXPECT_GE(summarize(reports).max_ratio, 1.0);
}

TEST(Experiment, Reproducible) {
  ExperimentConfig config;
  config.algo = Algorithm::rescale;
  config.k = 3;
  config.source = UniformSource{7, 0, 5, false, 11, 5};
  auto a = run_experiment(config);
  auto b = run_experiment(config);
  for (auto* v : {&a, &b}) {
    for (auto& r : *v) r.wall_time_ms = 0;
  }
  EXPECT_EQ(a, b);
}

TEST(Experiment, Ratio) {
  EXPECT_EQ(competitive_ratio(0, 0), 1.0);
  EXPECT_TRUE(std::isinf(competitive_ratio(2, 0)));
  EXPECT_EQ(competitive_ratio(3, 2), 1.5);
}

TEST(Experiment, ParseAlgorithm) {
  EXPECT_EQ(parse_algorithm("rescale"), Algorithm::rescale);
  EXPECT_THROW(parse_algorithm("opt"), InvalidArgument);
}

namespace {

RunReport sample_report() {
  RunReport r;
  r.instance_id = "uniform-n4-seed9";
  r.algo = "divide";
  r.k = 2;
  r.cost = 7;
  r.opt_cost = 3.5;
  r.ratio = 2;
  r.oracle_bits_read = 12;
  r.aux_bits = 1;
  r.seed = 9;
  r.wall_time_ms = 0.25;
  return r;
}

}  // namespace

TEST(Report, EmptyLists) {
  EXPECT_EQ(format_reports({}, ReportFormat::csv), std::string(kReportCsvHeader) + "\n");
  EXPECT_TRUE(parse_reports_json(format_reports({}, ReportFormat::json)).empty());
}

TEST(Report, JsonRoundTrip) {
  std::vector<RunReport> v{sample_report()};
  v.push_back(sample_report());
  v[1].opt_cost = 0;
  v[1].ratio = std::numeric_limits<double>::infinity();
  EXPECT_EQ(parse_reports_json(format_reports(v, ReportFormat::json)), v);
}

TEST(Report, CsvColumns) {
  const std::vector<RunReport> v{sample_report()};
  std::istringstream in(format_reports(v, ReportFormat::csv));
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "instance_id,algo,k,cost,opt_cost,ratio,oracle_bits_read,aux_bits,seed,wall_time_ms");
  EXPECT_EQ(row, "uniform-n4-seed9,divide,2,7,3.5,2,12,1,9,0.25");
}

TEST(Report, FileOutput) {
  const auto path = std::filesystem::temp_directory_path() / "advmatch_report.json";
  const std::vector<RunReport> v{sample_report()};
  emit_report(v, ReportFormat::json, path);
  EXPECT_EQ(load_reports_json(path), v);
  std::filesystem::remove(path);
  EXPECT_THROW(parse_reports_json("{}"), ParseError);
}

TEST(Verify, SuitesPassOnSmallSizes) {
  VerifyOptions options;
  options.n = 5;
  options.instances = 20;
  for (auto suite : {Suite::lr_optimal, Suite::divide_exact, Suite::family, Suite::props}) {
    const VerifyReport r = run_suite(suite, options);
    EXPECT_TRUE(r.passed()) << r.suite << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.checks, 0u);
  }
}

TEST(Verify, RejectsOversizedN) {
  VerifyOptions options;
  options.n = 9;
  EXPECT_THROW(run_suite(Suite::family, options), InvalidArgument);
  EXPECT_EQ(parse_suite("divide-exact"), Suite::divide_exact);
}
