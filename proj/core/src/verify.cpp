#include "advmatch/verify.hpp"

#include <cmath>
#include <string>

#include "advmatch/divide.hpp"
#include "advmatch/error.hpp"
#include "advmatch/generators.hpp"
#include "advmatch/lr.hpp"
#include "advmatch/offline.hpp"

namespace advmatch {

Suite parse_suite(std::string_view name) {
  for (auto s : {Suite::lr_optimal, Suite::divide_exact, Suite::family, Suite::props}) {
    if (name == to_string(s)) return s;
  }
  throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::lr_optimal: return "lr-optimal";
    case Suite::divide_exact: return "divide-exact";
    case Suite::family: return "family";
    case Suite::props: return "props";
  }
  return "?";
}

namespace {

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  void expect(bool ok, const std::string& what) {
    ++report_.checks;
    if (!ok) report_.failures.push_back(what);
  }

 private:
  VerifyReport& report_;
};

std::string tag(std::uint64_t seed) { return "seed " + std::to_string(seed) + ": "; }

void require_small(std::size_t n, std::size_t limit) {
  if (n == 0 || n > limit) {
    throw InvalidArgument("suite needs 1 <= n <= " + std::to_string(limit));
  }
}

// Integer positions in a narrow range so that ties show up often.
Instance suite_instance(std::size_t n, std::uint64_t seed) {
  return gen_uniform(n, 0, static_cast<double>(3 * n), seed, true);
}

void lr_optimal(const VerifyOptions& opt, Checker& check) {
  require_small(opt.n, kMaxBruteForceSize);
  for (std::size_t t = 0; t < opt.instances; ++t) {
    const std::uint64_t seed = opt.seed + t;
    const Instance inst = suite_instance(opt.n, seed);
    const LrRun run = lr_run_with_oracle(inst);
    const double best = brute_force_optimal(inst).cost;
    check.expect(run.matching.cost == best, tag(seed) + "LR cost differs from the optimum");
    check.expect(run.oracle_bits_read + 1 <= opt.n, tag(seed) + "LR read more than n-1 bits");
  }
}

void divide_exact(const VerifyOptions& opt, Checker& check) {
  require_small(opt.n, kMaxBruteForceSize);
  for (std::size_t t = 0; t < opt.instances; ++t) {
    const std::uint64_t seed = opt.seed + t;
    const Instance inst = suite_instance(opt.n, seed);
    const double best = brute_force_optimal(inst).cost;
    for (std::size_t k = 1; k <= opt.n; ++k) {
      const std::string where = tag(seed) + "k=" + std::to_string(k) + ": ";
      try {
        const DivideRun run = divide_run(inst, k, SubroutineKind::clairvoyant);
        check.expect(run.matching.cost == best, where + "cost differs from the optimum");
        check.expect(run.oracle_bits_read <= divide_advice_budget(k, inst.bound(), opt.n),
                     where + "advice over budget");
        check.expect(run.marks.overlap().empty(), where + "marked sets overlap");
        double parts = run.lr_cost;
        for (double c : run.block_costs) parts += c;
        check.expect(parts == run.matching.cost, where + "cost does not decompose");
        check.expect(run.unmarked_requests == run.unmarked_servers,
                     where + "unmarked request and server counts differ");
      } catch (const AdviceError& e) {
        check.expect(false, where + e.what());
      }
    }
  }
}

void family(const VerifyOptions& opt, Checker& check) {
  require_small(opt.n, 8);
  const auto members = gen_family(opt.n);
  check.expect(members.size() == (std::size_t{1} << (opt.n - 1)), "family size is not 2^(n-1)");
  check.expect(family_prefix_structure_holds(opt.n, members), "family prefix structure broken");
  for (const auto& c : verify_family(opt.n)) {
    check.expect(c.passed, "member " + std::to_string(c.member) + ": " +
                               std::to_string(c.violating_optima) + " of " +
                               std::to_string(c.optima) + " optima misplace s_n");
  }
  for (std::size_t m = 0; m < members.size(); ++m) {
    const Instance inst = family_instance(opt.n, members[m]);
    const LrRun run = lr_run_with_oracle(inst);
    check.expect(costs_equal(run.matching.cost, brute_force_optimal(inst).cost, false),
                 "member " + std::to_string(m) + ": LR not optimal");
  }
}

void props(const VerifyOptions& opt, Checker& check) {
  require_small(opt.n, 7);
  for (std::size_t t = 0; t < opt.instances; ++t) {
    const std::uint64_t seed = opt.seed + t;
    for (bool integer : {true, false}) {
      const Instance inst = integer ? suite_instance(opt.n, seed)
                                    : gen_uniform(opt.n, 0.0, 10.0, seed, false);
      const std::string where = tag(seed) + (integer ? "int: " : "real: ");
      check.expect(costs_equal(monotone_optimal(inst).cost, brute_force_optimal(inst).cost, integer),
                   where + "sorted optimum differs from exhaustive optimum");
      enumerate_optimal_matchings(inst, [&](std::span<const std::size_t> a) {
        check.expect(!find_order_violation(inst, a), where + "optimum violates ordering");
        const Matching m = make_matching(inst, {a.begin(), a.end()});
        for (std::size_t i = 0; i < opt.n; ++i) {
          for (std::size_t j = i + 1; j < opt.n; ++j) {
            if (!switch_applicable(inst, m, i, j)) continue;
            check.expect(costs_equal(apply_switch(inst, m, i, j).cost, m.cost, integer),
                         where + "switch changed the cost");
          }
        }
      });
    }
  }
}

}  // namespace

VerifyReport run_suite(Suite suite, const VerifyOptions& options) {
  VerifyReport report;
  report.suite = std::string(to_string(suite));
  Checker check(report);
  switch (suite) {
    case Suite::lr_optimal: lr_optimal(options, check); break;
    case Suite::divide_exact: divide_exact(options, check); break;
    case Suite::family: family(options, check); break;
    case Suite::props: props(options, check); break;
  }
  return report;
}

}  // namespace advmatch
