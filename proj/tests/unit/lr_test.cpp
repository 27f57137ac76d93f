#include <gtest/gtest.h>

#include "advmatch/error.hpp"
#include "advmatch/generators.hpp"
#include "advmatch/lr.hpp"
#include "reference.hpp"

using namespace advmatch;

namespace {

Instance make(std::vector<double> s, std::vector<double> r) {
  return validate_instance({std::move(s), std::move(r)});
}

std::vector<PoolServer> pool(std::vector<double> positions) {
  std::vector<PoolServer> out;
  for (std::size_t i = 0; i < positions.size(); ++i) out.push_back({i, positions[i]});
  return out;
}

}  // namespace

TEST(LrMatcher, BitZeroGoesLeft) {
  LrMatcher lr(pool({0, 10}));
  BitTape tape({false});
  const auto step = lr.serve(4, tape);
  EXPECT_EQ(step.server.position, 0.0);
  EXPECT_TRUE(step.read_bit);
}

TEST(LrMatcher, BitOneGoesRight) {
  LrMatcher lr(pool({0, 10}));
  BitTape tape({true});
  EXPECT_EQ(lr.serve(4, tape).server.position, 10.0);
  EXPECT_EQ(tape.bits_read(), 1u);
}

TEST(LrMatcher, ForcedMovesReadNothing) {
  BitTape empty;
  LrMatcher above(pool({7}));
  const auto a = above.serve(3, empty);
  EXPECT_EQ(a.server.position, 7.0);
  EXPECT_FALSE(a.read_bit);

  LrMatcher exact(pool({2, 4}));
  EXPECT_EQ(exact.serve(4, empty).server.position, 4.0);

  LrMatcher below(pool({1, 2}));
  EXPECT_EQ(below.serve(9, empty).server.position, 2.0);
  EXPECT_EQ(empty.bits_read(), 0u);
}

TEST(LrMatcher, NeighboursSkipMatchedServers) {
  LrMatcher lr(pool({1, 2, 3, 4}));
  BitTape tape({true, false});
  EXPECT_EQ(lr.serve(2.5, tape).server.position, 3.0);
  EXPECT_EQ(lr.serve(3.5, tape).server.position, 2.0);
  EXPECT_EQ(lr.unmatched(), 2u);
}

TEST(LrMatcher, EmptyPoolThrows) {
  LrMatcher lr(pool({1}));
  BitTape tape;
  lr.serve(1, tape);
  EXPECT_THROW(lr.serve(1, tape), InvalidArgument);
}

TEST(LrOracle, GeometricExample) {
  const Instance inst = make({1, 2, 3}, {2.5, 2.75, 2.875});
  EXPECT_EQ(lr_oracle(inst), (std::vector<bool>{false, false}));
  const LrRun run = lr_run_with_oracle(inst);
  EXPECT_EQ(run.matching.assignment, (std::vector<std::size_t>{1, 0, 2}));
  EXPECT_DOUBLE_EQ(run.matching.cost, 2.375);
  EXPECT_EQ(run.oracle_bits_read, 2u);
}

TEST(LrOracle, ForcedInstanceNeedsNoBits) {
  EXPECT_TRUE(lr_oracle(make({1, 2}, {1, 2})).empty());
  EXPECT_EQ(lr_run_with_oracle(make({3}, {-7})).oracle_bits_read, 0u);
}

TEST(LrOracle, DuplicatedRequests) {
  const LrRun run = lr_run_with_oracle(make({1, 2, 3, 4}, {3, 3, 1, 4}));
  EXPECT_EQ(run.matching.cost, 1.0);
  EXPECT_LE(run.oracle_bits_read, 3u);
}

TEST(LrOracle, Rho0ReadsEveryBit) {
  for (std::size_t n = 2; n <= 10; ++n) {
    FamilyMember rho{family_rho0(n), 0};
    const LrRun run = lr_run_with_oracle(family_instance(n, rho));
    EXPECT_EQ(run.oracle_bits_read, n - 1) << "n=" << n;
  }
}

TEST(LrRun, ExplicitTape) {
  const Instance inst = make({1, 2, 3}, {2.5, 2.75, 2.875});
  BitTape tape({true, true});
  const LrRun run = lr_run(inst, tape);
  // 2.5 -> 3, then 2.75 -> 2 (all remaining are below), 2.875 -> 1.
  EXPECT_EQ(run.matching.assignment, (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(run.oracle_bits_read, 1u);
  EXPECT_EQ(run.bits_per_request, (std::vector<unsigned>{1, 0, 0}));
}

TEST(LrRun, ShortTapeUnderflows) {
  BitTape empty;
  EXPECT_THROW(lr_run(make({0, 10}, {4, 6}), empty), TapeUnderflow);
}

TEST(LrRun, OptimalAgainstLiteralEnumeration) {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const std::size_t n = 1 + seed % 7;
    const Instance inst = seed % 3 ? reftest::random_integer_instance(n, 2 * n, seed)
                                   : reftest::random_real_instance(n, 0, 5, seed);
    const LrRun run = lr_run_with_oracle(inst);
    const double best = reftest::enumerate_all(inst).cost;
    if (inst.integer_mode()) {
      EXPECT_EQ(run.matching.cost, best) << "seed " << seed;
    } else {
      EXPECT_TRUE(reftest::close(run.matching.cost, best)) << "seed " << seed;
    }
    EXPECT_LE(run.oracle_bits_read + 1, std::max<std::size_t>(n, 1)) << "seed " << seed;
  }
}
