#include <cmath>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "advmatch/error.hpp"
#include "advmatch/instance.hpp"
#include "advmatch/instance_io.hpp"

using namespace advmatch;

namespace {

Instance make(std::vector<double> s, std::vector<double> r) {
  return validate_instance({std::move(s), std::move(r)});
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("advmatch_" + name);
}

}  // namespace

TEST(Instance, MinimalIntegerInstance) {
  const Instance inst = make({1, 2}, {1, 2});
  EXPECT_TRUE(inst.integer_mode());
  EXPECT_EQ(inst.bound(), 3);
}

TEST(Instance, RealInstanceIsNotIntegerMode) {
  EXPECT_FALSE(make({0.5, 2.5}, {1.0, 1.0}).integer_mode());
  // Integral but s_1 != 1.
  EXPECT_FALSE(make({0, 10}, {5, 5}).integer_mode());
}

TEST(Instance, RejectsBadShapes) {
  EXPECT_THROW(make({1, 2}, {1}), InvalidArgument);
  EXPECT_THROW(make({}, {}), InvalidArgument);
  EXPECT_THROW(make({1, std::nan("")}, {1, 2}), InvalidArgument);
}

TEST(Instance, ServersAreSortedRequestsKeepOrder) {
  const Instance inst = make({3, 1, 2}, {3, 1, 2});
  EXPECT_EQ(std::vector<double>(inst.servers().begin(), inst.servers().end()),
            (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(std::vector<double>(inst.requests().begin(), inst.requests().end()),
            (std::vector<double>{3, 1, 2}));
}

TEST(TotalCost, Examples) {
  EXPECT_EQ(total_cost(make({1, 2}, {1, 2}), std::vector<std::size_t>{0, 1}), 0.0);
  const Instance sym = make({0, 10}, {5, 5});
  EXPECT_EQ(total_cost(sym, std::vector<std::size_t>{0, 1}), 10.0);
  EXPECT_EQ(total_cost(sym, std::vector<std::size_t>{1, 0}), 10.0);
  EXPECT_DOUBLE_EQ(total_cost(make({1, 2, 3}, {2.5, 2.75, 2.875}), std::vector<std::size_t>{0, 1, 2}),
                   2.375);
}

TEST(TotalCost, RejectsNonPermutations) {
  const Instance inst = make({1, 2}, {1, 2});
  EXPECT_THROW(total_cost(inst, std::vector<std::size_t>{0, 0}), InvalidArgument);
  EXPECT_THROW(total_cost(inst, std::vector<std::size_t>{0}), InvalidArgument);
  EXPECT_THROW(total_cost(inst, std::vector<std::size_t>{0, 2}), InvalidArgument);
}

TEST(InstanceIo, RoundTrip) {
  const Instance inst = make({1, 2, 3}, {3, 3, 1});
  const auto path = temp_file("roundtrip.json");
  save_instance(inst, path);
  EXPECT_EQ(load_instance(path), inst);
  std::filesystem::remove(path);
}

TEST(InstanceIo, RealValuesRoundTripExactly) {
  const Instance inst = make({0.1, 1.0 / 3.0}, {2.5e-7, 1e12});
  EXPECT_EQ(parse_instance(format_instance(inst)), inst);
}

TEST(InstanceIo, NormalizesServerOrder) {
  const Instance inst = parse_instance(R"({"servers":[2,1],"requests":[1,1]})");
  EXPECT_EQ(inst.server(0), 1.0);
  EXPECT_EQ(inst.server(1), 2.0);
}

TEST(InstanceIo, ParseErrors) {
  EXPECT_THROW(parse_instance(R"({"servers":[1],"requests":["abc"]})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"servers":[1]})"), ParseError);
  EXPECT_THROW(parse_instance("not json"), ParseError);
}

TEST(InstanceIo, InstanceSets) {
  const auto path = temp_file("set.json");
  const std::vector<Instance> all{make({1}, {4}), make({1, 2}, {2, 1})};
  save_instances(all, path);
  EXPECT_EQ(load_instances(path), all);
  save_instance(all[1], path);
  ASSERT_EQ(load_instances(path).size(), 1u);
  std::filesystem::remove(path);
}
