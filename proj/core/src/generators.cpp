#include "advmatch/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "advmatch/error.hpp"
#include "advmatch/offline.hpp"

namespace advmatch {

Instance gen_uniform(std::size_t n, double lo, double hi, std::uint64_t seed, bool integer_mode) {
  if (n == 0) throw InvalidArgument("gen_uniform: n must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw InvalidArgument("gen_uniform: empty or non-finite range");
  }
  std::mt19937_64 rng(seed);
  RawInstance raw;
  raw.servers.resize(n);
  raw.requests.resize(n);

  if (integer_mode) {
    const auto ilo = static_cast<std::int64_t>(std::ceil(lo));
    const auto ihi = static_cast<std::int64_t>(std::floor(hi));
    if (ilo > ihi) throw InvalidArgument("gen_uniform: range holds no integer");
    std::uniform_int_distribution<std::int64_t> dist(ilo, ihi);
    std::vector<std::int64_t> s(n), r(n);
    for (auto& x : s) x = dist(rng);
    for (auto& x : r) x = dist(rng);
    const std::int64_t shift = 1 - *std::min_element(s.begin(), s.end());
    for (std::size_t i = 0; i < n; ++i) {
      raw.servers[i] = static_cast<double>(s[i] + shift);
      raw.requests[i] = static_cast<double>(r[i] + shift);
    }
  } else {
    std::uniform_real_distribution<double> dist(lo, hi);
    for (auto& x : raw.servers) x = dist(rng);
    for (auto& x : raw.requests) x = dist(rng);
  }
  return validate_instance(std::move(raw));
}

std::vector<double> family_rho0(std::size_t n) {
  std::vector<double> rho(n);
  for (std::size_t i = 0; i < n; ++i) {
    rho[i] = static_cast<double>(n) - std::ldexp(1.0, -static_cast<int>(i + 1));
  }
  return rho;
}

std::vector<FamilyMember> gen_family(std::size_t n) {
  if (n == 0 || n > kMaxFamilySize) {
    throw InvalidArgument("gen_family: n must lie in [1, " + std::to_string(kMaxFamilySize) + "]");
  }
  if (n == 1) return {FamilyMember{{1.0}, 0}};

  const std::vector<double> rho = family_rho0(n);
  std::vector<FamilyMember> members;
  members.reserve(std::size_t{1} << (n - 1));
  members.push_back({rho, 0});
  for (std::size_t k = 1; k < n; ++k) {
    for (auto& tail : gen_family(k)) {
      FamilyMember m;
      m.branch_depth = k;
      m.requests.assign(rho.begin(), rho.begin() + static_cast<std::ptrdiff_t>(n - k));
      m.requests.insert(m.requests.end(), tail.requests.begin(), tail.requests.end());
      members.push_back(std::move(m));
    }
  }
  return members;
}

Instance family_instance(std::size_t n, const FamilyMember& member) {
  RawInstance raw;
  raw.servers.resize(n);
  for (std::size_t i = 0; i < n; ++i) raw.servers[i] = static_cast<double>(i + 1);
  raw.requests = member.requests;
  return validate_instance(std::move(raw));
}

std::vector<FamilyCheck> verify_family(std::size_t n) {
  if (n > 8) throw InvalidArgument("verify_family: n must be at most 8");
  const auto members = gen_family(n);
  std::vector<FamilyCheck> checks;
  checks.reserve(members.size());
  for (std::size_t m = 0; m < members.size(); ++m) {
    FamilyCheck c;
    c.member = m;
    c.branch_depth = members[m].branch_depth;
    c.expected_request = c.branch_depth == 0 ? n - 1 : n - c.branch_depth - 1;
    const Instance inst = family_instance(n, members[m]);
    c.optima = enumerate_optimal_matchings(inst, [&](std::span<const std::size_t> a) {
      if (a[c.expected_request] != n - 1) ++c.violating_optima;
    });
    c.passed = c.optima > 0 && c.violating_optima == 0;
    checks.push_back(c);
  }
  return checks;
}

namespace {

std::size_t rho0_prefix(std::span<const double> requests, std::span<const double> rho) {
  std::size_t i = 0;
  while (i < requests.size() && requests[i] == rho[i]) ++i;
  return i;
}

bool prefix_structure(std::size_t n, std::span<const double> a, std::span<const double> b) {
  if (std::equal(a.begin(), a.end(), b.begin(), b.end())) return false;
  if (n <= 1) return false;  // I_1 has a single member
  const auto rho = family_rho0(n);
  const std::size_t la = rho0_prefix(a, rho);
  const std::size_t lb = rho0_prefix(b, rho);
  const auto diff = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  const auto first_diff = static_cast<std::size_t>(diff.first - a.begin());
  if (la != lb) return first_diff == std::min(la, lb);
  // Same branching point: the tails are two members of I_k.
  if (la == n) return false;
  const std::size_t k = n - la;
  return prefix_structure(k, a.subspan(la), b.subspan(la));
}

}  // namespace

bool family_prefix_structure_holds(std::size_t n, std::span<const FamilyMember> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].requests.size() != n) return false;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!prefix_structure(n, members[i].requests, members[j].requests)) return false;
    }
  }
  return true;
}

}  // namespace advmatch
