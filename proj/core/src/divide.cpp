#include "advmatch/divide.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "advmatch/error.hpp"

namespace advmatch {

std::size_t BlockPlan::block_of(double position) const {
  const auto it = std::lower_bound(boundaries.begin(), boundaries.end(), position);
  return static_cast<std::size_t>(it - boundaries.begin());
}

std::size_t BlockPlan::group_of(std::size_t server) const {
  const auto it = std::upper_bound(groups.begin(), groups.end(), server,
                                   [](std::size_t s, const ServerGroup& g) { return s < g.end; });
  if (it == groups.end()) throw InvalidArgument("server index outside every group");
  return static_cast<std::size_t>(it - groups.begin());
}

BlockPlan plan_blocks(std::span<const double> sorted_servers, std::size_t k) {
  const std::size_t n = sorted_servers.size();
  if (k < 1 || k > n) {
    throw InvalidArgument("k must lie in [1, n]; got k=" + std::to_string(k) +
                          ", n=" + std::to_string(n));
  }
  const std::size_t small = n / k;
  const std::size_t large = (n + k - 1) / k;
  const std::size_t with_large = n % k;

  BlockPlan plan;
  plan.groups.reserve(k);
  std::size_t begin = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t size = i < with_large ? large : small;
    plan.groups.push_back({begin, begin + size});
    begin += size;
  }
  plan.boundaries.reserve(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    plan.boundaries.push_back(
        (sorted_servers[plan.groups[i].end - 1] + sorted_servers[plan.groups[i + 1].begin]) / 2.0);
  }
  return plan;
}

std::size_t divide_advice_budget(std::size_t k, std::int64_t bound, std::size_t n) {
  const std::size_t boundaries = k - 1;
  return 2 * boundaries * word_width(static_cast<std::uint64_t>(bound)) +
         4 * boundaries * word_width(n);
}

namespace {

std::int64_t clamp_position(std::int64_t r, std::int64_t bound) {
  return std::clamp<std::int64_t>(r, 0, bound);
}

void check_divide_input(std::span<const double> servers, std::span<const std::int64_t> requests,
                        std::int64_t bound) {
  if (servers.empty() || servers.size() != requests.size()) {
    throw InvalidArgument("divide: servers and requests must be nonempty and of equal size");
  }
  if (!std::is_sorted(servers.begin(), servers.end())) throw InvalidArgument("divide: unsorted servers");
  if (servers.front() != 1.0) throw InvalidArgument("divide: leftmost server must sit at 1");
  if (servers.back() > static_cast<double>(bound - 1)) {
    throw InvalidArgument("divide: bound N must satisfy s_n <= N - 1");
  }
}

std::string describe_q_left(std::uint64_t raw, std::int64_t bound) {
  if (raw == 0) return "absent";
  if (static_cast<std::int64_t>(raw) == bound) return "+inf (request at or beyond N)";
  return "position " + std::to_string(raw);
}

std::string describe_q_right(std::uint64_t raw, std::int64_t bound) {
  if (static_cast<std::int64_t>(raw) == bound) return "absent";
  if (raw == 0) return "-inf (request at or below 0)";
  return "position " + std::to_string(raw);
}

}  // namespace

EncodedAdvice encode_divide_advice(std::span<const double> servers,
                                   std::span<const std::int64_t> requests, std::int64_t bound,
                                   std::size_t k) {
  check_divide_input(servers, requests, bound);
  const std::size_t n = servers.size();
  const BlockPlan plan = plan_blocks(servers, k);

  // Reference matching: sorted on clamped positions, ties by arrival.
  std::vector<std::int64_t> clamped(n);
  for (std::size_t i = 0; i < n; ++i) clamped[i] = clamp_position(requests[i], bound);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return clamped[a] < clamped[b]; });
  std::vector<std::size_t> block(n);
  std::vector<std::size_t> group(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    const std::size_t i = order[rank];
    block[i] = plan.block_of(static_cast<double>(clamped[i]));
    group[i] = plan.group_of(rank);
  }

  DivideAdvice advice;
  advice.bound = bound;
  advice.n = n;
  advice.blocks.resize(k);
  for (std::size_t i = 0; i < n; ++i) {
    auto& b = advice.blocks[block[i]];
    if (group[i] < block[i]) {
      b.q_left = std::max(b.q_left.value_or(clamped[i]), clamped[i]);
      ++b.m_left;
    } else if (group[i] > block[i]) {
      b.q_right = std::min(b.q_right.value_or(clamped[i]), clamped[i]);
      ++b.m_right;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& b = advice.blocks[block[i]];
    if (b.q_left && clamped[i] == *b.q_left && group[i] >= block[i]) ++b.d_left;
    if (b.q_right && clamped[i] == *b.q_right && group[i] == block[i]) ++b.d_right;
  }

  const unsigned position_width = word_width(static_cast<std::uint64_t>(bound));
  const unsigned count_width = word_width(n);
  BitTape tape;
  for (std::size_t j = 1; j < k; ++j) {
    tape.write_word(static_cast<std::uint64_t>(advice.blocks[j].q_left.value_or(0)), position_width);
  }
  for (std::size_t j = 0; j + 1 < k; ++j) {
    tape.write_word(static_cast<std::uint64_t>(advice.blocks[j].q_right.value_or(bound)),
                    position_width);
  }
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const auto& b = advice.blocks[j];
    if (!b.q_right) continue;
    tape.write_word(b.d_right, count_width);
    tape.write_word(b.m_right, count_width);
  }
  for (std::size_t j = k; j-- > 1;) {
    const auto& b = advice.blocks[j];
    if (!b.q_left) continue;
    tape.write_word(b.d_left, count_width);
    tape.write_word(b.m_left, count_width);
  }

  EncodedAdvice out;
  BitTape replay = tape;
  out.advice = decode_divide_advice(replay, k, bound, n, &out.schedule);
  if (out.advice != advice || replay.remaining() != 0) {
    throw AdviceError("divide advice does not survive its own decoder");
  }
  out.tape = std::move(tape);
  return out;
}

EncodedAdvice encode_divide_advice(const Instance& instance, std::size_t k) {
  if (!instance.integer_mode()) throw InvalidArgument("DIVIDE_k advice needs an integer-mode instance");
  std::vector<std::int64_t> requests;
  requests.reserve(instance.size());
  for (double r : instance.requests()) requests.push_back(static_cast<std::int64_t>(r));
  return encode_divide_advice(instance.servers(), requests, instance.bound(), k);
}

DivideAdvice decode_divide_advice(BitTape& tape, std::size_t k, std::int64_t bound, std::size_t n,
                                  std::vector<AdviceField>* schedule) {
  if (k < 1 || k > n) throw InvalidArgument("k must lie in [1, n]");
  const unsigned position_width = word_width(static_cast<std::uint64_t>(bound));
  const unsigned count_width = word_width(n);
  const auto ubound = static_cast<std::uint64_t>(bound);

  auto log = [&](std::string label, unsigned width, std::uint64_t raw, std::string meaning) {
    if (schedule) schedule->push_back({std::move(label), width, raw, std::move(meaning)});
  };
  auto read_count = [&](const std::string& label) {
    const std::uint64_t v = tape.read_word(count_width);
    if (v > n) throw AdviceError(label + " exceeds n");
    log(label, count_width, v, std::to_string(v));
    return v;
  };

  DivideAdvice advice;
  advice.bound = bound;
  advice.n = n;
  advice.blocks.resize(k);
  for (std::size_t j = 1; j < k; ++j) {
    const std::uint64_t raw = tape.read_word(position_width);
    if (raw > ubound) throw AdviceError("q_left word above N");
    if (raw != 0) advice.blocks[j].q_left = static_cast<std::int64_t>(raw);
    log("q_L[B" + std::to_string(j + 1) + "]", position_width, raw, describe_q_left(raw, bound));
  }
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const std::uint64_t raw = tape.read_word(position_width);
    if (raw > ubound) throw AdviceError("q_right word above N");
    if (raw != ubound) advice.blocks[j].q_right = static_cast<std::int64_t>(raw);
    log("q_R[B" + std::to_string(j + 1) + "]", position_width, raw, describe_q_right(raw, bound));
  }
  for (std::size_t j = 0; j + 1 < k; ++j) {
    auto& b = advice.blocks[j];
    if (!b.q_right) continue;
    b.d_right = read_count("d_R[B" + std::to_string(j + 1) + "]");
    b.m_right = read_count("m_R[B" + std::to_string(j + 1) + "]");
  }
  for (std::size_t j = k; j-- > 1;) {
    auto& b = advice.blocks[j];
    if (!b.q_left) continue;
    b.d_left = read_count("d_L[B" + std::to_string(j + 1) + "]");
    b.m_left = read_count("m_L[B" + std::to_string(j + 1) + "]");
  }
  return advice;
}

std::string format_advice_schedule(std::span<const AdviceField> schedule) {
  std::ostringstream out;
  std::size_t offset = 0;
  for (const auto& f : schedule) {
    out << f.label << " bits=[" << offset << "," << offset + f.width << ") width=" << f.width
        << " raw=" << f.raw << " -> " << f.meaning << '\n';
    offset += f.width;
  }
  return out.str();
}

std::size_t MarkSets::marked_count() const {
  return static_cast<std::size_t>(std::count(marked.begin(), marked.end(), true));
}

std::vector<std::size_t> MarkSets::unmarked() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < marked.size(); ++i) {
    if (!marked[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> MarkSets::overlap() const {
  std::vector<std::size_t> right = marked_right;
  std::vector<std::size_t> left = marked_left;
  std::sort(right.begin(), right.end());
  std::sort(left.begin(), left.end());
  std::vector<std::size_t> both;
  std::set_intersection(right.begin(), right.end(), left.begin(), left.end(),
                        std::back_inserter(both));
  return both;
}

MarkSets mark_servers(const BlockPlan& plan, const DivideAdvice& advice) {
  const std::size_t k = plan.block_count();
  const std::size_t n = plan.groups.back().end;
  if (advice.blocks.size() != k) throw AdviceError("advice and plan disagree on k");

  MarkSets marks;
  std::vector<bool> in_right(n, false);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    std::uint64_t needed = advice.blocks[i].m_right;
    for (std::size_t s = plan.groups[i + 1].begin; s < n && needed > 0; ++s) {
      if (in_right[s]) continue;
      in_right[s] = true;
      marks.marked_right.push_back(s);
      --needed;
    }
    if (needed > 0) throw AdviceError("first marking procedure ran out of servers");
  }

  std::vector<bool> in_left(n, false);
  for (std::size_t j = k; j-- > 1;) {
    std::uint64_t needed = advice.blocks[j].m_left;
    for (std::size_t s = plan.groups[j].begin; s-- > 0 && needed > 0;) {
      if (in_left[s]) continue;
      in_left[s] = true;
      marks.marked_left.push_back(s);
      --needed;
    }
    if (needed > 0) throw AdviceError("second marking procedure ran out of servers");
  }

  marks.marked.resize(n);
  for (std::size_t s = 0; s < n; ++s) marks.marked[s] = in_right[s] || in_left[s];
  return marks;
}

RequestRouter::RequestRouter(const BlockPlan& plan, const DivideAdvice& advice)
    : plan_(&plan), advice_(&advice), counters_(plan.block_count()) {}

Routing RequestRouter::route(std::int64_t request) {
  const std::int64_t c = clamp_position(request, advice_->bound);
  const std::size_t j = plan_->block_of(static_cast<double>(c));
  const BlockAdvice& a = advice_->blocks[j];
  Counters& count = counters_[j];

  Route route = Route::block;
  if (a.q_left && c < *a.q_left) {
    route = Route::marked_left;
  } else if (a.q_right && c > *a.q_right) {
    route = Route::marked_right;
  } else if (a.q_left && a.q_right && c == *a.q_left && c == *a.q_right) {
    // Both crossing directions meet at this position: right-crossing
    // arrivals first, then the ones paired inside, then left-crossing.
    const std::uint64_t arrival = ++count.at_q_left;
    const std::uint64_t right_quota = a.d_left > a.d_right ? a.d_left - a.d_right : 0;
    if (arrival <= right_quota) {
      route = Route::marked_right;
    } else if (arrival <= a.d_left) {
      route = Route::block;
    } else {
      route = Route::marked_left;
    }
  } else if (a.q_left && c == *a.q_left) {
    route = ++count.at_q_left <= a.d_left ? Route::block : Route::marked_left;
  } else if (a.q_right && c == *a.q_right) {
    route = ++count.at_q_right <= a.d_right ? Route::block : Route::marked_right;
  }

  if (route == Route::marked_left && ++count.marked_left > a.m_left) {
    throw AdviceError("block " + std::to_string(j + 1) + " marks more left-crossing requests than m_L");
  }
  if (route == Route::marked_right && ++count.marked_right > a.m_right) {
    throw AdviceError("block " + std::to_string(j + 1) + " marks more right-crossing requests than m_R");
  }
  return {route, j};
}

std::vector<std::vector<PoolServer>> block_pools(std::span<const double> servers,
                                                 const BlockPlan& plan, const MarkSets& marks) {
  std::vector<std::vector<PoolServer>> pools(plan.block_count());
  for (std::size_t j = 0; j < plan.block_count(); ++j) {
    for (std::size_t s = plan.groups[j].begin; s < plan.groups[j].end; ++s) {
      if (!marks.is_marked(s)) pools[j].push_back({s, servers[s]});
    }
  }
  return pools;
}

namespace {

std::vector<PoolServer> marked_pool(std::span<const double> servers, const MarkSets& marks) {
  std::vector<PoolServer> pool;
  for (std::size_t s = 0; s < servers.size(); ++s) {
    if (marks.is_marked(s)) pool.push_back({s, servers[s]});
  }
  return pool;
}

}  // namespace

DivideServer::DivideServer(std::span<const double> servers, const BlockPlan& plan,
                           const DivideAdvice& advice, const MarkSets& marks,
                           std::vector<std::unique_ptr<Subroutine>> block_algorithms)
    : servers_(servers),
      router_(plan, advice),
      lr_(marked_pool(servers, marks)),
      free_(block_pools(servers, plan, marks)),
      algorithms_(std::move(block_algorithms)) {
  if (algorithms_.size() != plan.block_count()) {
    throw InvalidArgument("one subroutine per block is required");
  }
}

DivideServer::Served DivideServer::serve(std::int64_t request) {
  Served out;
  out.routing = router_.route(request);
  const auto position = static_cast<double>(request);

  if (out.routing.route == Route::block) {
    auto& pool = free_[out.routing.block];
    if (pool.empty()) {
      throw AdviceError("block " + std::to_string(out.routing.block + 1) + " has no free server left");
    }
    out.server = algorithms_[out.routing.block]->serve(pool, position);
    const auto it = std::find(pool.begin(), pool.end(), out.server);
    if (it == pool.end()) throw SubroutineError("subroutine answered with a server outside its block");
    pool.erase(it);
    return out;
  }

  if (lr_.unmatched() == 0) throw AdviceError("more marked requests than marked servers");
  aux_.write_bit(out.routing.route == Route::marked_right);
  const auto step = lr_.serve(position, aux_);
  // A forced LR move leaves the freshly written bit unread; withdraw it.
  if (!step.read_bit) aux_.remove_last();
  out.server = step.server;
  out.lr_read_bit = step.read_bit;
  return out;
}

DivideRun divide_run(std::span<const double> servers, std::span<const std::int64_t> requests,
                     std::int64_t bound, std::size_t k, SubroutineKind kind) {
  const std::size_t n = servers.size();
  EncodedAdvice encoded = encode_divide_advice(servers, requests, bound, k);

  DivideRun run;
  run.oracle_bits_written = encoded.tape.size();
  BitTape tape = encoded.tape;
  run.plan = plan_blocks(servers, k);
  run.advice = decode_divide_advice(tape, k, bound, n, &run.schedule);
  run.oracle_bits_read = tape.bits_read();
  run.marks = mark_servers(run.plan, run.advice);
  if (!run.marks.overlap().empty()) throw AdviceError("a server is marked from both sides");

  const auto pools = block_pools(servers, run.plan, run.marks);

  // The clairvoyant double is handed each block's future unmarked requests.
  // Routing depends only on positions and advice, so a dry run recovers them.
  std::vector<std::vector<double>> sealed(k);
  {
    RequestRouter dry(run.plan, run.advice);
    for (std::int64_t r : requests) {
      const Routing routing = dry.route(r);
      if (routing.route == Route::block) sealed[routing.block].push_back(static_cast<double>(r));
    }
  }
  std::vector<std::unique_ptr<Subroutine>> algorithms;
  algorithms.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (kind == SubroutineKind::clairvoyant && sealed[j].size() != pools[j].size()) {
      throw AdviceError("block " + std::to_string(j + 1) + " request and server counts differ");
    }
    algorithms.push_back(make_subroutine(kind, pools[j], sealed[j]));
  }

  DivideServer server(servers, run.plan, run.advice, run.marks, std::move(algorithms));
  std::vector<std::size_t> assignment(n);
  run.routes.resize(n);
  run.block_costs.assign(k, 0.0);
  run.unmarked_requests.assign(k, 0);
  run.unmarked_servers.resize(k);
  for (std::size_t j = 0; j < k; ++j) run.unmarked_servers[j] = pools[j].size();

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto served = server.serve(requests[i]);
    assignment[i] = served.server.index;
    run.routes[i] = served.routing;
    const double d = std::abs(static_cast<double>(requests[i]) - served.server.position);
    total += d;
    if (served.routing.route == Route::block) {
      run.block_costs[served.routing.block] += d;
      ++run.unmarked_requests[served.routing.block];
    } else {
      run.lr_cost += d;
      ++run.marked_requests;
    }
  }

  const AuxTape& aux = server.aux_tape();
  run.aux_bits_written = aux.bits_written();
  run.aux_bits_removed = aux.bits_removed();
  run.aux_bits_read = aux.bits_read();
  run.matching.assignment = std::move(assignment);
  run.matching.cost = total;
  return run;
}

DivideRun divide_run(const Instance& instance, std::size_t k, SubroutineKind kind) {
  if (!instance.integer_mode()) throw InvalidArgument("DIVIDE_k needs an integer-mode instance");
  std::vector<std::int64_t> requests;
  requests.reserve(instance.size());
  for (double r : instance.requests()) requests.push_back(static_cast<std::int64_t>(r));
  DivideRun run = divide_run(instance.servers(), requests, instance.bound(), k, kind);
  run.matching.cost = total_cost(instance, run.matching.assignment);
  return run;
}

}  // namespace advmatch
