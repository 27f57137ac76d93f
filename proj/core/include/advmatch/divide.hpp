#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "advmatch/instance.hpp"
#include "advmatch/lr.hpp"
#include "advmatch/subroutine.hpp"
#include "advmatch/tape.hpp"

namespace advmatch {

// DIVIDE_k splits the sorted servers into k contiguous groups, cuts the line
// into k blocks at the midpoints between neighbouring groups, and learns from
// a short advice prefix which requests are paired across a block boundary in
// the sorted optimum. Those requests (and the servers they need) are "marked"
// and served by LR over the marked servers, fed by an auxiliary tape the
// algorithm writes itself. Everything else is served inside its block by an
// advice-free subroutine.
//
// The divide code works on integer request coordinates with servers in
// [1, N-1]. Requests outside [0, N] are clamped into it before comparison
// with advice words; such requests lie beyond every server, so clamping
// changes the cost of every matching by the same constant.

/// Half-open range [begin, end) of sorted server indices.
struct ServerGroup {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  friend bool operator==(const ServerGroup&, const ServerGroup&) = default;
};

/// Groups S_1..S_k, boundaries p_1..p_{k-1}, blocks
/// (-inf, p_1], (p_1, p_2], ..., (p_{k-1}, +inf).
struct BlockPlan {
  std::vector<ServerGroup> groups;
  std::vector<double> boundaries;

  std::size_t block_count() const { return groups.size(); }
  /// Block containing `position` (0-based).
  std::size_t block_of(double position) const;
  /// Group containing sorted server index `server` (0-based).
  std::size_t group_of(std::size_t server) const;
};

/// The first (n mod k) groups get ceil(n/k) servers, the rest floor(n/k).
/// Throws InvalidArgument unless 1 <= k <= n.
BlockPlan plan_blocks(std::span<const double> sorted_servers, std::size_t k);

/// Decoded advice for one block. Positions are clamped request coordinates.
///
/// q_left: rightmost request of the block paired with an earlier group
/// (N stands for "at or beyond N"). d_left counts requests at q_left that
/// are not paired with an earlier group; m_left counts all requests of the
/// block paired with an earlier group.
///
/// q_right: leftmost request paired with a later group (0 stands for "at or
/// below 0"). d_right counts requests at q_right paired inside the block's
/// group; m_right counts all requests paired with a later group.
struct BlockAdvice {
  std::optional<std::int64_t> q_left;
  std::uint64_t d_left = 0;
  std::uint64_t m_left = 0;
  std::optional<std::int64_t> q_right;
  std::uint64_t d_right = 0;
  std::uint64_t m_right = 0;

  friend bool operator==(const BlockAdvice&, const BlockAdvice&) = default;
};

struct DivideAdvice {
  std::int64_t bound = 0;  // N
  std::size_t n = 0;
  std::vector<BlockAdvice> blocks;

  friend bool operator==(const DivideAdvice&, const DivideAdvice&) = default;
};

/// One word of the advice schedule, for debugging dumps.
struct AdviceField {
  std::string label;
  unsigned width = 0;
  std::uint64_t raw = 0;
  std::string meaning;
};

struct EncodedAdvice {
  BitTape tape;
  DivideAdvice advice;
  std::vector<AdviceField> schedule;
};

/// Upper bound on oracle bits: 2(k-1)*word_width(N) + 4(k-1)*word_width(n).
std::size_t divide_advice_budget(std::size_t k, std::int64_t bound, std::size_t n);

/// Oracle side. Requires an integer-mode instance.
EncodedAdvice encode_divide_advice(const Instance& instance, std::size_t k);

/// Oracle side for integer requests against (possibly real) servers sorted
/// with servers.front() == 1 and servers.back() <= bound - 1.
EncodedAdvice encode_divide_advice(std::span<const double> servers,
                                   std::span<const std::int64_t> requests, std::int64_t bound,
                                   std::size_t k);

/// Algorithm side: reads the fixed schedule. All q_left words (blocks 2..k),
/// all q_right words (blocks 1..k-1), then (d, m) for each present q_right in
/// ascending block order, then (d, m) for each present q_left in descending
/// block order. Appends the schedule to `schedule` when given.
DivideAdvice decode_divide_advice(BitTape& tape, std::size_t k, std::int64_t bound, std::size_t n,
                                  std::vector<AdviceField>* schedule = nullptr);

std::string format_advice_schedule(std::span<const AdviceField> schedule);

/// Servers reserved for requests that cross a block boundary.
struct MarkSets {
  std::vector<std::size_t> marked_right;  // M_R, servers taken by right-crossing requests
  std::vector<std::size_t> marked_left;   // M_L
  std::vector<bool> marked;               // membership in M = M_R u M_L, per server

  bool is_marked(std::size_t server) const { return marked[server]; }
  std::size_t marked_count() const;
  std::vector<std::size_t> unmarked() const;
  /// Servers present in both M_L and M_R.
  std::vector<std::size_t> overlap() const;
};

/// First procedure: for each boundary left to right, reserve the m_right
/// lowest-index servers right of it not yet in M_R. Second procedure: for
/// each block right to left, reserve the m_left highest-index servers left of
/// it not yet in M_L. Throws AdviceError when a procedure runs out of servers.
MarkSets mark_servers(const BlockPlan& plan, const DivideAdvice& advice);

enum class Route { block, marked_left, marked_right };

struct Routing {
  Route route = Route::block;
  std::size_t block = 0;
  friend bool operator==(const Routing&, const Routing&) = default;
};

/// Online classification of arriving requests using only the decoded advice
/// and the counts of earlier arrivals.
class RequestRouter {
 public:
  RequestRouter(const BlockPlan& plan, const DivideAdvice& advice);

  /// Throws AdviceError if the advice asks for more marked requests in a
  /// block than its m count.
  Routing route(std::int64_t request);

 private:
  struct Counters {
    std::uint64_t at_q_left = 0;
    std::uint64_t at_q_right = 0;
    std::uint64_t marked_left = 0;
    std::uint64_t marked_right = 0;
  };

  const BlockPlan* plan_;
  const DivideAdvice* advice_;
  std::vector<Counters> counters_;
};

/// Live serving state of one DIVIDE_k run.
class DivideServer {
 public:
  /// `block_algorithms[j]` serves block j over the unmarked servers of
  /// group j. `servers` must outlive the DivideServer.
  DivideServer(std::span<const double> servers, const BlockPlan& plan, const DivideAdvice& advice,
               const MarkSets& marks,
               std::vector<std::unique_ptr<Subroutine>> block_algorithms);

  struct Served {
    PoolServer server;
    Routing routing;
    bool lr_read_bit = false;
  };

  Served serve(std::int64_t request);

  const AuxTape& aux_tape() const { return aux_; }

 private:
  std::span<const double> servers_;
  RequestRouter router_;
  LrMatcher lr_;
  AuxTape aux_;
  std::vector<std::vector<PoolServer>> free_;  // unmarked free servers per block
  std::vector<std::unique_ptr<Subroutine>> algorithms_;
};

/// Unmarked servers of each group, in index order.
std::vector<std::vector<PoolServer>> block_pools(std::span<const double> servers,
                                                 const BlockPlan& plan, const MarkSets& marks);

struct DivideRun {
  Matching matching;
  BlockPlan plan;
  DivideAdvice advice;
  MarkSets marks;
  std::vector<AdviceField> schedule;
  std::vector<Routing> routes;  // per request

  std::size_t oracle_bits_written = 0;
  std::size_t oracle_bits_read = 0;
  std::size_t aux_bits_written = 0;
  std::size_t aux_bits_removed = 0;
  std::size_t aux_bits_read = 0;

  /// Cost of the marked requests (served by LR).
  double lr_cost = 0.0;
  /// Cost of the unmarked requests of each block (served by the subroutine).
  std::vector<double> block_costs;
  std::vector<std::size_t> unmarked_requests;  // per block
  std::vector<std::size_t> unmarked_servers;   // per block
  std::size_t marked_requests = 0;
};

/// Full DIVIDE_k run on an integer-mode instance. Throws InvalidArgument
/// otherwise.
DivideRun divide_run(const Instance& instance, std::size_t k, SubroutineKind kind);

/// Core entry shared with RESCALE; preconditions as for encode_divide_advice.
DivideRun divide_run(std::span<const double> servers, std::span<const std::int64_t> requests,
                     std::int64_t bound, std::size_t k, SubroutineKind kind);

/// The instance handed to DIVIDE_k by RESCALE: s'_i = n^3 (s_i - s_1) + 1 and
/// r'_i = floor(n^3 (r_i - s_1)) + 1.
struct RescaledInstance {
  std::vector<double> servers;
  std::vector<std::int64_t> requests;
  std::int64_t bound = 0;
  double scale = 1.0;  // n^3
};

RescaledInstance rescale_instance(const Instance& instance);

struct RescaleRun {
  Matching matching;  // in original coordinates
  double scaled_cost = 0.0;
  RescaledInstance scaled_instance;
  DivideRun scaled;
};

RescaleRun rescale_run(const Instance& instance, std::size_t k, SubroutineKind kind);

}  // namespace advmatch
