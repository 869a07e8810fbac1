#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bmssp/block_seq.hpp"
#include "bmssp/graph.hpp"
#include "bmssp/path_key.hpp"
#include "bmssp/pivots.hpp"
#include "bmssp/sssp_state.hpp"

namespace bmssp {

struct SolverParams {
  std::uint32_t k = 1;      // floor(log2(n)^(1/3)), at least 1
  std::uint32_t t = 1;      // floor(log2(n)^(2/3)), at least 1
  std::uint32_t l_top = 1;  // ceil(log2(n) / t), at least 1

  friend bool operator==(const SolverParams&, const SolverParams&) = default;
};

// n is the vertex count of the constant-degree graph the recursion runs on.
SolverParams compute_params(std::size_t n);

struct BmsspResult {
  Bound b_prime;
  std::vector<VertexId> U;
};

// One record per recursion node, written when the node returns.
struct TraceRecord {
  std::uint32_t id = 0;
  std::int64_t parent = -1;
  std::uint32_t l = 0;
  std::size_t size_s = 0;
  std::size_t size_p = 0;
  std::size_t size_w = 0;
  std::size_t size_u = 0;
  Bound bound;
  Bound b_prime;
  bool partial = false;
};

struct SolveOptions {
  // Run the recursion even on graphs small enough for the Dijkstra fallback.
  bool force_bmssp = false;
  bool trace = false;
  // Precompute oracle labels and check the per-node contracts of the
  // recursion as it runs. Violations are counted, never thrown.
  bool check_invariants = false;
};

// Violation counters, one per checked contract.
struct InvariantChecks {
  std::uint64_t nodes_checked = 0;
  std::uint64_t completeness = 0;      // U != {v : d(v) < B', path meets S} or d^ != d on U
  std::uint64_t size_bounds = 0;       // |U| > 4k2^{lt}, or partial with |U| < k2^{lt}
  std::uint64_t pivot_size = 0;        // |P| > |W| / k
  std::uint64_t progress = 0;          // a live key below B'_{i-1} before iteration i
  std::uint64_t disjointness = 0;      // children overlap or leave [B'_{i-1}, B'_i)
  std::uint64_t pivot_economy = 0;     // |P| > |U| / k
  std::uint64_t edge_insert_once = 0;  // an edge caused two direct inserts
  std::uint64_t top_level = 0;         // root returned B' < infinity
  std::string first_failure;

  std::uint64_t violations() const noexcept {
    return completeness + size_bounds + pivot_size + progress + disjointness +
           pivot_economy + edge_insert_once + top_level;
  }
  bool ok() const noexcept { return violations() == 0; }
};

struct SolverStats {
  std::uint64_t nodes = 0;
  std::uint64_t base_cases = 0;
  std::uint64_t partial_nodes = 0;
  std::uint64_t direct_inserts = 0;  // insert() calls from edge relaxation
  std::uint64_t pivot_inserts = 0;
  std::uint64_t prepended = 0;
  std::uint64_t pulls = 0;
  std::uint64_t pivot_relaxations = 0;
  std::uint64_t stale_erased = 0;  // entries dropped because a child completed their key
};

// Drives the bounded multi-source recursion over one constant-degree graph
// and one exclusively owned label state.
class BmsspContext {
 public:
  // `oracle`, when given, holds final labels from the same source and enables
  // invariant checks; it must outlive the context.
  BmsspContext(const Graph& g, SsspState& state, SolverParams params,
               const SsspState* oracle = nullptr, bool trace = false);

  // Bounded mini-Dijkstra from a single complete vertex. Extracts until k+1
  // vertices are settled or nothing below the bound is left.
  // Throws Error(NotSingleton).
  BmsspResult base_case(const Bound& bound, std::span<const VertexId> frontier);

  // Throws Error(FrontierTooLarge) if |frontier| > 2^{l t}.
  BmsspResult bmssp(std::uint32_t l, const Bound& bound,
                    std::span<const VertexId> frontier);

  const SolverParams& params() const noexcept { return params_; }
  const SolverStats& stats() const noexcept { return stats_; }
  const InvariantChecks& checks() const noexcept { return checks_; }
  InvariantChecks& checks() noexcept { return checks_; }
  const std::vector<TraceRecord>& trace() const noexcept { return trace_; }

  // 2^{l t}, saturating at 4n.
  std::uint64_t frontier_limit(std::uint32_t l) const noexcept;

 private:
  BmsspResult run_node(std::uint32_t l, const Bound& bound,
                       std::span<const VertexId> frontier, std::int64_t parent);
  BmsspResult run_base(const Bound& bound, std::span<const VertexId> frontier,
                       std::int64_t parent);
  std::uint32_t next_mark();
  std::span<SlotRef> slot_table(std::uint32_t l);

  void fail(std::uint64_t& counter, const std::string& what);
  void check_node(std::uint32_t l, const Bound& bound,
                  std::span<const VertexId> frontier, const BmsspResult& res);
  PathKey true_key(VertexId v) const { return oracle_->key(v); }

  const Graph& g_;
  SsspState& state_;
  SolverParams params_;
  const SsspState* oracle_;
  bool trace_on_;

  PivotScratch pivot_scratch_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<std::vector<SlotRef>> slot_tables_;

  // Oracle shortest-path tree as CSR children lists; built with checks only.
  std::vector<std::uint32_t> tree_start_;
  std::vector<VertexId> tree_children_;
  std::vector<std::uint8_t> direct_inserts_per_edge_;

  SolverStats stats_;
  InvariantChecks checks_;
  std::vector<TraceRecord> trace_;
  std::uint32_t next_node_id_ = 0;
};

struct SolveReport {
  std::vector<double> distances;  // per original vertex; kInfinity if unreachable
  OpCounters counters;
  SolverParams params;
  std::size_t transformed_vertices = 0;
  std::size_t transformed_edges = 0;
  bool used_bmssp = false;
  Bound root_b_prime;
  SolverStats stats;
  InvariantChecks checks;
  std::vector<TraceRecord> trace;
};

// Single-source distances via the constant-degree transformation and the
// recursion at level l_top with S = {source}, B = infinity. Constant-degree
// graphs under 16 vertices use Dijkstra unless force_bmssp is set.
// Throws Error(BadVertexId), or Error(InvariantViolation) if the root call is
// not a successful execution.
SolveReport solve_sssp(const Graph& g, VertexId source,
                       const SolveOptions& options = {});

}  // namespace bmssp
