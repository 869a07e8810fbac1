#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bmssp/graph.hpp"
#include "bmssp/path_key.hpp"
#include "bmssp/sssp_state.hpp"

namespace bmssp {

struct PivotResult {
  std::vector<VertexId> pivots;   // P, a subset of the frontier
  std::vector<VertexId> reached;  // W, in insertion order, frontier first
  std::uint64_t relax_attempts = 0;
  bool early_exit = false;
};

// Reusable per-vertex marks so repeated calls cost O(|W|) rather than O(n).
class PivotScratch {
 public:
  explicit PivotScratch(std::size_t vertex_count)
      : in_w_(vertex_count, 0), in_round_(vertex_count, 0),
        position_(vertex_count, 0) {}

 private:
  friend PivotResult find_pivots(const Graph&, SsspState&, const Bound&,
                                 std::span<const VertexId>, std::uint32_t,
                                 PivotScratch&);
  std::uint32_t next_epoch();

  std::vector<std::uint32_t> in_w_;
  std::vector<std::uint32_t> in_round_;
  std::vector<std::uint32_t> position_;
  std::uint32_t epoch_ = 0;
};

// k rounds of bounded Bellman-Ford relaxation from the frontier. A vertex
// joins W when a relaxation into it is accepted with a key below the bound.
// If W outgrows k|S| after a round, every frontier vertex is a pivot.
// Otherwise the pivots are the frontier vertices that root a pred-tree of at
// least k vertices inside W.
PivotResult find_pivots(const Graph& g, SsspState& state, const Bound& bound,
                        std::span<const VertexId> frontier, std::uint32_t k,
                        PivotScratch& scratch);

PivotResult find_pivots(const Graph& g, SsspState& state, const Bound& bound,
                        std::span<const VertexId> frontier, std::uint32_t k);

}  // namespace bmssp
