#pragma once

#include <optional>
#include <vector>

#include "bmssp/graph.hpp"
#include "bmssp/path_key.hpp"
#include "bmssp/sssp_state.hpp"

namespace bmssp {

struct OracleResult {
  std::vector<double> distances;  // kInfinity when unreachable
  OpCounters counters;
};

// Binary-heap Dijkstra over the PathKey order, driven by the same relaxation
// primitive as the main solver. `state` must already have its source set; on
// return it holds final labels (length, hops, pred) for every vertex.
void run_dijkstra(const Graph& g, SsspState& state);

// Throws Error(BadVertexId).
OracleResult dijkstra(const Graph& g, VertexId source);

// Plain Bellman-Ford on lengths only, with no heap and no tie-breaking. Stops
// early once a round changes nothing. Throws Error(BadVertexId).
std::vector<double> bellman_ford(const Graph& g, VertexId source);

struct Mismatch {
  VertexId vertex;
  double expected;
  double got;
};

struct VerifyReport {
  bool equal = true;
  std::optional<Mismatch> first_mismatch;
  OpCounters oracle_counters;
};

// Exact comparison of candidate distances against Dijkstra: equal means
// bitwise-identical doubles (infinity matches infinity). A candidate of the
// wrong length mismatches at the first missing or extra vertex.
VerifyReport verify(const Graph& g, VertexId source,
                    const std::vector<double>& candidate);

bool same_distance(double a, double b) noexcept;

}  // namespace bmssp
