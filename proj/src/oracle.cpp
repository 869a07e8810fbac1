#include "bmssp/oracle.hpp"

#include <bit>
#include <cstdint>
#include <queue>
#include <string>

#include "bmssp/error.hpp"

namespace bmssp {

namespace {

struct HeapEntry {
  PathKey key;
  VertexId vertex;
};

void check_source(const Graph& g, VertexId source) {
  if (source >= g.vertex_count()) {
    throw Error(ErrorCode::BadVertexId, "source " + std::to_string(source));
  }
}

}  // namespace

void run_dijkstra(const Graph& g, SsspState& state) {
  OpCounters& counters = state.counters();
  auto later = [&counters](const HeapEntry& a, const HeapEntry& b) {
    return compare_keys(a.key, b.key, counters) > 0;
  };
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(later)> heap(
      later);
  std::vector<bool> settled(g.vertex_count(), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (state.reached(v)) heap.push({state.key(v), v});
  }
  // Entries are never updated in place; a vertex's first pop is its final one.
  while (!heap.empty()) {
    const VertexId u = heap.top().vertex;
    heap.pop();
    if (settled[u]) continue;
    settled[u] = true;
    for (EdgeId e : g.out_edges(u)) {
      const Edge& edge = g.edge(e);
      if (settled[edge.target]) continue;
      const auto p = propose_relax(state, u, edge.target, edge.weight);
      if (!p.accepted) continue;
      commit_relax(state, u, edge.target, p.candidate);
      heap.push({p.candidate, edge.target});
    }
  }
}

OracleResult dijkstra(const Graph& g, VertexId source) {
  check_source(g, source);
  SsspState state(g.vertex_count());
  state.set_source(source);
  run_dijkstra(g, state);
  return {state.distances(), state.read_counters()};
}

std::vector<double> bellman_ford(const Graph& g, VertexId source) {
  check_source(g, source);
  std::vector<double> dist(g.vertex_count(), kInfinity);
  dist[source] = 0.0;
  for (std::size_t round = 1; round < g.vertex_count(); ++round) {
    bool changed = false;
    for (const Edge& e : g.edges()) {
      if (dist[e.source] == kInfinity) continue;
      const double cand = dist[e.source] + e.weight;
      if (cand < dist[e.target]) {
        dist[e.target] = cand;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist;
}

bool same_distance(double a, double b) noexcept {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

VerifyReport verify(const Graph& g, VertexId source,
                    const std::vector<double>& candidate) {
  const OracleResult expected = dijkstra(g, source);
  VerifyReport report;
  report.oracle_counters = expected.counters;
  const std::size_t n = std::max(expected.distances.size(), candidate.size());
  for (std::size_t v = 0; v < n; ++v) {
    const double want = v < expected.distances.size() ? expected.distances[v]
                                                      : kInfinity;
    const double got = v < candidate.size() ? candidate[v]
                                            : std::numeric_limits<double>::quiet_NaN();
    if (v >= expected.distances.size() || !same_distance(want, got)) {
      report.equal = false;
      report.first_mismatch = Mismatch{static_cast<VertexId>(v), want, got};
      break;
    }
  }
  return report;
}

}  // namespace bmssp
