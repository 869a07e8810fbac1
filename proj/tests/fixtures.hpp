#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "bmssp/generators.hpp"
#include "bmssp/graph.hpp"
#include "bmssp/oracle.hpp"
#include "bmssp/sssp_state.hpp"

namespace fixtures {

using namespace bmssp;

inline Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed, double w_max = 20) {
  GenSpec spec;
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  spec.w_max = w_max;
  return generate(spec);
}

inline Graph layered_graph(std::size_t n, std::uint64_t seed) {
  GenSpec spec;
  spec.kind = GenKind::Layered;
  spec.n = n;
  spec.seed = seed;
  return generate(spec);
}

// Final labels from `source`.
inline SsspState oracle_state(const Graph& g, VertexId source) {
  SsspState st(g.vertex_count());
  st.set_source(source);
  run_dijkstra(g, st);
  return st;
}

// A mid-run state as Dijkstra would leave it: the `settled` closest vertices
// carry final labels and their out-edges are relaxed. The frontier is every
// other labelled vertex with key below `bound`.
struct Frontier {
  SsspState state;
  std::vector<VertexId> S;
};

inline Frontier frontier_state(const Graph& g, const SsspState& oracle, std::size_t settled,
                               const Bound& bound) {
  std::vector<VertexId> order;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (oracle.reached(v)) order.push_back(v);
  }
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return oracle.key(a) < oracle.key(b); });
  settled = std::min(settled, order.size());
  Frontier f{SsspState(g.vertex_count()), {}};
  f.state.set_source(order[0]);
  std::vector<bool> done(g.vertex_count(), false);
  for (std::size_t i = 0; i < settled; ++i) {
    const VertexId v = order[i];
    done[v] = true;
    if (i > 0) f.state.assign(v, oracle.key(v), oracle.pred(v));
  }
  for (std::size_t i = 0; i < settled; ++i) {
    for (EdgeId e : g.out_edges(order[i])) {
      const Edge& edge = g.edge(e);
      try_relax(f.state, edge.source, edge.target, edge.weight);
    }
  }
  if (settled == 0) {
    f.S.push_back(order[0]);
    return f;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!done[v] && f.state.reached(v) && f.state.key(v) < bound) f.S.push_back(v);
  }
  return f;
}

// Vertices with true key below `bound` whose oracle-tree path meets a
// vertex of `roots` that is complete in `state`.
inline std::set<VertexId> covered_below(const Graph& g, const SsspState& oracle,
                                        const SsspState& state,
                                        const std::vector<VertexId>& roots, const Bound& bound) {
  std::vector<std::vector<VertexId>> children(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (oracle.pred(v) != kNoVertex) children[oracle.pred(v)].push_back(v);
  }
  std::set<VertexId> out;
  std::vector<VertexId> stack;
  for (VertexId r : roots) {
    if (state.reached(r) && state.key(r) == oracle.key(r) && oracle.key(r) < bound) {
      stack.push_back(r);
    }
  }
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (!out.insert(v).second) continue;
    for (VertexId c : children[v]) {
      if (oracle.key(c) < bound) stack.push_back(c);
    }
  }
  return out;
}

}  // namespace fixtures
