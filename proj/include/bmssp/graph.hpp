#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace bmssp {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
  VertexId source;
  VertexId target;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable directed graph with non-negative weights. Edges keep their input
// order; adjacency is a CSR index of outgoing edge ids per vertex, in input
// order. Parallel edges and self-loops are allowed.
class Graph {
 public:
  Graph() = default;

  // Throws Error(NegativeWeight) or Error(BadVertexId).
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const EdgeId> out_edges(VertexId v) const {
    return {out_.data() + offsets_[v], out_.data() + offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> out_;
};

Graph build_graph(std::size_t vertex_count, std::vector<Edge> edges);

// Constant-degree image of a graph: every vertex becomes a zero-weight cycle
// with one node per incident edge endpoint, and each original edge links the
// matching cycle nodes with its original weight.
struct TransformedGraph {
  Graph graph;
  std::vector<VertexId> representative;  // original -> first cycle node
  std::vector<VertexId> origin;          // transformed -> original
};

TransformedGraph to_constant_degree(const Graph& g);

}  // namespace bmssp
