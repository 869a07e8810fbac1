#include "bmssp/graph.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "bmssp/error.hpp"
#include "bmssp/path_key.hpp"

namespace bmssp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::BadVertexId: return "BadVertexId";
    case ErrorCode::Unreached: return "Unreached";
    case ErrorCode::BadCapacity: return "BadCapacity";
    case ErrorCode::ValueAboveBound: return "ValueAboveBound";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::NotSingleton: return "NotSingleton";
    case ErrorCode::FrontierTooLarge: return "FrontierTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, const PathKey& k) {
  return os << '(' << k.length << ", " << k.hops << ", " << k.endpoint << ')';
}

std::ostream& operator<<(std::ostream& os, const Bound& b) {
  if (b.is_infinite()) return os << "inf";
  return os << b.key();
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (edges_.size() >= kNoVertex) {
    throw Error(ErrorCode::BadSpec, "too many edges");
  }
  if (vertex_count_ >= kNoVertex) {
    throw Error(ErrorCode::BadVertexId, "too many vertices");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.source >= vertex_count_ || e.target >= vertex_count_) {
      throw Error(ErrorCode::BadVertexId,
                  "edge " + std::to_string(i) + " has endpoint outside [0, " +
                      std::to_string(vertex_count_) + ")");
    }
    // Written as !(w >= 0) so NaN is rejected too.
    if (!(e.weight >= 0.0)) {
      throw Error(ErrorCode::NegativeWeight,
                  "edge " + std::to_string(i) + " has weight " +
                      std::to_string(e.weight));
    }
  }

  offsets_.assign(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) ++offsets_[e.source + 1];
  for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] += offsets_[v];
  out_.resize(edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_[fill[edges_[i].source]++] = static_cast<EdgeId>(i);
  }
}

Graph build_graph(std::size_t vertex_count, std::vector<Edge> edges) {
  return Graph(vertex_count, std::move(edges));
}

namespace {

struct Slot {
  VertexId neighbor;
  std::uint8_t incoming;  // 0 for the tail end of an edge, 1 for the head end
  EdgeId edge;
};

}  // namespace

TransformedGraph to_constant_degree(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto& edges = g.edges();

  // Bucket the 2m edge endpoints by vertex.
  std::vector<std::size_t> start(n + 1, 0);
  for (const Edge& e : edges) {
    ++start[e.source + 1];
    ++start[e.target + 1];
  }
  for (std::size_t v = 0; v < n; ++v) start[v + 1] += start[v];
  std::vector<Slot> slots(start[n]);
  {
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (EdgeId i = 0; i < edges.size(); ++i) {
      slots[fill[edges[i].source]++] = {edges[i].target, 0, i};
      slots[fill[edges[i].target]++] = {edges[i].source, 1, i};
    }
  }

  // Cycle order: (neighbor id, direction, edge id).
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(slots.begin() + start[v], slots.begin() + start[v + 1],
              [](const Slot& a, const Slot& b) {
                return std::tie(a.neighbor, a.incoming, a.edge) <
                       std::tie(b.neighbor, b.incoming, b.edge);
              });
  }

  TransformedGraph out;
  out.representative.resize(n);
  std::vector<VertexId> tail_node(edges.size());
  std::vector<VertexId> head_node(edges.size());
  std::vector<Edge> tedges;
  tedges.reserve(slots.size() + edges.size());

  VertexId next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t d = start[v + 1] - start[v];
    const VertexId base = next;
    out.representative[v] = base;
    if (d == 0) {
      out.origin.push_back(static_cast<VertexId>(v));
      ++next;
      continue;
    }
    for (std::size_t j = 0; j < d; ++j) {
      const Slot& s = slots[start[v] + j];
      (s.incoming ? head_node : tail_node)[s.edge] =
          base + static_cast<VertexId>(j);
      out.origin.push_back(static_cast<VertexId>(v));
    }
    next += static_cast<VertexId>(d);
    if (d >= 2) {
      for (std::size_t j = 0; j < d; ++j) {
        tedges.push_back({base + static_cast<VertexId>(j),
                          base + static_cast<VertexId>((j + 1) % d), 0.0});
      }
    }
  }
  for (EdgeId i = 0; i < edges.size(); ++i) {
    tedges.push_back({tail_node[i], head_node[i], edges[i].weight});
  }
  out.graph = Graph(next, std::move(tedges));
  return out;
}

}  // namespace bmssp
