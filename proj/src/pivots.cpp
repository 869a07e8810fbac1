#include "bmssp/pivots.hpp"

#include <algorithm>

namespace bmssp {

std::uint32_t PivotScratch::next_epoch() {
  if (++epoch_ == 0) {
    std::fill(in_w_.begin(), in_w_.end(), 0);
    std::fill(in_round_.begin(), in_round_.end(), 0);
    epoch_ = 1;
  }
  return epoch_;
}

PivotResult find_pivots(const Graph& g, SsspState& state, const Bound& bound,
                        std::span<const VertexId> frontier, std::uint32_t k,
                        PivotScratch& scratch) {
  PivotResult res;
  OpCounters& counters = state.counters();
  const std::uint32_t w_epoch = scratch.next_epoch();
  auto& in_w = scratch.in_w_;

  for (VertexId s : frontier) {
    if (in_w[s] == w_epoch) continue;
    in_w[s] = w_epoch;
    res.reached.push_back(s);
  }
  const std::size_t frontier_size = res.reached.size();
  const std::size_t limit = static_cast<std::size_t>(k) * frontier_size;

  std::vector<VertexId> previous(res.reached);
  std::vector<VertexId> current;
  for (std::uint32_t round = 0; round < k && !previous.empty(); ++round) {
    const std::uint32_t r_epoch = scratch.next_epoch();
    current.clear();
    for (VertexId u : previous) {
      for (EdgeId e : g.out_edges(u)) {
        const Edge& edge = g.edge(e);
        ++res.relax_attempts;
        const auto p = propose_relax(state, u, edge.target, edge.weight);
        if (!p.accepted) continue;
        commit_relax(state, u, edge.target, p.candidate);
        if (below(p.candidate, bound, counters) &&
            scratch.in_round_[edge.target] != r_epoch) {
          scratch.in_round_[edge.target] = r_epoch;
          current.push_back(edge.target);
        }
      }
    }
    for (VertexId v : current) {
      if (in_w[v] == w_epoch) continue;
      in_w[v] = w_epoch;
      res.reached.push_back(v);
    }
    if (res.reached.size() > limit) {
      res.pivots.assign(res.reached.begin(),
                        res.reached.begin() +
                            static_cast<std::ptrdiff_t>(frontier_size));
      res.early_exit = true;
      return res;
    }
    std::swap(previous, current);
  }

  // Pred links with both ends in W form the forest; count children per W
  // position in CSR form.
  const auto& w = res.reached;
  auto& pos = scratch.position_;
  for (std::size_t i = 0; i < w.size(); ++i) pos[w[i]] = static_cast<std::uint32_t>(i);
  auto parent_of = [&](VertexId v) -> std::int64_t {
    const VertexId p = state.pred(v);
    if (p == kNoVertex || p == v || in_w[p] != w_epoch) return -1;
    return pos[p];
  };
  std::vector<std::uint32_t> start(w.size() + 1, 0);
  for (VertexId v : w) {
    if (auto p = parent_of(v); p >= 0) ++start[static_cast<std::size_t>(p) + 1];
  }
  for (std::size_t i = 0; i < w.size(); ++i) start[i + 1] += start[i];
  std::vector<std::uint32_t> children(start.back());
  {
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (auto p = parent_of(w[i]); p >= 0) {
        children[fill[static_cast<std::size_t>(p)]++] = static_cast<std::uint32_t>(i);
      }
    }
  }

  std::vector<std::uint32_t> stack;
  for (std::size_t i = 0; i < frontier_size; ++i) {
    if (parent_of(w[i]) >= 0) continue;
    std::size_t size = 0;
    stack.assign(1, static_cast<std::uint32_t>(i));
    while (!stack.empty() && size < k) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      ++size;
      for (std::uint32_t c = start[x]; c < start[x + 1]; ++c) stack.push_back(children[c]);
    }
    if (size >= k) res.pivots.push_back(w[i]);
  }
  return res;
}

PivotResult find_pivots(const Graph& g, SsspState& state, const Bound& bound,
                        std::span<const VertexId> frontier, std::uint32_t k) {
  PivotScratch scratch(g.vertex_count());
  return find_pivots(g, state, bound, frontier, k, scratch);
}

}  // namespace bmssp
