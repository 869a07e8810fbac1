#include "bmssp/sssp_state.hpp"

#include <string>

#include "bmssp/error.hpp"

namespace bmssp {

SsspState::SsspState(std::size_t vertex_count)
    : dhat_(vertex_count, kInfinity),
      hops_(vertex_count, 0),
      pred_(vertex_count, kNoVertex) {}

void SsspState::set_source(VertexId s) {
  if (s >= vertex_count()) {
    throw Error(ErrorCode::BadVertexId, "source " + std::to_string(s));
  }
  std::fill(dhat_.begin(), dhat_.end(), kInfinity);
  std::fill(hops_.begin(), hops_.end(), 0);
  std::fill(pred_.begin(), pred_.end(), kNoVertex);
  dhat_[s] = 0.0;
  hops_[s] = 1;
}

PathKey SsspState::path_key_of(VertexId v) const {
  if (v >= vertex_count()) {
    throw Error(ErrorCode::BadVertexId, "vertex " + std::to_string(v));
  }
  if (!reached(v)) {
    throw Error(ErrorCode::Unreached, "vertex " + std::to_string(v));
  }
  return key(v);
}

RelaxProposal propose_relax(SsspState& state, VertexId u, VertexId v,
                            double w) {
  OpCounters& c = state.counters();
  ++c.additions;
  ++c.comparisons;
  const PathKey cand{state.dhat(u) + w, state.hops(u) + 1, v};
  const double old = state.dhat(v);
  if (cand.length < old) return {true, cand};
  if (old < cand.length) return {false, cand};
  // Equal lengths: fewer vertices wins, then the predecessor decides.
  if (cand.hops != state.hops(v)) return {cand.hops < state.hops(v), cand};
  const VertexId p = state.pred(v);
  return {u == p || u < p, cand};
}

}  // namespace bmssp
