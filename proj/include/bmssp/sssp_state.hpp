#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "bmssp/graph.hpp"
#include "bmssp/path_key.hpp"

namespace bmssp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Per-vertex labels shared by every phase of one run: the estimate dhat, the
// vertex count of the realizing path, and its predecessor. Labels only ever
// move down in the PathKey order, so pred links always form a forest.
class SsspState {
 public:
  explicit SsspState(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return dhat_.size(); }

  // Resets all labels and makes s the root: dhat 0, hops 1, no pred.
  void set_source(VertexId s);

  double dhat(VertexId v) const { return dhat_[v]; }
  std::uint32_t hops(VertexId v) const { return hops_[v]; }
  VertexId pred(VertexId v) const { return pred_[v]; }
  bool reached(VertexId v) const { return dhat_[v] != kInfinity; }

  // Throws Error(Unreached) when dhat[v] is infinite.
  PathKey path_key_of(VertexId v) const;
  // Unchecked: caller guarantees v is reached.
  PathKey key(VertexId v) const { return {dhat_[v], hops_[v], v}; }

  const std::vector<double>& distances() const noexcept { return dhat_; }

  OpCounters& counters() noexcept { return counters_; }
  const OpCounters& read_counters() const noexcept { return counters_; }
  void reset_counters() noexcept { counters_ = {}; }

  // Overwrites the label of v; used by relaxation commits.
  void assign(VertexId v, const PathKey& key, VertexId pred) {
    dhat_[v] = key.length;
    hops_[v] = key.hops;
    pred_[v] = pred;
  }

 private:
  std::vector<double> dhat_;
  std::vector<std::uint32_t> hops_;
  std::vector<VertexId> pred_;
  OpCounters counters_;
};

struct RelaxProposal {
  bool accepted = false;
  PathKey candidate;
};

// Evaluates the edge (u, v, w) against v's current label without changing it.
// The candidate is accepted when it is no worse than the current label under
// the path order; the equal case (same pred, same length and hops) is accepted
// so that an edge relaxed deeper in the recursion can be reused above.
// Requires dhat[u] finite. Counts one addition and one comparison.
RelaxProposal propose_relax(SsspState& state, VertexId u, VertexId v, double w);

inline void commit_relax(SsspState& state, VertexId u, VertexId v,
                         const PathKey& candidate) {
  state.assign(v, candidate, u);
}

inline bool try_relax(SsspState& state, VertexId u, VertexId v, double w) {
  auto p = propose_relax(state, u, v, w);
  if (p.accepted) commit_relax(state, u, v, p.candidate);
  return p.accepted;
}

}  // namespace bmssp
