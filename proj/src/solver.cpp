#include "bmssp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "bmssp/error.hpp"
#include "bmssp/oracle.hpp"

namespace bmssp {

namespace {

// Largest integer r >= 0 with r^3 <= x.
std::uint32_t floor_cbrt(double x) {
  auto r = static_cast<std::uint32_t>(std::floor(std::cbrt(x)));
  auto cube = [](std::uint32_t v) { return double(v) * v * v; };
  while (cube(r + 1) <= x) ++r;
  while (r > 0 && cube(r) > x) --r;
  return r;
}

struct HeapEntry {
  PathKey key;
  VertexId vertex;
};

}  // namespace

SolverParams compute_params(std::size_t n) {
  const double lg = n <= 1 ? 0.0 : std::log2(static_cast<double>(n));
  SolverParams p;
  p.k = std::max<std::uint32_t>(1, floor_cbrt(lg));
  p.t = std::max<std::uint32_t>(1, floor_cbrt(lg * lg));
  p.l_top = std::max<std::uint32_t>(
      1, static_cast<std::uint32_t>(std::ceil(lg / p.t)));
  return p;
}

BmsspContext::BmsspContext(const Graph& g, SsspState& state,
                           SolverParams params, const SsspState* oracle,
                           bool trace)
    : g_(g),
      state_(state),
      params_(params),
      oracle_(oracle),
      trace_on_(trace),
      pivot_scratch_(g.vertex_count()),
      mark_(g.vertex_count(), 0),
      slot_tables_(params.l_top + 1) {
  if (oracle_ == nullptr) return;
  const std::size_t n = g.vertex_count();
  tree_start_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (oracle_->pred(v) != kNoVertex) ++tree_start_[oracle_->pred(v) + 1];
  }
  for (std::size_t v = 0; v < n; ++v) tree_start_[v + 1] += tree_start_[v];
  tree_children_.resize(tree_start_[n]);
  std::vector<std::uint32_t> fill(tree_start_.begin(), tree_start_.end() - 1);
  for (VertexId v = 0; v < n; ++v) {
    if (oracle_->pred(v) != kNoVertex) tree_children_[fill[oracle_->pred(v)]++] = v;
  }
  direct_inserts_per_edge_.assign(g.edge_count(), 0);
}

std::uint64_t BmsspContext::frontier_limit(std::uint32_t l) const noexcept {
  const std::uint64_t cap = 4 * std::max<std::uint64_t>(g_.vertex_count(), 1);
  const std::uint64_t e = std::uint64_t{l} * params_.t;
  if (e >= 62) return cap;
  return std::min(cap, std::uint64_t{1} << e);
}

std::uint32_t BmsspContext::next_mark() {
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  return epoch_;
}

std::span<SlotRef> BmsspContext::slot_table(std::uint32_t l) {
  if (l >= slot_tables_.size()) slot_tables_.resize(l + 1);
  auto& table = slot_tables_[l];
  if (table.empty()) table.assign(std::max<std::size_t>(g_.vertex_count(), 1), SlotRef{});
  return table;
}

void BmsspContext::fail(std::uint64_t& counter, const std::string& what) {
  ++counter;
  if (checks_.first_failure.empty()) checks_.first_failure = what;
}

BmsspResult BmsspContext::base_case(const Bound& bound,
                                    std::span<const VertexId> frontier) {
  return run_base(bound, frontier, -1);
}

BmsspResult BmsspContext::bmssp(std::uint32_t l, const Bound& bound,
                                std::span<const VertexId> frontier) {
  return run_node(l, bound, frontier, -1);
}

BmsspResult BmsspContext::run_base(const Bound& bound,
                                   std::span<const VertexId> frontier,
                                   std::int64_t parent) {
  if (frontier.size() != 1) {
    throw Error(ErrorCode::NotSingleton,
                "base case needs one source, got " +
                    std::to_string(frontier.size()));
  }
  const std::uint32_t id = next_node_id_++;
  ++stats_.nodes;
  ++stats_.base_cases;
  OpCounters& counters = state_.counters();
  const VertexId x = frontier[0];
  const std::size_t k = params_.k;

  auto later = [&counters](const HeapEntry& a, const HeapEntry& b) {
    return compare_keys(a.key, b.key, counters) > 0;
  };
  std::vector<HeapEntry> heap{{state_.key(x), x}};
  const std::uint32_t done = next_mark();
  std::vector<VertexId> settled{x};

  while (!heap.empty() && settled.size() < k + 1) {
    std::pop_heap(heap.begin(), heap.end(), later);
    const VertexId u = heap.back().vertex;
    heap.pop_back();
    if (mark_[u] == done) continue;
    mark_[u] = done;
    if (u != x) settled.push_back(u);
    for (EdgeId e : g_.out_edges(u)) {
      const Edge& edge = g_.edge(e);
      const auto p = propose_relax(state_, u, edge.target, edge.weight);
      if (!p.accepted || !below(p.candidate, bound, counters)) continue;
      commit_relax(state_, u, edge.target, p.candidate);
      if (mark_[edge.target] == done) continue;
      heap.push_back({p.candidate, edge.target});
      std::push_heap(heap.begin(), heap.end(), later);
    }
  }

  BmsspResult res;
  if (settled.size() <= k) {
    res.b_prime = bound;
    res.U = std::move(settled);
  } else {
    PathKey top = state_.key(settled[0]);
    for (VertexId v : settled) {
      if (compare_keys(top, state_.key(v), counters) < 0) top = state_.key(v);
    }
    res.b_prime = Bound(top);
    for (VertexId v : settled) {
      if (compare_keys(state_.key(v), top, counters) < 0) res.U.push_back(v);
    }
  }

  const bool partial = res.b_prime < bound;
  if (partial) ++stats_.partial_nodes;
  if (oracle_ != nullptr) check_node(0, bound, frontier, res);
  if (trace_on_) {
    trace_.push_back({id, parent, 0, frontier.size(), 0, 0, res.U.size(), bound,
                      res.b_prime, partial});
  }
  return res;
}

BmsspResult BmsspContext::run_node(std::uint32_t l, const Bound& bound,
                                   std::span<const VertexId> frontier,
                                   std::int64_t parent) {
  if (frontier.size() > frontier_limit(l)) {
    throw Error(ErrorCode::FrontierTooLarge,
                "level " + std::to_string(l) + " frontier of " +
                    std::to_string(frontier.size()));
  }
  if (l == 0) return run_base(bound, frontier, parent);

  const std::uint32_t id = next_node_id_++;
  ++stats_.nodes;
  OpCounters& counters = state_.counters();
  const std::uint32_t k = params_.k;

  PivotResult piv = find_pivots(g_, state_, bound, frontier, k, pivot_scratch_);
  stats_.pivot_relaxations += piv.relax_attempts;
  if (oracle_ != nullptr &&
      piv.pivots.size() * k > piv.reached.size()) {
    std::ostringstream os;
    os << "node " << id << ": |P|=" << piv.pivots.size() << " > |W|/k with |W|="
       << piv.reached.size();
    fail(checks_.pivot_size, os.str());
  }

  BlockSeq ds(frontier_limit(l - 1), bound, slot_table(l), &counters);
  ds.set_order_checks(oracle_ != nullptr);
  Bound last = bound;  // B'_0 when P is empty
  for (VertexId x : piv.pivots) {
    const PathKey kx = state_.key(x);
    ds.insert(x, kx);
    if (last.is_infinite() || compare_keys(kx, last.key(), counters) < 0) {
      last = Bound(kx);
    }
  }
  stats_.pivot_inserts += piv.pivots.size();

  const std::uint64_t workload =
      static_cast<std::uint64_t>(k) * frontier_limit(l);
  std::vector<VertexId> U;
  std::vector<KeyValue> prepend;
  std::unordered_set<VertexId> seen_children;  // checks only

  while (U.size() < workload && !ds.is_empty()) {
    if (oracle_ != nullptr) {
      for (const KeyValue& kv : ds.contents()) {
        if (kv.value < last || true_key(kv.key) < last) {
          std::ostringstream os;
          os << "node " << id << ": key " << kv.key << " below B'_{i-1}="
             << last << " before pull";
          fail(checks_.progress, os.str());
          break;
        }
      }
    }

    auto pulled = ds.pull();
    ++stats_.pulls;
    const Bound bi = pulled.bound;
    BmsspResult child = run_node(l - 1, bi, pulled.keys, id);

    if (oracle_ != nullptr) {
      for (VertexId v : child.U) {
        const PathKey tk = true_key(v);
        if (!seen_children.insert(v).second || tk < last ||
            !(tk < child.b_prime)) {
          std::ostringstream os;
          os << "node " << id << ": child set overlaps or leaves [" << last
             << ", " << child.b_prime << ") at vertex " << v;
          fail(checks_.disjointness, os.str());
          break;
        }
      }
    }
    U.insert(U.end(), child.U.begin(), child.U.end());
    // A vertex completed by the child may still hold an older, larger entry.
    for (VertexId v : child.U) {
      if (ds.erase(v)) ++stats_.stale_erased;
    }

    prepend.clear();
    for (VertexId u : child.U) {
      for (EdgeId e : g_.out_edges(u)) {
        const Edge& edge = g_.edge(e);
        const auto p = propose_relax(state_, u, edge.target, edge.weight);
        if (!p.accepted) continue;
        commit_relax(state_, u, edge.target, p.candidate);
        if (!below(p.candidate, bi, counters)) {
          if (!below(p.candidate, bound, counters)) continue;
          ds.insert(edge.target, p.candidate);
          ++stats_.direct_inserts;
          if (oracle_ != nullptr && ++direct_inserts_per_edge_[e] > 1) {
            fail(checks_.edge_insert_once,
                 "edge " + std::to_string(e) + " inserted directly twice");
          }
        } else if (!below(p.candidate, child.b_prime, counters)) {
          prepend.push_back({edge.target, p.candidate});
        }
      }
    }
    for (VertexId x : pulled.keys) {
      const PathKey kx = state_.key(x);
      if (!below(kx, child.b_prime, counters) && below(kx, bi, counters)) {
        prepend.push_back({x, kx});
      }
    }
    stats_.prepended += prepend.size();
    ds.batch_prepend(prepend);
    last = child.b_prime;
  }

  BmsspResult res;
  res.b_prime = ds.is_empty() ? bound : min_bound(last, bound);
  const std::uint32_t in_u = next_mark();
  for (VertexId v : U) mark_[v] = in_u;
  for (VertexId x : piv.reached) {
    if (mark_[x] != in_u && below(state_.key(x), res.b_prime, counters)) {
      mark_[x] = in_u;
      U.push_back(x);
    }
  }
  res.U = std::move(U);

  const bool partial = res.b_prime < bound;
  if (partial) ++stats_.partial_nodes;
  if (oracle_ != nullptr) {
    check_node(l, bound, frontier, res);
    if (piv.pivots.size() * k > res.U.size()) {
      std::ostringstream os;
      os << "node " << id << ": |P|=" << piv.pivots.size() << " > |U|/k with |U|="
         << res.U.size();
      fail(checks_.pivot_economy, os.str());
    }
  }
  if (trace_on_) {
    trace_.push_back({id, parent, l, frontier.size(), piv.pivots.size(),
                      piv.reached.size(), res.U.size(), bound, res.b_prime,
                      partial});
  }
  return res;
}

void BmsspContext::check_node(std::uint32_t l, const Bound& bound,
                              std::span<const VertexId> frontier,
                              const BmsspResult& res) {
  ++checks_.nodes_checked;
  const Bound& bp = res.b_prime;

  // Expected set: oracle-tree descendants of the frontier with true key < B'.
  // Keys grow along tree edges, so the walk can stop at the first key >= B'.
  const std::uint32_t ep = next_mark();
  std::vector<VertexId> stack;
  std::size_t expected = 0;
  for (VertexId s : frontier) {
    if (mark_[s] == ep || !oracle_->reached(s) || !(true_key(s) < bp)) continue;
    mark_[s] = ep;
    stack.push_back(s);
  }
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    ++expected;
    for (std::uint32_t c = tree_start_[v]; c < tree_start_[v + 1]; ++c) {
      const VertexId w = tree_children_[c];
      if (mark_[w] != ep && true_key(w) < bp) {
        mark_[w] = ep;
        stack.push_back(w);
      }
    }
  }
  std::size_t matched = 0;
  for (VertexId u : res.U) {
    const bool complete = state_.key(u) == true_key(u) &&
                          state_.pred(u) == oracle_->pred(u);
    if (mark_[u] != ep || !complete) {
      std::ostringstream os;
      os << "level " << l << " node: vertex " << u
         << (mark_[u] != ep ? " unexpected or repeated in U" : " incomplete");
      fail(checks_.completeness, os.str());
      return;
    }
    mark_[u] = 0;
    ++matched;
  }
  if (matched != expected) {
    std::ostringstream os;
    os << "level " << l << " node: |U|=" << matched << " but " << expected
       << " vertices lie below B'=" << bp;
    fail(checks_.completeness, os.str());
  }

  const std::uint64_t unit = static_cast<std::uint64_t>(params_.k) * frontier_limit(l);
  const bool partial = bp < bound;
  if (res.U.size() > 4 * unit || (partial && res.U.size() < unit)) {
    std::ostringstream os;
    os << "level " << l << " node: |U|=" << res.U.size() << " outside size bounds (k2^{lt}="
       << unit << ", partial=" << partial << ")";
    fail(checks_.size_bounds, os.str());
  }
}

SolveReport solve_sssp(const Graph& g, VertexId source,
                       const SolveOptions& options) {
  if (source >= g.vertex_count()) {
    throw Error(ErrorCode::BadVertexId, "source " + std::to_string(source));
  }
  const TransformedGraph tg = to_constant_degree(g);
  const Graph& cg = tg.graph;
  const VertexId root = tg.representative[source];

  SolveReport report;
  report.params = compute_params(cg.vertex_count());
  report.transformed_vertices = cg.vertex_count();
  report.transformed_edges = cg.edge_count();
  report.used_bmssp = options.force_bmssp || cg.vertex_count() >= 16;

  SsspState state(cg.vertex_count());
  state.set_source(root);
  if (!report.used_bmssp) {
    run_dijkstra(cg, state);
  } else {
    std::optional<SsspState> oracle;
    if (options.check_invariants) {
      oracle.emplace(cg.vertex_count());
      oracle->set_source(root);
      run_dijkstra(cg, *oracle);
    }
    BmsspContext ctx(cg, state, report.params, oracle ? &*oracle : nullptr,
                     options.trace);
    const VertexId start[] = {root};
    const BmsspResult top = ctx.bmssp(report.params.l_top, Bound::infinity(), start);
    report.root_b_prime = top.b_prime;
    report.stats = ctx.stats();
    report.checks = ctx.checks();
    report.trace = ctx.trace();
    if (top.b_prime.is_finite()) {
      std::ostringstream os;
      os << "root call ended partially at " << top.b_prime;
      if (options.check_invariants) {
        ++report.checks.top_level;
        if (report.checks.first_failure.empty()) report.checks.first_failure = os.str();
      } else {
        throw Error(ErrorCode::InvariantViolation, os.str());
      }
    }
  }

  report.distances.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    report.distances[v] = state.dhat(tg.representative[v]);
  }
  report.counters = state.read_counters();
  return report;
}

}  // namespace bmssp
