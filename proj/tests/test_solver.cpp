#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "bmssp/error.hpp"
#include "bmssp/solver.hpp"
#include "fixtures.hpp"

using namespace bmssp;

namespace {

std::set<VertexId> as_set(const std::vector<VertexId>& v) { return {v.begin(), v.end()}; }

// Largest integer r with r^p <= x, by plain search.
std::uint32_t int_root(double x, int p) {
  std::uint32_t r = 0;
  while (std::pow(double(r + 1), p) <= x) ++r;
  return r;
}

SolverParams params_by_search(std::size_t n) {
  const double lg = std::log2(double(n));
  SolverParams p;
  p.k = std::max(1u, int_root(lg, 3));
  p.t = std::max(1u, int_root(lg * lg, 3));
  std::uint32_t l = 1;
  while (double(l) * p.t < lg) ++l;
  p.l_top = l;
  return p;
}

}  // namespace

TEST_SUITE("bmssp_solver") {
  TEST_CASE("compute_params: worked values") {
    CHECK(compute_params(512) == SolverParams{2, 4, 3});
    CHECK(compute_params(2) == SolverParams{1, 1, 1});
    CHECK(compute_params(std::size_t{1} << 27) == SolverParams{3, 9, 3});
    CHECK(params_by_search(512) == SolverParams{2, 4, 3});
    CHECK(params_by_search(std::size_t{1} << 27) == SolverParams{3, 9, 3});
  }

  TEST_CASE("compute_params: agrees with exhaustive search") {
    for (std::size_t n = 2; n < 5000; n += 7) CHECK(compute_params(n) == params_by_search(n));
    for (int e = 1; e < 40; ++e) {
      const std::size_t n = std::size_t{1} << e;
      CHECK(compute_params(n) == params_by_search(n));
      CHECK(compute_params(n).l_top * compute_params(n).t >= std::uint32_t(e));
    }
    CHECK(compute_params(1) == SolverParams{1, 1, 1});
  }

  TEST_CASE("base_case: isolated vertex") {
    const Graph g = build_graph(1, {});
    SsspState st(1);
    st.set_source(0);
    BmsspContext ctx(g, st, SolverParams{2, 1, 1});
    const VertexId S[] = {0};
    const auto res = ctx.base_case(Bound::infinity(), S);
    CHECK(res.b_prime == Bound::infinity());
    CHECK(as_set(res.U) == std::set<VertexId>{0});
  }

  TEST_CASE("base_case: star with k=2") {
    // x=0, a=1, b=2, c=3
    const Graph g = build_graph(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}});
    // Reference: the k+1 closest vertices, cut at the largest of them.
    const SsspState oracle = fixtures::oracle_state(g, 0);
    std::vector<VertexId> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return oracle.key(a) < oracle.key(b); });
    const PathKey cut = oracle.key(order[2]);
    CHECK(cut == PathKey{2, 2, 2});

    SsspState st(4);
    st.set_source(0);
    BmsspContext ctx(g, st, SolverParams{2, 1, 1});
    const VertexId S[] = {0};
    const auto res = ctx.base_case(Bound::infinity(), S);
    CHECK(res.b_prime == Bound(cut));
    CHECK(as_set(res.U) == std::set<VertexId>{0, 1});
  }

  TEST_CASE("base_case: star under a finite bound") {
    const Graph g = build_graph(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}});
    SsspState st(4);
    st.set_source(0);
    BmsspContext ctx(g, st, SolverParams{2, 1, 1});
    const VertexId S[] = {0};
    const Bound B(PathKey{1.5, 1, 0});
    const auto res = ctx.base_case(B, S);
    CHECK(res.b_prime == B);
    CHECK(as_set(res.U) == std::set<VertexId>{0, 1});
    CHECK_FALSE(st.reached(2));
  }

  TEST_CASE("base_case: rejects non-singleton frontiers") {
    const Graph g = build_graph(2, {{0, 1, 1}});
    SsspState st(2);
    st.set_source(0);
    BmsspContext ctx(g, st, SolverParams{1, 1, 1});
    const VertexId two[] = {0, 1};
    CHECK_THROWS_AS(ctx.base_case(Bound::infinity(), two), Error);
    CHECK_THROWS_AS(ctx.base_case(Bound::infinity(), std::span<const VertexId>{}), Error);
  }

  TEST_CASE("bmssp: two-vertex path at level 1") {
    const Graph g = build_graph(2, {{0, 1, 1}});
    const auto bf = bellman_ford(g, 0);
    CHECK(bf == std::vector<double>{0, 1});
    SsspState st(2);
    st.set_source(0);
    const SsspState oracle = fixtures::oracle_state(g, 0);
    BmsspContext ctx(g, st, SolverParams{1, 1, 1}, &oracle);
    const VertexId S[] = {0};
    const auto res = ctx.bmssp(1, Bound::infinity(), S);
    CHECK(res.b_prime == Bound::infinity());
    CHECK(as_set(res.U) == std::set<VertexId>{0, 1});
    CHECK(res.U.size() == 2);
    CHECK(st.dhat(0) == bf[0]);
    CHECK(st.dhat(1) == bf[1]);
    CHECK_MESSAGE(ctx.checks().ok(), ctx.checks().first_failure);
  }

  TEST_CASE("bmssp: empty structure at loop exit means success") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const Graph g = to_constant_degree(fixtures::random_graph(40, 80, seed)).graph;
      SsspState st(g.vertex_count());
      st.set_source(0);
      BmsspContext ctx(g, st, compute_params(g.vertex_count()), nullptr, true);
      const VertexId S[] = {0};
      ctx.bmssp(ctx.params().l_top, Bound::infinity(), S);
      for (const TraceRecord& r : ctx.trace()) {
        if (!r.partial) CHECK(r.b_prime == r.bound);
      }
    }
  }

  TEST_CASE("bmssp: forced partial run on a long path") {
    const Graph g = to_constant_degree(build_graph(200, [] {
                      std::vector<Edge> e;
                      for (VertexId v = 0; v + 1 < 200; ++v) e.push_back({v, v + 1, 1});
                      return e;
                    }())).graph;
    const SsspState oracle = fixtures::oracle_state(g, 0);
    for (std::uint32_t l = 1; l <= 3; ++l) {
      SsspState st(g.vertex_count());
      st.set_source(0);
      const SolverParams p{1, 1, l};
      BmsspContext ctx(g, st, p, &oracle);
      const VertexId S[] = {0};
      const auto res = ctx.bmssp(l, Bound::infinity(), S);
      const std::size_t unit = p.k * (std::size_t{1} << (l * p.t));
      CHECK(res.b_prime < Bound::infinity());
      CHECK(res.U.size() >= unit);
      CHECK(res.U.size() <= 4 * unit);
      CHECK_MESSAGE(ctx.checks().ok(), ctx.checks().first_failure);
    }
  }

  TEST_CASE("bmssp: rejects oversized frontiers") {
    const Graph g = build_graph(8, {});
    SsspState st(8);
    st.set_source(0);
    BmsspContext ctx(g, st, SolverParams{1, 1, 1});
    const VertexId S[] = {0, 1, 2};
    try {
      ctx.bmssp(1, Bound::infinity(), S);
      FAIL("expected FrontierTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::FrontierTooLarge);
    }
  }

  TEST_CASE("solve_sssp: worked examples") {
    CHECK(solve_sssp(build_graph(1, {}), 0).distances == std::vector<double>{0});
    const Graph tri = build_graph(3, {{0, 1, 1}, {0, 2, 4}, {1, 2, 2}});
    const auto bf = bellman_ford(tri, 0);
    CHECK(bf == std::vector<double>{0, 1, 3});
    SolveOptions forced;
    forced.force_bmssp = true;
    forced.check_invariants = true;
    const auto rep = solve_sssp(tri, 0, forced);
    CHECK(rep.distances == bf);
    CHECK(rep.used_bmssp);
    CHECK(rep.checks.ok());
    CHECK(solve_sssp(tri, 0).distances == bf);
    CHECK_THROWS_AS(solve_sssp(tri, 3), Error);
  }

  TEST_CASE("solve_sssp: unreachable vertices are infinite") {
    const Graph g = build_graph(4, {{0, 1, 2}, {2, 3, 1}});
    SolveOptions forced;
    forced.force_bmssp = true;
    const auto rep = solve_sssp(g, 0, forced);
    CHECK(rep.distances == std::vector<double>{0, 2, kInfinity, kInfinity});
  }

  TEST_CASE("solve_sssp: matches Bellman-Ford with contract checks") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
      const std::size_t n = 2 + seed % 150;
      const Graph g = seed % 4 == 0 ? fixtures::layered_graph(n, seed)
                                    : fixtures::random_graph(n, (seed * 13) % (4 * n + 1), seed,
                                                             seed % 2 ? 3 : 1 << 20);
      SolveOptions opts;
      opts.force_bmssp = true;
      opts.check_invariants = true;
      opts.trace = true;
      const auto rep = solve_sssp(g, static_cast<VertexId>(seed % n), opts);
      const auto bf = bellman_ford(g, static_cast<VertexId>(seed % n));
      REQUIRE(rep.distances.size() == bf.size());
      for (std::size_t v = 0; v < bf.size(); ++v) CHECK(same_distance(rep.distances[v], bf[v]));
      CHECK_MESSAGE(rep.checks.ok(), "seed " << seed << ": " << rep.checks.first_failure);
      CHECK(rep.checks.nodes_checked == rep.stats.nodes);
      CHECK(rep.stats.direct_inserts <= rep.transformed_edges);
      CHECK(rep.root_b_prime == Bound::infinity());
      REQUIRE_FALSE(rep.trace.empty());
      CHECK(rep.trace.back().parent == -1);
      CHECK(rep.trace.back().l == rep.params.l_top);
      CHECK_FALSE(rep.trace.back().partial);
      CHECK(rep.trace.size() == rep.stats.nodes);
    }
  }

  TEST_CASE("solve_sssp: small graphs fall back to Dijkstra unless forced") {
    const Graph g = build_graph(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK_FALSE(solve_sssp(g, 0).used_bmssp);
    SolveOptions forced;
    forced.force_bmssp = true;
    CHECK(solve_sssp(g, 0, forced).used_bmssp);
    CHECK(solve_sssp(fixtures::random_graph(64, 256, 3), 0).used_bmssp);
  }
}
