#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "bmssp/bench.hpp"
#include "bmssp/cli.hpp"
#include "bmssp/dimacs.hpp"
#include "bmssp/error.hpp"
#include "bmssp/generators.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace bmssp;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "bmssp_cli_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli_bench") {
  TEST_CASE("parse_dimacs: examples") {
    const Graph g = parse_dimacs("p sp 2 1\na 1 2 5");
    CHECK(g.vertex_count() == 2);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edge(0) == Edge{0, 1, 5});
    CHECK(parse_dimacs("p sp 1 0").vertex_count() == 1);
    CHECK(code_of([] { parse_dimacs("p sp 2 2\na 1 2 5"); }) == ErrorCode::CountMismatch);
  }

  TEST_CASE("parse_dimacs: errors carry line numbers") {
    auto message = [](std::string_view text, bool ints = false) {
      try {
        parse_dimacs(text, ints);
      } catch (const Error& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(message("c hi\np sp 2 1\na 1 3 5").find("line 3") != std::string::npos);
    CHECK(message("a 1 2 5\np sp 2 1").find("line 1") != std::string::npos);
    CHECK(message("p sp 2 1\na 1 2 -5").find("line 2") != std::string::npos);
    CHECK(message("p sp 2 1\na 1 2 inf").find("line 2") != std::string::npos);
    CHECK(message("p sp 2 1\na 1 2 x").find("line 2") != std::string::npos);
    CHECK(message("p sp 2 1\nq\n").find("line 2") != std::string::npos);
    CHECK(message("p sp 2 1\na 1 2 2.5", true).find("line 2") != std::string::npos);
    CHECK(message("c only").find("missing") != std::string::npos);
    CHECK(parse_dimacs("p sp 2 1\r\na 1 2 2.5\r\n").edge(0).weight == 2.5);
  }

  TEST_CASE("dimacs round trip") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      GenSpec spec;
      spec.n = 1 + seed * 5;
      spec.m = seed * 12;
      spec.seed = seed;
      spec.integer_weights = seed % 2 == 0;
      spec.w_max = spec.integer_weights ? 1000 : 0.37;
      const Graph g = generate(spec);
      CHECK(parse_dimacs(write_dimacs(g)) == g);
    }
  }

  TEST_CASE("write_distances: examples") {
    CHECK(write_distances({0}) == "1 0\n");
    CHECK(write_distances({0, kInfinity}) == "1 0\n2 inf\n");
    const Graph tri = build_graph(3, {{0, 1, 1}, {0, 2, 4}, {1, 2, 2}});
    const std::string want = write_distances(bellman_ford(tri, 0));
    CHECK(want == "1 0\n2 1\n3 3\n");
    CHECK(write_distances(solve_sssp(tri, 0).distances) == want);
  }

  TEST_CASE("distances round trip exactly") {
    const std::vector<double> d{0, 0.1, 1.0 / 3.0, 1e-300, 123456789.125, kInfinity, 5e300};
    const auto back = read_distances(write_distances(d));
    REQUIRE(back.size() == d.size());
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(same_distance(back[i], d[i]));
    CHECK(code_of([] { read_distances("2 0\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { read_distances("1 zero\n"); }) == ErrorCode::ParseError);
  }

  TEST_CASE("generate: path") {
    GenSpec spec;
    spec.kind = GenKind::Path;
    spec.n = 4;
    const Graph g = generate(spec);
    CHECK(g.edges() == std::vector<Edge>{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  }

  TEST_CASE("generate: deterministic by seed") {
    GenSpec spec;
    spec.n = 100;
    spec.m = 300;
    spec.seed = 7;
    CHECK(generate(spec) == generate(spec));
    CHECK(write_dimacs(generate(spec)) == write_dimacs(generate(spec)));
    GenSpec other = spec;
    other.seed = 8;
    CHECK_FALSE(generate(spec) == generate(other));
    // First outputs of the mixing function for seed 0, as published.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  }

  TEST_CASE("generate: grid is a 4-neighbour lattice") {
    GenSpec spec;
    spec.kind = GenKind::Grid;
    spec.n = 12;  // 3 rows x 4 columns
    const Graph g = generate(spec);
    CHECK(g.edge_count() == 2 * (3 * 3 + 2 * 4));
    for (const Edge& e : g.edges()) {
      const int dr = int(e.source / 4) - int(e.target / 4);
      const int dc = int(e.source % 4) - int(e.target % 4);
      CHECK(std::abs(dr) + std::abs(dc) == 1);
    }
  }

  TEST_CASE("generate: layered graphs have tied routes") {
    const Graph g = fixtures::layered_graph(64, 1);
    const auto routes = ref::all_route_lengths(g, 0);
    const auto dist = bellman_ford(g, 0);
    std::size_t tied = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      tied += std::count(routes[v].begin(), routes[v].end(), dist[v]) >= 2;
    }
    CHECK(tied > 0);
  }

  TEST_CASE("generate: bad specs") {
    GenSpec spec;
    CHECK(code_of([&] { generate(spec); }) == ErrorCode::BadSpec);
    spec.n = 4;
    spec.w_min = 5;
    spec.w_max = 2;
    CHECK(code_of([&] { generate(spec); }) == ErrorCode::BadSpec);
    spec.w_min = -1;
    CHECK(code_of([&] { generate(spec); }) == ErrorCode::BadSpec);
    spec.w_min = 0.5;
    spec.w_max = 2;
    CHECK(code_of([&] { generate(spec); }) == ErrorCode::BadSpec);
    CHECK(code_of([] { parse_gen_kind("star"); }) == ErrorCode::BadSpec);
  }

  TEST_CASE("bench: one size") {
    BenchConfig cfg;
    cfg.sizes = {4096};
    const auto rows = run_bench(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].solver_ops.total() > 0);
    CHECK(rows[0].dijkstra_ops.total() > 0);
    CHECK(rows[0].agree);
    const std::string tsv = format_bench_tsv(rows);
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 2);
    CHECK(ratio_spread(rows, true) == 1.0);
  }

  TEST_CASE("run_cli: gen, solve, verify") {
    const fs::path dir = scratch_dir();
    const std::string graph = (dir / "g.gr").string();
    const std::string dist = (dir / "d.txt").string();
    const std::string trace = (dir / "t.jsonl").string();
    CHECK(cli({"gen", "--kind", "random", "-n", "300", "-m", "1200", "--seed", "4", "-o", graph}).code == 0);
    auto solved = cli({"solve", "-i", graph, "-s", "1", "-o", dist, "--trace", trace, "--check"});
    CHECK_MESSAGE(solved.code == 0, solved.err);
    CHECK(cli({"verify", "-i", graph, "-s", "1", "-d", dist}).code == 0);
    CHECK(cli({"verify", "-i", graph, "-s", "1"}).code == 0);
    const std::string lines = read_file(trace);
    CHECK(lines.find("\"sizeS\"") != std::string::npos);
    CHECK(lines.find("\"partial\"") != std::string::npos);

    auto d = read_distances(read_file(dist));
    d[5] += 1;
    write_file(dist, write_distances(d));
    const auto bad = cli({"verify", "-i", graph, "-s", "1", "-d", dist});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("vertex 6") != std::string::npos);
  }

  TEST_CASE("run_cli: input errors exit 2") {
    const fs::path dir = scratch_dir();
    const std::string graph = (dir / "bad.gr").string();
    write_file(graph, "p sp 2 2\na 1 2 1\n");
    CHECK(cli({"solve", "-i", graph}).code == 2);
    CHECK(cli({"solve", "-i", (dir / "missing.gr").string()}).code == 2);
    write_file(graph, "p sp 2 1\na 1 2 1\n");
    CHECK(cli({"solve", "-i", graph, "-s", "3"}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"gen", "--kind", "star", "-n", "3"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
  }

  TEST_CASE("run_cli: solve to stdout") {
    const fs::path dir = scratch_dir();
    const std::string graph = (dir / "tri.gr").string();
    write_file(graph, "c triangle\np sp 3 3\na 1 2 1\na 1 3 4\na 2 3 2\n");
    const auto r = cli({"solve", "-i", graph, "--force-bmssp"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 0\n2 1\n3 3\n");
  }
}
