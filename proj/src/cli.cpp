#include "bmssp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <ostream>

#include "bmssp/bench.hpp"
#include "bmssp/dimacs.hpp"
#include "bmssp/error.hpp"
#include "bmssp/generators.hpp"
#include "bmssp/oracle.hpp"

namespace bmssp {

namespace {

nlohmann::json bound_json(const Bound& b) {
  if (b.is_infinite()) return "inf";
  return nlohmann::json::array({b.key().length, b.key().hops, b.key().endpoint});
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

VertexId source_index(std::size_t one_based, const Graph& g) {
  if (one_based < 1 || one_based > g.vertex_count()) {
    throw Error(ErrorCode::BadVertexId, "source " + std::to_string(one_based) +
                                            " outside 1.." + std::to_string(g.vertex_count()));
  }
  return static_cast<VertexId>(one_based - 1);
}

}  // namespace

std::string format_trace(const std::vector<TraceRecord>& trace) {
  std::string out;
  for (const TraceRecord& r : trace) {
    nlohmann::json j;
    j["id"] = r.id;
    j["parent"] = r.parent;
    j["l"] = r.l;
    j["sizeS"] = r.size_s;
    j["sizeP"] = r.size_p;
    j["sizeW"] = r.size_w;
    j["sizeU"] = r.size_u;
    j["partial"] = r.partial;
    j["B"] = bound_json(r.bound);
    j["Bprime"] = bound_json(r.b_prime);
    out += j.dump();
    out += '\n';
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-source shortest paths by bounded multi-source recursion", "bmssp"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::size_t source = 1;
  bool integer_weights = false;

  auto* solve = app.add_subcommand("solve", "Compute distances from one source");
  std::string trace_path;
  bool force = false;
  bool check = false;
  bool stats = false;
  solve->add_option("-i,--input", input, "DIMACS graph file")->required();
  solve->add_option("-s,--source", source, "1-based source vertex");
  solve->add_option("-o,--output", output, "Distance file (default stdout)");
  solve->add_option("--trace", trace_path, "Write one JSON line per recursion node");
  solve->add_flag("--force-bmssp", force, "Use the recursion even on tiny graphs");
  solve->add_flag("--check", check, "Check recursion contracts against Dijkstra labels");
  solve->add_flag("--stats", stats, "Print operation counts to stderr");
  solve->add_flag("--integer-weights", integer_weights, "Reject fractional weights");

  auto* verify_cmd = app.add_subcommand("verify", "Compare distances against Dijkstra");
  std::string dist_path;
  verify_cmd->add_option("-i,--input", input, "DIMACS graph file")->required();
  verify_cmd->add_option("-s,--source", source, "1-based source vertex");
  verify_cmd->add_option("-d,--distances", dist_path,
                         "Distance file to check (default: solve and check)");
  verify_cmd->add_flag("--integer-weights", integer_weights, "Reject fractional weights");

  auto* gen = app.add_subcommand("gen", "Write a generated graph in DIMACS format");
  GenSpec spec;
  std::string kind = "random";
  gen->add_option("--kind", kind, "random, path, grid or layered")
      ->check(CLI::IsMember({"random", "path", "grid", "layered"}));
  gen->add_option("-n", spec.n, "Vertex count")->required();
  gen->add_option("-m", spec.m, "Arc count (random only)");
  gen->add_option("--seed", spec.seed, "Generator seed");
  gen->add_option("--wmin", spec.w_min, "Smallest weight");
  gen->add_option("--wmax", spec.w_max, "Largest weight");
  gen->add_flag("--integer-weights,!--real-weights", spec.integer_weights,
                "Draw integer weights (default) or reals");
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Count operations against Dijkstra");
  BenchConfig config;
  config.sizes = {4096, 65536};
  bench->add_option("--sizes", config.sizes, "Comma-separated vertex counts")->delimiter(',');
  bench->add_option("--trials", config.trials, "Graphs per size");
  bench->add_option("--degree", config.degree, "Arcs per vertex");
  bench->add_option("--seed", config.seed, "Base seed");
  bench->add_option("-o,--output", output, "TSV file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve) {
      const Graph g = parse_dimacs(read_file(input), integer_weights);
      SolveOptions opts;
      opts.force_bmssp = force;
      opts.trace = !trace_path.empty();
      opts.check_invariants = check;
      const SolveReport report = solve_sssp(g, source_index(source, g), opts);
      emit(output, write_distances(report.distances), out);
      if (!trace_path.empty()) write_file(trace_path, format_trace(report.trace));
      if (stats) {
        err << "n=" << g.vertex_count() << " m=" << g.edge_count()
            << " transformed_n=" << report.transformed_vertices
            << " k=" << report.params.k << " t=" << report.params.t
            << " levels=" << report.params.l_top
            << " comparisons=" << report.counters.comparisons
            << " additions=" << report.counters.additions
            << " nodes=" << report.stats.nodes << '\n';
      }
      if (check && !report.checks.ok()) {
        err << "contract violations: " << report.checks.violations() << " ("
            << report.checks.first_failure << ")\n";
        return kExitMismatch;
      }
      return kExitOk;
    }
    if (*verify_cmd) {
      const Graph g = parse_dimacs(read_file(input), integer_weights);
      const VertexId s = source_index(source, g);
      const std::vector<double> candidate = dist_path.empty()
                                                ? solve_sssp(g, s).distances
                                                : read_distances(read_file(dist_path));
      const VerifyReport report = verify(g, s, candidate);
      if (report.equal) {
        out << "ok " << g.vertex_count() << " vertices\n";
        return kExitOk;
      }
      const Mismatch& mm = *report.first_mismatch;
      out << "mismatch at vertex " << mm.vertex + 1 << ": expected "
          << format_distance(mm.expected) << ", got "
          << (std::isnan(mm.got) ? std::string("nothing") : format_distance(mm.got)) << '\n';
      return kExitMismatch;
    }
    if (*gen) {
      spec.kind = parse_gen_kind(kind);
      emit(output, write_dimacs(generate(spec)), out);
      return kExitOk;
    }
    if (*bench) {
      std::sort(config.sizes.begin(), config.sizes.end());
      const auto rows = run_bench(config);
      emit(output, format_bench_tsv(rows), out);
      err << "solver ratio spread " << ratio_spread(rows, true)
          << ", dijkstra ratio spread " << ratio_spread(rows, false) << '\n';
      const bool all_agree =
          std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.agree; });
      return all_agree ? kExitOk : kExitMismatch;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::InvariantViolation ? kExitMismatch : kExitInputError;
  }
  return kExitInputError;
}

}  // namespace bmssp
