#include "bmssp/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "bmssp/generators.hpp"
#include "bmssp/oracle.hpp"
#include "bmssp/solver.hpp"

namespace bmssp {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (std::size_t n : config.sizes) {
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
      GenSpec spec;
      spec.kind = GenKind::Random;
      spec.n = n;
      spec.m = config.degree * n;
      spec.seed = SplitMix64(config.seed ^ (std::uint64_t{n} << 20) ^ trial).next();
      const Graph g = generate(spec);

      BenchRow row;
      row.n = n;
      row.m = g.edge_count();
      row.trial = trial;

      auto start = std::chrono::steady_clock::now();
      const SolveReport report = solve_sssp(g, 0);
      row.solver_ms = elapsed_ms(start);
      row.solver_ops = report.counters;

      start = std::chrono::steady_clock::now();
      const OracleResult oracle = dijkstra(g, 0);
      row.dijkstra_ms = elapsed_ms(start);
      row.dijkstra_ops = oracle.counters;

      row.agree = report.distances.size() == oracle.distances.size();
      for (std::size_t v = 0; row.agree && v < n; ++v) {
        row.agree = same_distance(report.distances[v], oracle.distances[v]);
      }

      const double lg = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
      const double m = static_cast<double>(std::max<std::size_t>(row.m, 1));
      row.solver_ratio = double(row.solver_ops.total()) / (m * std::pow(lg, 2.0 / 3.0));
      row.dijkstra_ratio = double(row.dijkstra_ops.total()) / (m * lg);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string format_bench_tsv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "n\tm\ttrial\tsolver_cmp\tsolver_add\tsolver_ops\tsolver_ms\tsolver_ratio"
        "\tdijkstra_cmp\tdijkstra_add\tdijkstra_ops\tdijkstra_ms\tdijkstra_ratio\tagree\n";
  os.setf(std::ios::fixed);
  for (const BenchRow& r : rows) {
    os << r.n << '\t' << r.m << '\t' << r.trial << '\t' << r.solver_ops.comparisons << '\t'
       << r.solver_ops.additions << '\t' << r.solver_ops.total() << '\t' << std::setprecision(3)
       << r.solver_ms << '\t' << std::setprecision(4) << r.solver_ratio << '\t'
       << r.dijkstra_ops.comparisons << '\t' << r.dijkstra_ops.additions << '\t'
       << r.dijkstra_ops.total() << '\t' << std::setprecision(3) << r.dijkstra_ms << '\t'
       << std::setprecision(4) << r.dijkstra_ratio << '\t' << (r.agree ? "yes" : "no") << '\n';
  }
  return os.str();
}

double ratio_spread(const std::vector<BenchRow>& rows, bool solver) {
  std::map<std::size_t, std::pair<double, std::size_t>> per_size;
  for (const BenchRow& r : rows) {
    auto& [sum, count] = per_size[r.n];
    sum += solver ? r.solver_ratio : r.dijkstra_ratio;
    ++count;
  }
  if (per_size.size() < 2) return 1.0;
  double lo = INFINITY;
  double hi = 0.0;
  for (const auto& [n, acc] : per_size) {
    const double mean = acc.first / double(acc.second);
    lo = std::min(lo, mean);
    hi = std::max(hi, mean);
  }
  return hi / lo;
}

}  // namespace bmssp
