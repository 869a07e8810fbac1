#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bmssp/path_key.hpp"

namespace bmssp {

struct BenchConfig {
  std::vector<std::size_t> sizes;  // vertex counts, ascending
  std::size_t trials = 1;
  std::size_t degree = 4;  // m = degree * n
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t trial = 0;
  OpCounters solver_ops;
  OpCounters dijkstra_ops;
  double solver_ms = 0.0;
  double dijkstra_ms = 0.0;
  double solver_ratio = 0.0;    // ops / (m * log2(n)^(2/3))
  double dijkstra_ratio = 0.0;  // ops / (m * log2(n))
  bool agree = false;           // distances bitwise equal
};

// Random graphs with uniform integer weights in [0, 2^20], source vertex 0.
// The graph for (n, trial) is seeded from config.seed, n and trial only.
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string format_bench_tsv(const std::vector<BenchRow>& rows);

// max/min of the mean ratio per size; 1 when fewer than two sizes.
double ratio_spread(const std::vector<BenchRow>& rows, bool solver);

}  // namespace bmssp
