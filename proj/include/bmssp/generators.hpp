#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bmssp/graph.hpp"

namespace bmssp {

// SplitMix64. Output depends only on the seed, on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by multiply-shift; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class GenKind { Random, Path, Grid, Layered };

// Throws Error(BadSpec) on an unknown name.
GenKind parse_gen_kind(std::string_view name);
std::string_view to_string(GenKind kind);

struct GenSpec {
  GenKind kind = GenKind::Random;
  std::size_t n = 0;
  std::size_t m = 0;  // random only
  double w_min = 0.0;
  double w_max = 1048576.0;
  std::uint64_t seed = 1;
  bool integer_weights = true;  // draw integers in [w_min, w_max]
};

// random:  m arcs with uniform endpoints and uniform weights.
// path:    arcs i -> i+1 with weight 1.
// grid:    row-major grid of n cells, ceil(n / floor(sqrt n)) columns, with an
//          arc to each existing 4-neighbour.
// layered: vertex 0 feeds every vertex of the first layer; layers of width
//          ceil(sqrt n) follow, each vertex linked to 3 distinct vertices of
//          the next layer, with weights 1 or 2 so that many routes tie.
// Throws Error(BadSpec).
Graph generate(const GenSpec& spec);

}  // namespace bmssp
