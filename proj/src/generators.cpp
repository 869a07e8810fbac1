#include "bmssp/generators.hpp"

#include <cmath>

#include "bmssp/error.hpp"

namespace bmssp {

namespace {

void check_spec(const GenSpec& spec) {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::BadSpec, what); };
  if (spec.n == 0) bad("n must be positive");
  if (spec.n >= kNoVertex) bad("n too large");
  if (spec.m >= std::size_t{kNoVertex}) bad("m too large");
  if (!std::isfinite(spec.w_min) || !std::isfinite(spec.w_max)) bad("weights must be finite");
  if (spec.w_min < 0) bad("weights must be non-negative");
  if (spec.w_min > spec.w_max) bad("w_min exceeds w_max");
  if (spec.integer_weights &&
      (spec.w_min != std::floor(spec.w_min) || spec.w_max != std::floor(spec.w_max))) {
    bad("integer weights need integer bounds");
  }
}

double draw_weight(const GenSpec& spec, SplitMix64& rng) {
  if (spec.integer_weights) {
    const auto span = static_cast<std::uint64_t>(spec.w_max - spec.w_min) + 1;
    return spec.w_min + static_cast<double>(rng.below(span));
  }
  return spec.w_min + (spec.w_max - spec.w_min) * rng.unit();
}

std::vector<Edge> random_edges(const GenSpec& spec, SplitMix64& rng) {
  std::vector<Edge> edges;
  edges.reserve(spec.m);
  for (std::size_t i = 0; i < spec.m; ++i) {
    const auto u = static_cast<VertexId>(rng.below(spec.n));
    const auto v = static_cast<VertexId>(rng.below(spec.n));
    edges.push_back({u, v, draw_weight(spec, rng)});
  }
  return edges;
}

std::vector<Edge> path_edges(const GenSpec& spec) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < spec.n; ++v) edges.push_back({v, v + 1, 1.0});
  return edges;
}

std::vector<Edge> grid_edges(const GenSpec& spec, SplitMix64& rng) {
  const std::size_t n = spec.n;
  const auto rows = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(double(n))));
  const std::size_t cols = (n + rows - 1) / rows;
  std::vector<Edge> edges;
  for (std::size_t id = 0; id < n; ++id) {
    const std::size_t r = id / cols;
    const std::size_t c = id % cols;
    auto link = [&](std::size_t to) {
      edges.push_back({static_cast<VertexId>(id), static_cast<VertexId>(to), draw_weight(spec, rng)});
    };
    if (c + 1 < cols && id + 1 < n) link(id + 1);
    if (id + cols < n) link(id + cols);
    if (c > 0) link(id - 1);
    if (r > 0) link(id - cols);
  }
  return edges;
}

std::vector<Edge> layered_edges(const GenSpec& spec, SplitMix64& rng) {
  const std::size_t n = spec.n;
  const auto width = static_cast<std::size_t>(std::ceil(std::sqrt(double(n))));
  auto layer_start = [&](std::size_t layer) { return std::min(n, 1 + layer * width); };
  auto tie_weight = [&] { return rng.below(2) == 0 ? 1.0 : 2.0; };
  std::vector<Edge> edges;
  for (std::size_t v = layer_start(0); v < layer_start(1); ++v) {
    edges.push_back({0, static_cast<VertexId>(v), tie_weight()});
  }
  for (std::size_t layer = 0; layer_start(layer + 1) < n; ++layer) {
    const std::size_t next = layer_start(layer + 1);
    const std::size_t next_size = layer_start(layer + 2) - next;
    const std::size_t fan = std::min<std::size_t>(3, next_size);
    for (std::size_t v = layer_start(layer); v < next; ++v) {
      const std::size_t offset = rng.below(next_size);
      for (std::size_t j = 0; j < fan; ++j) {
        const std::size_t to = next + (offset + j) % next_size;
        edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(to), tie_weight()});
      }
    }
  }
  return edges;
}

}  // namespace

GenKind parse_gen_kind(std::string_view name) {
  if (name == "random") return GenKind::Random;
  if (name == "path") return GenKind::Path;
  if (name == "grid") return GenKind::Grid;
  if (name == "layered") return GenKind::Layered;
  throw Error(ErrorCode::BadSpec, "unknown generator '" + std::string(name) + "'");
}

std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Random: return "random";
    case GenKind::Path: return "path";
    case GenKind::Grid: return "grid";
    case GenKind::Layered: return "layered";
  }
  return "?";
}

Graph generate(const GenSpec& spec) {
  check_spec(spec);
  SplitMix64 rng(spec.seed);
  switch (spec.kind) {
    case GenKind::Random: return Graph(spec.n, random_edges(spec, rng));
    case GenKind::Path: return Graph(spec.n, path_edges(spec));
    case GenKind::Grid: return Graph(spec.n, grid_edges(spec, rng));
    case GenKind::Layered: return Graph(spec.n, layered_edges(spec, rng));
  }
  throw Error(ErrorCode::BadSpec, "unknown generator");
}

}  // namespace bmssp
