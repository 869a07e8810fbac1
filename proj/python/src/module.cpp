#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

#include "bmssp/dimacs.hpp"
#include "bmssp/error.hpp"
#include "bmssp/generators.hpp"
#include "bmssp/oracle.hpp"
#include "bmssp/solver.hpp"

namespace py = pybind11;
using namespace bmssp;

namespace {

Graph make_graph(std::size_t n, const std::vector<std::tuple<VertexId, VertexId, double>>& arcs) {
  std::vector<Edge> edges;
  edges.reserve(arcs.size());
  for (const auto& [u, v, w] : arcs) edges.push_back({u, v, w});
  return Graph(n, std::move(edges));
}

py::dict report_dict(const SolveReport& r) {
  py::dict d;
  d["distances"] = r.distances;
  d["comparisons"] = r.counters.comparisons;
  d["additions"] = r.counters.additions;
  d["k"] = r.params.k;
  d["t"] = r.params.t;
  d["levels"] = r.params.l_top;
  d["transformed_vertices"] = r.transformed_vertices;
  d["transformed_edges"] = r.transformed_edges;
  d["used_bmssp"] = r.used_bmssp;
  d["nodes"] = r.stats.nodes;
  d["direct_inserts"] = r.stats.direct_inserts;
  d["violations"] = r.checks.violations();
  d["first_failure"] = r.checks.first_failure;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Single-source shortest paths by bounded multi-source recursion";

  static py::exception<Error> error_type(m, "BmsspError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"),
           "Directed graph from (u, v, w) triples with 0-based ids")
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::tuple<VertexId, VertexId, double>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.source, e.target, e.weight);
             return out;
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def(
      "solve",
      [](const Graph& g, VertexId source, bool force_bmssp) {
        SolveOptions opts;
        opts.force_bmssp = force_bmssp;
        return solve_sssp(g, source, opts).distances;
      },
      py::arg("graph"), py::arg("source"), py::arg("force_bmssp") = false,
      "Distances from `source`; unreachable vertices are inf");

  m.def(
      "solve_report",
      [](const Graph& g, VertexId source, bool force_bmssp, bool check) {
        SolveOptions opts;
        opts.force_bmssp = force_bmssp;
        opts.check_invariants = check;
        return report_dict(solve_sssp(g, source, opts));
      },
      py::arg("graph"), py::arg("source"), py::arg("force_bmssp") = false,
      py::arg("check_invariants") = false);

  m.def(
      "dijkstra", [](const Graph& g, VertexId s) { return dijkstra(g, s).distances; },
      py::arg("graph"), py::arg("source"));
  m.def("bellman_ford", &bellman_ford, py::arg("graph"), py::arg("source"));
  m.def(
      "verify",
      [](const Graph& g, VertexId s, const std::vector<double>& d) {
        return verify(g, s, d).equal;
      },
      py::arg("graph"), py::arg("source"), py::arg("distances"));

  m.def(
      "generate",
      [](const std::string& kind, std::size_t n, std::size_t arcs, std::uint64_t seed,
         double w_min, double w_max, bool integer_weights) {
        GenSpec spec;
        spec.kind = parse_gen_kind(kind);
        spec.n = n;
        spec.m = arcs;
        spec.seed = seed;
        spec.w_min = w_min;
        spec.w_max = w_max;
        spec.integer_weights = integer_weights;
        return generate(spec);
      },
      py::arg("kind"), py::arg("n"), py::arg("m") = 0, py::arg("seed") = 1,
      py::arg("w_min") = 0.0, py::arg("w_max") = 1048576.0, py::arg("integer_weights") = true);

  m.def(
      "parse_dimacs",
      [](const std::string& text, bool integer_weights) {
        return parse_dimacs(text, integer_weights);
      },
      py::arg("text"), py::arg("integer_weights") = false);
  m.def("write_dimacs", &write_dimacs, py::arg("graph"));

  m.def(
      "compute_params",
      [](std::size_t n) {
        const SolverParams p = compute_params(n);
        return std::make_tuple(p.k, p.t, p.l_top);
      },
      py::arg("n"), "(k, t, levels) for an n-vertex constant-degree graph");
}
