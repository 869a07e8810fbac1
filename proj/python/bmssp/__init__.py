"""Single-source shortest paths by bounded multi-source recursion."""

from ._core import (
    BmsspError,
    Graph,
    bellman_ford,
    compute_params,
    dijkstra,
    generate,
    parse_dimacs,
    solve,
    solve_report,
    verify,
    write_dimacs,
)

__all__ = [
    "BmsspError",
    "Graph",
    "bellman_ford",
    "compute_params",
    "dijkstra",
    "generate",
    "parse_dimacs",
    "solve",
    "solve_report",
    "verify",
    "write_dimacs",
]
