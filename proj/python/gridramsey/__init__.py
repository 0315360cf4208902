"""Edge colorings of grids and small hypergraphs.

Thin wrapper over the C++ core: constructions (binary, mubayi,
asymmetric grids, f3 families), verifiers (alternating rectangles, local
color counts, chromatic bounds), pigeonhole witness finders, and exact
backtracking searches for small Ramsey-type values.
"""

from ._core import (
    EdgePartition,
    GraphColoring,
    GridColoring,
    asymmetric_grid,
    binary_coloring,
    chi_slow_grow_bound,
    exact_G,
    exact_f,
    exact_g,
    f3_43_coloring,
    f3_56_coloring,
    find_alternating_rectangle,
    grid_to_partite3,
    mubayi_coloring,
    parse,
    partite3_to_grid,
    product_partition,
    random_coloring,
    random_grid_coloring,
    run_cli,
    shelah_witness,
    stepdown_bound,
    stepdown_witness,
    verify_pq,
)

__all__ = [
    "EdgePartition",
    "GraphColoring",
    "GridColoring",
    "asymmetric_grid",
    "binary_coloring",
    "chi_slow_grow_bound",
    "exact_G",
    "exact_f",
    "exact_g",
    "f3_43_coloring",
    "f3_56_coloring",
    "find_alternating_rectangle",
    "grid_to_partite3",
    "mubayi_coloring",
    "parse",
    "partite3_to_grid",
    "product_partition",
    "random_coloring",
    "random_grid_coloring",
    "run_cli",
    "shelah_witness",
    "stepdown_bound",
    "stepdown_witness",
    "verify_pq",
]
