"""Pick a solver for a graph and run it."""

from __future__ import annotations

from .block import solve_block
from .errors import EOPError
from .graph import EOPSolution, Graph, connected_components, induced_subgraph, solution
from .oracle import SearchBudget, brute_force_eop
from .pig import solve_pig
from .recognition import (
    BLOCK,
    PROPER_INTERVAL,
    SPLIT,
    build_cut_tree,
    compute_bco,
    is_block_graph,
    split_partition,
)
from .split import solve_split

BRUTE = "brute"
CLASS_CHOICES = ("auto", "pig", "block", "split", "brute")
_ALIASES = {"pig": PROPER_INTERVAL, "block": BLOCK, "split": SPLIT, "brute": BRUTE}


class NotInClass(EOPError):
    """The requested (or every supported) class does not contain the graph."""


def solve_block_any(g: Graph) -> EOPSolution:
    """Block solver applied per connected component; packings add over components."""
    labels = connected_components(g)
    if labels.component_count <= 1:
        return solve_block(g)
    edges = []
    for group in labels.members():
        sub, index = induced_subgraph(g, group)
        back = {i: v for v, i in index.items()}
        edges.extend((back[u], back[v]) for u, v in solve_block(sub).witness)
    return solution(edges)


def _try(g: Graph, cls: str, budget: SearchBudget) -> EOPSolution | None:
    if cls == PROPER_INTERVAL:
        o = compute_bco(g)
        return solve_pig(g, o) if o is not None else None
    if cls == BLOCK:
        if not is_block_graph(g):
            return None
        if connected_components(g).component_count <= 1:
            return solve_block(g, build_cut_tree(g))
        return solve_block_any(g)
    if cls == SPLIT:
        p = split_partition(g)
        return solve_split(g, p) if p is not None else None
    if cls == BRUTE:
        return brute_force_eop(g, budget) if g.m <= budget.max_edges else None
    raise ValueError(f"unknown class {cls!r}")


def solve(g: Graph, cls: str = "auto", budget: SearchBudget | None = None) -> tuple[str, EOPSolution]:
    """Solve with the named class's solver, or in auto mode the first class that applies.

    Auto order is proper interval, block, split, then the exhaustive oracle if
    the graph is within its edge budget. Returns ``(class tag, solution)``.
    """
    budget = budget or SearchBudget()
    if cls == "auto":
        order = [PROPER_INTERVAL, BLOCK, SPLIT, BRUTE]
    else:
        if cls not in _ALIASES:
            raise ValueError(f"unknown class {cls!r}")
        order = [_ALIASES[cls]]
    for tag in order:
        sol = _try(g, tag, budget)
        if sol is not None:
            return tag, sol
    if cls == BRUTE:
        raise NotInClass(f"graph has {g.m} edges, oracle budget allows {budget.max_edges}")
    raise NotInClass(
        "graph is not in a supported class" if cls == "auto" else f"graph is not in class {cls!r}"
    )
