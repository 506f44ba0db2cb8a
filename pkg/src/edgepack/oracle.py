"""Exhaustive edge open packing search for small graphs.

Two edges conflict when some third edge joins their endpoints, so an EOP set
is an independent set of the conflict graph on E(G). The search below is a
plain include/exclude branch and bound over that conflict graph, using edge
bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, InputError, InternalError
from .graph import EOPSolution, Graph, common_edge, is_eop_set


@dataclass(frozen=True)
class SearchBudget:
    max_edges: int = 24
    max_nodes: int = 20_000_000

    def __post_init__(self):
        if self.max_edges <= 0 or self.max_nodes <= 0:
            raise ValueError("search budget caps must be positive")


def conflict_masks(g: Graph) -> list[int]:
    """Bit ``j`` of ``masks[i]`` is set iff edges ``i`` and ``j`` have a common edge."""
    m = g.m
    masks = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if common_edge(g, g.edges[i], g.edges[j]) is not None:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


class _Search:
    def __init__(self, g: Graph, budget: SearchBudget):
        self.conf = conflict_masks(g)
        deg = g.degree
        # high-degree edges first: they knock out the most candidates
        self.branch_order = sorted(
            range(g.m), key=lambda i: (deg(g.edges[i][0]) + deg(g.edges[i][1]), i), reverse=True
        )
        self.budget = budget
        self.nodes = 0
        self.g = g
        self.incumbent = 0

    def best_within(self, cand: int) -> tuple[int, int]:
        """Maximum independent set of the conflict graph restricted to ``cand``."""
        best = [0, 0]

        def rec(cand: int, size: int, chosen: int) -> None:
            self.nodes += 1
            if self.nodes > self.budget.max_nodes:
                raise BudgetExceeded(
                    f"search exceeded {self.budget.max_nodes} nodes",
                    best=self._solution(best[1]) if best[0] >= self.incumbent else None,
                )
            if size > best[0]:
                best[0], best[1] = size, chosen
            if size + cand.bit_count() <= best[0]:
                return
            for e in self.branch_order:
                if cand >> e & 1:
                    break
            bit = 1 << e
            rec(cand & ~bit & ~self.conf[e], size + 1, chosen | bit)
            rec(cand & ~bit, size, chosen)

        rec(cand, 0, 0)
        return best[0], best[1]

    def _solution(self, mask: int) -> EOPSolution:
        edges = tuple(sorted(self.g.edges[i] for i in range(self.g.m) if mask >> i & 1))
        return EOPSolution(len(edges), edges)


def brute_force_eop(g: Graph, budget: SearchBudget | None = None) -> EOPSolution:
    """Exact maximum EOP set; the witness is the lexicographically least optimal
    set of edge ids (input order)."""
    budget = budget or SearchBudget()
    if g.m > budget.max_edges:
        raise InputError(f"graph has {g.m} edges, oracle budget allows {budget.max_edges}")
    search = _Search(g, budget)
    full = (1 << g.m) - 1
    target, _ = search.best_within(full)
    search.incumbent = target

    # greedy lexicographic pass: take each edge id if an optimum still extends it
    chosen = 0
    size = 0
    cand = full
    for e in range(g.m):
        if size == target:
            break
        if not cand >> e & 1:
            continue
        rest = cand & ~(1 << e) & ~search.conf[e] & ~((1 << (e + 1)) - 1)
        if size + 1 + search.best_within(rest)[0] == target:
            chosen |= 1 << e
            size += 1
            cand = rest
        else:
            cand &= ~(1 << e)
    sol = search._solution(chosen)
    if sol.value != target or not is_eop_set(g, sol.witness)[0]:
        raise InternalError("oracle witness reconstruction failed")
    return sol
