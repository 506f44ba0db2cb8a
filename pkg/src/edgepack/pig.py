"""Maximum edge open packing on proper interval graphs.

Works on suffixes ``G[v_t..v_n]`` of a bi-compatible elimination ordering.
For the first vertex ``v_t`` of a suffix, with ``k = l(v_t)``:

* the vertex is left uncovered, giving the value of suffix ``t+1``;
* one edge ``v_t v_j`` with ``t < j <= k`` is taken, after which nothing at
  positions up to ``l(v_j)`` can be used: ``1 + rho[l(v_j) + 1]``;
* a path ``v_t v_j v_p`` with ``k < p <= l(v_j)`` is taken, which blocks
  everything up to ``l(v_p)``: ``2 + rho[l(v_p) + 1]``.

Memoizing ``rho`` over start positions gives O(n + m) states-times-choices.
All positions here are 0-based; ``rho[n] = 0`` is the empty suffix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InputError, InternalError
from .graph import EOPSolution, Graph, is_eop_set, solution
from .recognition import BCOrdering, compute_bco, make_ordering, validate_bco

SKIP = "rho2"
ONE_EDGE = "rho_p"
TWO_EDGES = "rho_pp"


@dataclass
class SuffixTable:
    rho: list[int]
    # per position: (tag, j, p); j/p are -1 when unused
    choice: list[tuple[str, int, int]]
    # branch values at each position, None where the branch is undefined
    rho_p: list[Optional[int]]
    rho_pp: list[Optional[int]]
    rho_2: list[Optional[int]]


def suffix_table(o: BCOrdering) -> SuffixTable:
    n = o.n
    last = o.last_neighbor
    rho = [0] * (n + 1)
    choice: list[tuple[str, int, int]] = [(SKIP, -1, -1)] * n
    rho_p: list[Optional[int]] = [None] * n
    rho_pp: list[Optional[int]] = [None] * n
    rho_2: list[Optional[int]] = [None] * n
    for t in range(n - 1, -1, -1):
        k = last[t]
        rho_2[t] = rho[t + 1]
        best, pick = rho[t + 1], (SKIP, -1, -1)
        if k == t:
            rho[t], choice[t] = best, pick
            continue

        # one edge v_t v_j
        j1, f1 = -1, -1
        reach = k
        for j in range(t + 1, k + 1):
            f = rho[last[j] + 1]
            if f > f1:
                j1, f1 = j, f
            if last[j] > reach:
                reach = last[j]
        rho_p[t] = 1 + f1

        # path v_t v_j v_p: admissible p over all j form the range (k, max l(v_j)]
        p2, f2 = -1, -1
        for p in range(k + 1, reach + 1):
            f = rho[last[p] + 1]
            if f > f2:
                p2, f2 = p, f
        if p2 >= 0:
            rho_pp[t] = 2 + f2
            j2 = next(j for j in range(t + 1, k + 1) if last[j] >= p2)

        # ties prefer the two-edge branch, then one edge, then skipping v_t
        if rho_p[t] >= best:
            best, pick = rho_p[t], (ONE_EDGE, j1, -1)
        if rho_pp[t] is not None and rho_pp[t] >= best:
            best, pick = rho_pp[t], (TWO_EDGES, j2, p2)
        rho[t], choice[t] = best, pick
    return SuffixTable(rho, choice, rho_p, rho_pp, rho_2)


def suffix_value(table: SuffixTable, t: int) -> int:
    """Packing number of ``G[v_t..v_n]`` (0-based ``t``, ``t = n`` is empty)."""
    if not 0 <= t < len(table.rho):
        raise InputError(f"suffix start {t} out of range")
    return table.rho[t]


def reconstruct_witness(table: SuffixTable, o: BCOrdering) -> list[tuple[int, int]]:
    order, last = o.order, o.last_neighbor
    out = []
    t = 0
    while t < o.n:
        tag, j, p = table.choice[t]
        if tag == SKIP:
            t += 1
        elif tag == ONE_EDGE:
            out.append((order[t], order[j]))
            t = last[j] + 1
        elif tag == TWO_EDGES:
            out.append((order[t], order[j]))
            out.append((order[j], order[p]))
            t = last[p] + 1
        else:
            raise InternalError(f"unknown choice tag {tag!r} at position {t}")
    return out


def solve_pig(g: Graph, o: BCOrdering | None = None) -> EOPSolution:
    """Maximum EOP set of a proper interval graph, given (or computing) a BCO."""
    if o is None:
        o = compute_bco(g)
        if o is None:
            raise InputError("graph is not a proper interval graph")
    else:
        if not isinstance(o, BCOrdering):
            o = make_ordering(g, o)
        if not validate_bco(g, o):
            raise InputError("ordering is not a bi-compatible elimination ordering")
    table = suffix_table(o)
    sol = solution(reconstruct_witness(table, o))
    if sol.value != table.rho[0]:
        raise InternalError(f"witness has {sol.value} edges, table says {table.rho[0]}")
    return sol


def check_solution(g: Graph, sol: EOPSolution) -> None:
    ok, triple = is_eop_set(g, sol.witness)
    if not ok:
        raise InternalError(f"witness is not an edge open packing: {triple}")
