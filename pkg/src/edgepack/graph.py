"""Immutable simple graphs and the edge open packing checker.

Vertices are dense integers ``0..n-1``. Edges are stored as ``(u, v)`` with
``u < v`` and carry a stable id given by first appearance in the input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    __slots__ = ("n", "edges", "adj", "_index")

    def __init__(self, n: int, edges: Sequence[Edge], adj: Sequence[Sequence[int]]):
        # use build_graph(); this constructor trusts its arguments
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(edges)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)
        self._index = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges)))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v] + (v,)))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self._index

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._index[_norm(u, v)]
        except KeyError:
            raise InputError(f"({u}, {v}) is not an edge") from None

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def build_graph(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph on ``n`` vertices; duplicate pairs are dropped."""
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    seen: dict[Edge, None] = {}
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        seen.setdefault(_norm(u, v), None)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    return Graph(n, list(seen), adj)


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(t: int) -> Graph:
    """K_{1,t} with center 0."""
    return build_graph(t + 1, [(0, i) for i in range(1, t + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return build_graph(g.n + h.n, list(g.edges) + shifted)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Rename vertex ``v`` to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise InputError("relabeling must be a permutation of the vertices")
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[S]`` and the old->new vertex map (new ids follow sorted old ids)."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(keep)}
    pairs = [
        (index[u], index[w])
        for u in keep
        for w in g.adj[u]
        if u < w and w in index
    ]
    return build_graph(len(keep), pairs), index


@dataclass(frozen=True)
class ComponentLabeling:
    component_id: tuple[int, ...]
    component_count: int

    def members(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.component_count)]
        for v, c in enumerate(self.component_id):
            groups[c].append(v)
        return groups


def connected_components(g: Graph) -> ComponentLabeling:
    # ids are assigned in order of each component's smallest vertex
    comp = [-1] * g.n
    count = 0
    for s in range(g.n):
        if comp[s] != -1:
            continue
        comp[s] = count
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if comp[w] == -1:
                    comp[w] = count
                    queue.append(w)
        count += 1
    return ComponentLabeling(tuple(comp), count)


def is_connected(g: Graph) -> bool:
    return connected_components(g).component_count <= 1


@dataclass(frozen=True)
class EOPSolution:
    """A packing value together with a witness edge set of that size."""

    value: int
    witness: tuple[Edge, ...]

    def __post_init__(self):
        if len(self.witness) != self.value:
            raise ValueError(f"witness has {len(self.witness)} edges, value is {self.value}")


def solution(edges: Iterable[Sequence[int]]) -> EOPSolution:
    w = tuple(sorted({_norm(int(e[0]), int(e[1])) for e in edges}))
    return EOPSolution(len(w), w)


def common_edge(g: Graph, e1: Edge, e2: Edge) -> Edge | None:
    """Some edge other than e1, e2 joining an endpoint of e1 to one of e2, if any."""
    for x in e1:
        for y in e2:
            if x == y:
                continue
            e = _norm(x, y)
            if e != e1 and e != e2 and e in g._index:
                return e
    return None


def is_eop_set(g: Graph, d: Iterable[Sequence[int]]) -> tuple[bool, tuple[Edge, Edge, Edge] | None]:
    """Check that no two edges of ``d`` have a common edge in ``g``.

    Returns ``(True, None)`` or ``(False, (e1, e2, e))`` with ``e`` a common
    edge of ``e1`` and ``e2``.
    """
    members = []
    for pair in d:
        e = _norm(int(pair[0]), int(pair[1]))
        if e not in g._index:
            raise InputError(f"{e} is not an edge of the graph")
        members.append(e)
    members = sorted(set(members))
    for i, e1 in enumerate(members):
        for e2 in members[i + 1:]:
            e = common_edge(g, e1, e2)
            if e is not None:
                return False, (e1, e2, e)
    return True, None


def is_induced_star_forest(g: Graph, d: Iterable[Sequence[int]]) -> bool:
    """True iff ``G[V_D]`` is a disjoint union of induced stars whose edges are exactly ``d``."""
    dset = {_norm(int(e[0]), int(e[1])) for e in d}
    verts = sorted({v for e in dset for v in e})
    sub, index = induced_subgraph(g, verts)
    back = {i: v for v, i in index.items()}
    if {_norm(back[u], back[v]) for u, v in sub.edges} != dset:
        return False
    for group in connected_components(sub).members():
        if len(group) <= 2:
            continue
        centers = [v for v in group if sub.degree(v) == len(group) - 1]
        if len(centers) != 1:
            return False
        if any(sub.degree(v) != 1 for v in group if v != centers[0]):
            return False
    return True


def eop_upper_bound(g: Graph) -> int | None:
    """floor(|E| / min degree), or None when some vertex is isolated."""
    delta = g.min_degree
    if g.n == 0 or delta == 0:
        return None
    return g.m // delta
