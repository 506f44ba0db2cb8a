"""Recognition of proper interval, block, split and chordal graphs.

Each recognizer returns a structural certificate on success and ``None`` when
the graph is not in the class. Certificates are checked before they are
returned, so a non-``None`` result can be trusted without re-verification.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InputError, InternalError
from .graph import Graph, connected_components, is_connected

PROPER_INTERVAL = "proper_interval"
BLOCK = "block"
SPLIT = "split"
CHORDAL = "chordal"
NONE = "none"


# --------------------------------------------------------------------------
# perfect elimination orderings


def _max_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search, O(n + m) with buckets."""
    n = g.n
    weight = [0] * n
    buckets: list[set[int]] = [set(range(n))]
    visited = [False] * n
    order = []
    top = 0
    for _ in range(n):
        while top > 0 and not buckets[top]:
            top -= 1
        v = buckets[top].pop()
        visited[v] = True
        order.append(v)
        for w in g.adj[v]:
            if visited[w]:
                continue
            buckets[weight[w]].discard(w)
            weight[w] += 1
            if weight[w] == len(buckets):
                buckets.append(set())
            buckets[weight[w]].add(w)
            if weight[w] > top:
                top = weight[w]
    return order


def is_peo(g: Graph, order: Sequence[int]) -> bool:
    """Each vertex's later neighbors must form a clique (parent test, O(n + m))."""
    if sorted(order) != list(range(g.n)):
        return False
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adjset = [set(a) for a in g.adj]
    for v in order:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        for w in later:
            if w != parent and w not in adjset[parent]:
                return False
    return True


def compute_peo(g: Graph) -> list[int] | None:
    """A perfect elimination ordering, or ``None`` when ``g`` is not chordal."""
    order = _max_cardinality_search(g)[::-1]
    return order if is_peo(g, order) else None


def is_chordal(g: Graph) -> bool:
    return compute_peo(g) is not None


# --------------------------------------------------------------------------
# bi-compatible elimination orderings


@dataclass(frozen=True)
class BCOrdering:
    """A vertex order whose forward and reverse are both PEOs.

    Positions are 0-based: ``last_neighbor[i]`` is the largest position ``r``
    with ``order[i]`` adjacent to ``order[r]`` and ``r > i``, or ``i`` itself.
    """

    order: tuple[int, ...]
    position: tuple[int, ...]
    last_neighbor: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def pivot(self) -> int:
        """Position of l(v_1), i.e. the end of the clique prefix."""
        return self.last_neighbor[0] if self.order else -1


def make_ordering(g: Graph, order: Sequence[int]) -> BCOrdering:
    """Wrap a vertex permutation with positions and last-neighbor indices (not validated)."""
    if len(order) != g.n or sorted(order) != list(range(g.n)):
        raise InputError("ordering must be a permutation of the vertices")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    last = [max([i] + [pos[w] for w in g.adj[v]]) for i, v in enumerate(order)]
    return BCOrdering(tuple(order), tuple(pos), tuple(last))


def validate_bco(g: Graph, o: BCOrdering | Sequence[int]) -> bool:
    """Umbrella test: for every edge v_i v_j (i < j) positions i..j form a clique.

    Equivalent linear-time form: each vertex's later neighbors occupy exactly
    the positions ``i+1..l(i)``, and ``l`` is non-decreasing.
    """
    if not isinstance(o, BCOrdering):
        o = make_ordering(g, o)
    if o.n != g.n:
        return False
    pos, last = o.position, o.last_neighbor
    prev = -1
    for i, v in enumerate(o.order):
        later = sum(1 for w in g.adj[v] if pos[w] > i)
        if later != last[i] - i:
            return False
        if last[i] < prev:
            return False
        prev = last[i]
    return True


class _Cell:
    __slots__ = ("members", "head", "live", "prev", "next", "stamp", "split")

    def __init__(self):
        self.members: list[int] = []
        self.head = 0
        self.live = 0
        self.prev = None
        self.next = None
        self.stamp = -1
        self.split = None


def lex_bfs(g: Graph, prefer: Sequence[int]) -> list[int]:
    """Lexicographic BFS by partition refinement.

    Ties are broken toward the earliest vertex of ``prefer``; passing the
    reverse of a previous sweep gives the LexBFS+ variant.
    """
    n = g.n
    rank = [0] * n
    for i, v in enumerate(prefer):
        rank[v] = i
    nbrs = [sorted(a, key=rank.__getitem__) for a in g.adj]
    first = _Cell()
    first.members = list(prefer)
    first.live = n
    cell_of = [first] * n
    visited = [False] * n
    head = first
    order = []
    for _ in range(n):
        while head.live == 0:
            head = head.next
            head.prev = None
        c = head
        while True:
            v = c.members[c.head]
            c.head += 1
            if not visited[v] and cell_of[v] is c:
                break
        visited[v] = True
        c.live -= 1
        order.append(v)
        for w in nbrs[v]:
            if visited[w]:
                continue
            c = cell_of[w]
            if c.stamp != v:
                nc = _Cell()
                nc.prev, nc.next = c.prev, c
                if c.prev is not None:
                    c.prev.next = nc
                else:
                    head = nc
                c.prev = nc
                c.stamp = v
                c.split = nc
            nc = c.split
            c.live -= 1
            nc.members.append(w)
            nc.live += 1
            cell_of[w] = nc
    return order


def compute_bco(g: Graph) -> BCOrdering | None:
    """A certified BCO, or ``None`` when ``g`` is not a proper interval graph.

    Runs LexBFS followed by LexBFS+ sweeps; each candidate from the third
    sweep on is certified with the umbrella test. Components come out
    contiguous because LexBFS exhausts a component before leaving it.
    """
    if g.n == 0:
        return BCOrdering((), (), ())
    sweep = lex_bfs(g, range(g.n))
    for i in range(4):
        sweep = lex_bfs(g, sweep[::-1])
        if i >= 1:
            o = make_ordering(g, sweep)
            if validate_bco(g, o):
                return o
    return None


def is_proper_interval(g: Graph) -> bool:
    return compute_bco(g) is not None


# --------------------------------------------------------------------------
# blocks and cut trees


def biconnected_blocks(g: Graph) -> list[tuple[tuple[int, ...], int]]:
    """Blocks as ``(sorted vertices, edge count)``; isolated vertices form one-vertex blocks."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    t = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        if not g.adj[root]:
            blocks.append(((root,), 0))
            continue
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, u, iter(g.adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            if low[u] < low[parent]:
                low[parent] = low[u]
            if low[u] >= disc[parent]:
                verts = set()
                count = 0
                while True:
                    a, b = edge_stack.pop()
                    verts.add(a)
                    verts.add(b)
                    count += 1
                    if (a, b) == (parent, u):
                        break
                blocks.append((tuple(sorted(verts)), count))
    blocks.sort()
    return blocks


def is_block_graph(g: Graph) -> bool:
    return all(c == len(b) * (len(b) - 1) // 2 for b, c in biconnected_blocks(g))


@dataclass
class CutTree:
    """Rooted block/cut-vertex tree of a connected block graph.

    ``root`` is a cut vertex, or ``None`` when the graph is a single block.
    ``cc[v]`` lists the child blocks of cut vertex ``v``; ``cb[b]`` the child
    cut vertices of block ``b``. Blocks are referenced by index into ``blocks``.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    root: int | None
    cc: dict[int, tuple[int, ...]] = field(default_factory=dict)
    cb: dict[int, tuple[int, ...]] = field(default_factory=dict)
    parent_block: dict[int, int | None] = field(default_factory=dict)
    parent_cut: dict[int, int] = field(default_factory=dict)
    depth: dict[int, int] = field(default_factory=dict)

    def edge_count(self) -> int:
        return sum(len(c) for c in self.cc.values()) + sum(len(c) for c in self.cb.values())

    def bottom_up(self) -> list[int]:
        """Cut vertices by non-increasing depth, root last."""
        return sorted(self.cut_vertices, key=lambda v: (-self.depth[v], v))


def build_cut_tree(g: Graph, root_hint: int | None = None) -> CutTree | None:
    """Cut tree rooted at ``root_hint`` when it is a cut vertex, else at the smallest one.

    Returns ``None`` if some block is not a clique.
    """
    if not is_connected(g):
        raise InputError("cut tree requires a connected graph")
    found = biconnected_blocks(g)
    if any(c != len(b) * (len(b) - 1) // 2 for b, c in found):
        return None
    blocks = tuple(b for b, _ in found)
    if not blocks:
        return CutTree((), frozenset(), None)
    containing: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for v in b:
            containing.setdefault(v, []).append(i)
    cuts = frozenset(v for v, bs in containing.items() if len(bs) > 1)
    if not cuts:
        return CutTree(blocks, cuts, None)
    root = root_hint if root_hint in cuts else min(cuts)
    tree = CutTree(blocks, cuts, root)
    tree.parent_block[root] = None
    tree.depth[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        children = tuple(b for b in containing[v] if b != tree.parent_block[v])
        tree.cc[v] = children
        for b in children:
            tree.parent_cut[b] = v
            below = tuple(u for u in blocks[b] if u in cuts and u != v)
            tree.cb[b] = below
            for u in below:
                tree.parent_block[u] = b
                tree.depth[u] = tree.depth[v] + 1
                queue.append(u)
    if len(tree.depth) != len(cuts):
        raise InternalError("cut tree does not reach every cut vertex")
    return tree


# --------------------------------------------------------------------------
# split graphs


@dataclass(frozen=True)
class SplitPartition:
    clique: tuple[int, ...]
    independent: tuple[int, ...]


def check_split_partition(g: Graph, p: SplitPartition) -> bool:
    k, s = set(p.clique), set(p.independent)
    if k & s or len(k) + len(s) != g.n or not all(0 <= v < g.n for v in k | s):
        return False
    for x in k:
        if sum(1 for w in g.adj[x] if w in k) != len(k) - 1:
            return False
    if any(w in s for v in s for w in g.adj[v]):
        return False
    # |K| = omega: a split graph's clique number exceeds |K| only via an S
    # vertex adjacent to all of K
    return not any(sum(1 for w in g.adj[v] if w in k) == len(k) for v in s)


def split_partition(g: Graph) -> SplitPartition | None:
    """Maximum-clique split partition via the degree-sequence test, or ``None``."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    m = 0
    for i, d in enumerate(deg, start=1):
        if d >= i - 1:
            m = i
        else:
            break
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    clique = set(order[:m])
    independent = set(order[m:])
    full = [s for s in sorted(independent) if sum(1 for w in g.adj[s] if w in clique) == len(clique)]
    if full:
        clique.add(full[0])
        independent.discard(full[0])
    p = SplitPartition(tuple(sorted(clique)), tuple(sorted(independent)))
    if not check_split_partition(g, p):
        raise InternalError("degree-sequence split partition failed its certificate")
    return p


def is_split(g: Graph) -> bool:
    return split_partition(g) is not None


def classify(g: Graph) -> tuple[str, ...]:
    tags = []
    if is_proper_interval(g):
        tags.append(PROPER_INTERVAL)
    if is_block_graph(g):
        tags.append(BLOCK)
    if is_split(g):
        tags.append(SPLIT)
    if is_chordal(g):
        tags.append(CHORDAL)
    return tuple(tags) or (NONE,)
