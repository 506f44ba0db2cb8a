"""Maximum edge open packing on block graphs by DP over the rooted cut tree.

For each cut vertex ``v`` (deepest first) five labels describe the branch
``G_v`` hanging below it:

``rho_c``   best packing with ``v`` the center of a star
``rho_l``   best packing with ``v`` a leaf of a star
``rho_p``   best packing leaving ``v`` uncovered
``rho_pp``  best packing leaving all of ``N[v]`` uncovered
``rho_o``   the overall best, ``max(rho_c, rho_l, rho_p)``

Non-cut vertices have all labels equal to 0. The value of a child branch
``G_v^B`` (block ``B`` minus ``v`` with everything below it) is computed from
the labels of the vertices of ``B`` directly; see :func:`_branch_value`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError, InternalError
from .graph import EOPSolution, Graph, is_connected, solution
from .recognition import CutTree, build_cut_tree

NEG = float("-inf")


@dataclass
class NodeLabels:
    rho_o: dict[int, int] = field(default_factory=dict)
    rho_c: dict[int, int] = field(default_factory=dict)
    rho_l: dict[int, int] = field(default_factory=dict)
    rho_p: dict[int, int] = field(default_factory=dict)
    rho_pp: dict[int, int] = field(default_factory=dict)

    def get(self, name: str, v: int) -> int:
        return getattr(self, name).get(v, 0)


@dataclass
class BlockScores:
    """Per (cut vertex, child block) scores for the star-center and star-leaf cases."""

    a_b: int
    abar_b: int
    m_b: int
    mbar_b: int
    a_arg: int
    m_arg: int

    @property
    def type1(self) -> bool:
        return self.a_b >= self.abar_b


@dataclass
class BranchRecord:
    """How the optimum of ``G_v^B`` was formed.

    ``center``/``leaf`` are set when one edge of ``B - v`` is used; otherwise
    ``open_vertex`` names the single vertex of ``B - v`` allowed to be covered
    from below (or None).
    """

    value: int
    center: int | None = None
    leaf: int | None = None
    open_vertex: int | None = None


@dataclass
class BlockDP:
    tree: CutTree
    labels: NodeLabels
    scores: dict[tuple[int, int], BlockScores]
    branches: dict[tuple[int, int], BranchRecord]
    forced_block: dict[int, int]
    leaf_block: dict[int, int]


def _branch_value(labels: NodeLabels, members: list[int]) -> BranchRecord:
    """Packing number of ``G_v^B`` where ``members`` are the vertices of ``B - v``.

    Either no edge of the clique ``B - v`` is used, so at most one member may
    be covered (two covered members would be joined by a clique edge), or
    exactly one clique edge ``xy`` is used: then the other members stay
    uncovered, ``y`` is a leaf whose neighborhood below is untouched, and
    ``x`` is the center, possibly with more leaves below it.
    """
    get = labels.get
    base = sum(get("rho_p", u) for u in members)
    rec = BranchRecord(base)
    for u in members:
        gain = get("rho_o", u) - get("rho_p", u)
        if base + gain > rec.value:
            rec = BranchRecord(base + gain, open_vertex=u)
    for x in members:
        as_center = max(get("rho_c", x), get("rho_pp", x)) - get("rho_p", x)
        for y in members:
            if y == x:
                continue
            total = 1 + base + as_center + get("rho_pp", y) - get("rho_p", y)
            if total > rec.value:
                rec = BranchRecord(total, center=x, leaf=y)
    return rec


def block_dp(g: Graph, tree: CutTree) -> BlockDP:
    labels = NodeLabels()
    get = labels.get
    scores: dict[tuple[int, int], BlockScores] = {}
    branches: dict[tuple[int, int], BranchRecord] = {}
    forced: dict[int, int] = {}
    leaf_block: dict[int, int] = {}
    for v in tree.bottom_up():
        children = tree.cc[v]
        if not children:
            raise InternalError(f"cut vertex {v} has no child blocks")
        below_p = {}
        rho_p = 0
        for b in children:
            members = [u for u in tree.blocks[b] if u != v]
            below_p[b] = sum(get("rho_p", w) for w in tree.cb[b])
            abar = below_p[b]
            a_best, a_arg = NEG, -1
            m_best, m_arg = NEG, -1
            for u in members:
                others = abar - get("rho_p", u)
                a = 1 + get("rho_pp", u) + others
                if a > a_best:
                    a_best, a_arg = a, u
                mv = max(get("rho_c", u), get("rho_pp", u)) + 1 + others
                if mv > m_best:
                    m_best, m_arg = mv, u
            scores[v, b] = BlockScores(a_best, abar, m_best, 0, a_arg, m_arg)
            branches[v, b] = _branch_value(labels, members)
            rho_p += branches[v, b].value
        rho_pp = sum(below_p.values())
        for b in children:
            scores[v, b].mbar_b = rho_pp - below_p[b]

        ss = [scores[v, b] for b in children]
        if any(s.type1 for s in ss):
            rho_c = sum(s.a_b if s.type1 else s.abar_b for s in ss)
        else:
            gains = [s.a_b - s.abar_b for s in ss]
            best = max(gains)
            forced[v] = children[gains.index(best)]
            rho_c = sum(s.abar_b for s in ss) + best
        totals = [s.m_b + s.mbar_b for s in ss]
        rho_l = max(totals)
        leaf_block[v] = children[totals.index(rho_l)]

        labels.rho_c[v] = rho_c
        labels.rho_l[v] = rho_l
        labels.rho_p[v] = rho_p
        labels.rho_pp[v] = rho_pp
        labels.rho_o[v] = max(rho_c, rho_l, rho_p)
        if not rho_pp <= rho_p <= labels.rho_o[v]:
            raise InternalError(f"label order violated at cut vertex {v}")
    return BlockDP(tree, labels, scores, branches, forced, leaf_block)


def _expand(dp: BlockDP, tasks: list[tuple]) -> list[tuple[int, int]]:
    """Expand DP choices top-down into an edge list, starting from ``tasks``."""
    tree, labels = dp.tree, dp.labels
    cuts = tree.cut_vertices
    out: list[tuple[int, int]] = []
    stack = list(tasks)
    while stack:
        kind, v, *rest = stack.pop()
        if kind != "branch" and v not in cuts:
            continue
        if kind == "o":
            if labels.rho_c[v] == labels.rho_o[v]:
                stack.append(("c", v))
            elif labels.rho_l[v] == labels.rho_o[v]:
                stack.append(("l", v))
            else:
                stack.append(("p", v))
        elif kind == "star":
            # v is a star center through an edge above it; below, it may gain more leaves
            stack.append(("c" if labels.rho_c[v] >= labels.rho_pp[v] else "pp", v))
        elif kind == "p":
            stack.extend(("branch", v, b) for b in tree.cc[v])
        elif kind == "pp":
            stack.extend(("p", w) for b in tree.cc[v] for w in tree.cb[b])
        elif kind == "c":
            for b in tree.cc[v]:
                s = dp.scores[v, b]
                take = dp.forced_block[v] == b if v in dp.forced_block else s.type1
                if take:
                    out.append((v, s.a_arg))
                    stack.append(("pp", s.a_arg))
                    stack.extend(("p", w) for w in tree.cb[b] if w != s.a_arg)
                else:
                    stack.extend(("p", w) for w in tree.cb[b])
        elif kind == "l":
            for b in tree.cc[v]:
                if b == dp.leaf_block[v]:
                    u = dp.scores[v, b].m_arg
                    out.append((v, u))
                    stack.append(("star", u))
                    stack.extend(("p", w) for w in tree.cb[b] if w != u)
                else:
                    stack.extend(("p", w) for w in tree.cb[b])
        elif kind == "branch":
            b = rest[0]
            rec = dp.branches[v, b]
            members = [u for u in tree.blocks[b] if u != v]
            if rec.center is not None:
                out.append((rec.center, rec.leaf))
                stack.append(("star", rec.center))
                stack.append(("pp", rec.leaf))
                stack.extend(("p", u) for u in members if u not in (rec.center, rec.leaf))
            else:
                stack.extend(("o" if u == rec.open_vertex else "p", u) for u in members)
        else:
            raise InternalError(f"unknown reconstruction step {kind!r}")
    return out


def reconstruct_block_witness(dp: BlockDP) -> list[tuple[int, int]]:
    """Witness for the whole graph, following the best of rho_c, rho_l, rho_p at the root."""
    return _expand(dp, [("o", dp.tree.root)])


def solve_gvb(dp: BlockDP, v: int, b: int) -> EOPSolution:
    """Optimal packing of the branch ``G_v^B`` for cut vertex ``v`` and child block ``b``."""
    if (v, b) not in dp.branches:
        raise InputError(f"block {b} is not a child of cut vertex {v}")
    sol = solution(_expand(dp, [("branch", v, b)]))
    if sol.value != dp.branches[v, b].value:
        raise InternalError("branch witness size does not match its value")
    return sol


def solve_block(g: Graph, tree: CutTree | None = None) -> EOPSolution:
    """Maximum EOP set of a connected block graph."""
    if not is_connected(g):
        raise InputError("block solver requires a connected graph")
    if tree is None:
        tree = build_cut_tree(g)
        if tree is None:
            raise InputError("graph is not a block graph")
    if tree.root is None:
        if g.m == 0:
            return EOPSolution(0, ())
        return solution([g.edges[0]])
    dp = block_dp(g, tree)
    sol = solution(reconstruct_block_witness(dp))
    if sol.value != dp.labels.rho_o[tree.root]:
        raise InternalError(
            f"witness has {sol.value} edges, DP value is {dp.labels.rho_o[tree.root]}"
        )
    return sol
