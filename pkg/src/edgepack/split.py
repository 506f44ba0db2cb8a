"""Maximum edge open packing on split graphs.

With ``K`` a maximum clique and ``S`` the independent side, an optimal set is
a single star centered at some ``x`` in ``K``: either all of ``x``'s
``S``-neighbors, or one clique edge ``xy`` plus the ``S``-neighbors of ``x``
that are not also neighbors of ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .errors import InputError, InternalError
from .graph import EOPSolution, Graph, solution
from .recognition import SplitPartition, check_split_partition, split_partition


@dataclass
class SplitStats:
    """S-neighbor counts for clique vertices.

    ``common`` is the sparse |K| x |K| matrix A^T A, where A is the S-by-K
    incidence matrix: its diagonal holds ``l_x`` and off-diagonal entries
    hold ``l_xy``. Rows and columns follow ``clique`` order.
    """

    clique: tuple[int, ...]
    common: sp.csr_matrix

    def __post_init__(self):
        self._index = {x: i for i, x in enumerate(self.clique)}
        self._diag = self.common.diagonal()

    def l(self, x: int) -> int:
        return int(self._diag[self._index[x]])

    def pair(self, x: int, y: int) -> int:
        if x == y:
            raise ValueError("pair counts need two distinct clique vertices")
        return int(self.common[self._index[x], self._index[y]])


def compute_stats(g: Graph, p: SplitPartition, check: bool = True) -> SplitStats:
    if check and not check_split_partition(g, p):
        raise InputError("not a valid split partition of this graph")
    clique = tuple(sorted(p.clique))
    index = np.full(g.n, -1, dtype=np.int64)
    index[list(clique)] = np.arange(len(clique))
    rows, cols = [], []
    for r, s in enumerate(p.independent):
        nb = g.adj[s]  # all in K since S is independent
        rows.extend([r] * len(nb))
        cols.extend(nb)
    cols = index[np.asarray(cols, dtype=np.int64)] if cols else np.zeros(0, dtype=np.int64)
    a = sp.csr_matrix(
        (np.ones(len(rows), dtype=np.int64), (np.asarray(rows, dtype=np.int64), cols)),
        shape=(len(p.independent), len(clique)),
    )
    return SplitStats(clique, (a.T @ a).tocsr())


def solve_split(g: Graph, p: SplitPartition | None = None) -> EOPSolution:
    """Maximum EOP set of a split graph given a maximum-clique partition."""
    certified = p is None
    if p is None:
        p = split_partition(g)
        if p is None:
            raise InputError("graph is not a split graph")
    stats = compute_stats(g, p, check=not certified)
    clique = list(stats.clique)
    in_k = set(clique)
    lx = [stats.l(x) for x in clique]

    # rho_2: the full S-neighborhood of one clique vertex
    x2 = None
    if clique:
        i2 = int(np.argmax(lx))
        x2, rho2 = clique[i2], lx[i2]
    else:
        rho2 = 0

    # rho_1: a clique edge xy plus x's private S-neighbors; for each x take
    # the partner y sharing the fewest S-neighbors, which is 0 unless x shares
    # a neighbor with every other clique vertex
    rho1, pair1 = None, None
    if len(clique) >= 2:
        c = stats.common
        for i, x in enumerate(clique):
            cols = c.indices[c.indptr[i]:c.indptr[i + 1]]
            vals = c.data[c.indptr[i]:c.indptr[i + 1]]
            shared = {int(j): int(v) for j, v in zip(cols, vals) if j != i and v}
            if len(shared) < len(clique) - 1:
                j = next(j for j in range(len(clique)) if j != i and j not in shared)
                best = 0
            else:
                j, best = min(shared.items(), key=lambda kv: (kv[1], kv[0]))
            val = lx[i] - best + 1
            if rho1 is None or val > rho1:
                rho1, pair1 = val, (x, clique[j])

    if rho1 is not None and rho1 >= rho2:
        x, y = pair1
        ny = set(g.adj[y])
        edges = [(x, y)] + [(x, s) for s in g.adj[x] if s not in in_k and s not in ny]
    elif rho2 > 0:
        edges = [(x2, s) for s in g.adj[x2] if s not in in_k]
    else:
        edges = []
    sol = solution(edges)
    expected = max(rho1 or 0, rho2, 0)
    if sol.value != expected:
        raise InternalError(f"split witness has {sol.value} edges, formula gives {expected}")
    return sol
