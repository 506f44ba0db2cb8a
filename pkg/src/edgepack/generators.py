"""Seeded random instances for each supported class.

Randomness comes from numpy's PCG64 bit generator (PCG-XSL-RR 128/64) seeded
with the given integer, so an instance is fully determined by its parameters
and seed. Vertex labels are shuffled so recognizers never see a convenient
input order.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, build_graph

# split instances draw K-S adjacency in column chunks of this many S vertices
_SPLIT_CHUNK = 4096


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _relabeled(n: int, pairs, rng: np.random.Generator) -> Graph:
    perm = rng.permutation(n)
    return build_graph(n, ((int(perm[u]), int(perm[v])) for u, v in pairs))


def gen_proper_interval(n: int, density: float, seed: int) -> Graph:
    """Unit intervals with left endpoints spaced by gaps drawn from [0, 1 - density).

    Gaps stay below the interval length, so the graph is connected; density 1
    stacks every interval on top of the others and yields K_n.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = rng_for(seed)
    gaps = rng.uniform(0.0, 1.0 - density, n - 1) if density < 1.0 else np.zeros(n - 1)
    left = np.concatenate(([0.0], np.cumsum(gaps)))
    reach = np.searchsorted(left, left + 1.0, side="left")
    counts = reach - np.arange(n) - 1
    src = np.repeat(np.arange(n), counts)
    offsets = np.arange(src.size) - np.repeat(np.cumsum(counts) - counts, counts)
    dst = src + 1 + offsets
    return _relabeled(n, zip(src.tolist(), dst.tolist()), rng)


def gen_block(n_blocks: int, max_block_size: int, seed: int) -> Graph:
    """Glue ``n_blocks`` random cliques (2..max_block_size vertices) into a tree of blocks."""
    if n_blocks < 1 or max_block_size < 2:
        raise ValueError("need n_blocks >= 1 and max_block_size >= 2")
    rng = rng_for(seed)
    n = 1
    pairs = []
    for _ in range(n_blocks):
        at = int(rng.integers(n))
        size = int(rng.integers(2, max_block_size + 1))
        members = [at] + list(range(n, n + size - 1))
        n += size - 1
        pairs.extend((a, b) for i, a in enumerate(members) for b in members[i + 1:])
    return _relabeled(n, pairs, rng)


def gen_split(k_size: int, s_size: int, p: float, seed: int) -> Graph:
    """Clique on ``k_size`` vertices, independent set on ``s_size``, each K-S pair an edge with probability ``p``."""
    if k_size < 0 or s_size < 0:
        raise ValueError("part sizes must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = rng_for(seed)
    pairs = [(a, b) for a in range(k_size) for b in range(a + 1, k_size)]
    for start in range(0, s_size, _SPLIT_CHUNK):
        width = min(_SPLIT_CHUNK, s_size - start)
        hit = rng.random((k_size, width)) < p
        xs, ss = np.nonzero(hit)
        pairs.extend(zip(xs.tolist(), (ss + k_size + start).tolist()))
    return _relabeled(k_size + s_size, pairs, rng)


def gen_tree(n: int, seed: int) -> Graph:
    if n < 1:
        raise ValueError("n must be at least 1")
    return gen_block(n - 1, 2, seed) if n > 1 else build_graph(1, [])
