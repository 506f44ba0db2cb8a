"""Seeded solver-versus-oracle comparisons over generated corpora."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .block import solve_block
from .errors import InternalError
from .generators import gen_block, gen_proper_interval, gen_split, gen_tree, rng_for
from .graph import EOPSolution, Graph, eop_upper_bound, is_eop_set, is_induced_star_forest
from .oracle import SearchBudget, brute_force_eop
from .pig import solve_pig
from .recognition import build_cut_tree, compute_bco, split_partition
from .split import solve_split

CLASSES = ("pig", "block", "split", "tree")
DEFAULT_MAX_N = {"pig": 12, "block": 14, "split": 14, "tree": 14}
# large enough for every corpus instance: K_12 has 66 edges
ORACLE_BUDGET = SearchBudget(max_edges=80)


def instance_seed(seed: int, index: int) -> int:
    return int(np.random.SeedSequence([seed, index]).generate_state(1, np.uint64)[0])


def make_instance(cls: str, index: int, seed: int, max_n: int | None = None) -> tuple[Graph, dict]:
    """The ``index``-th graph of a corpus, with the generator parameters used."""
    max_n = max_n or DEFAULT_MAX_N[cls]
    s = instance_seed(seed, index)
    rng = rng_for(s)
    if cls == "pig":
        params = {"n": int(rng.integers(1, max_n + 1)), "density": round(float(rng.random()), 6)}
        return gen_proper_interval(params["n"], params["density"], s), params
    if cls == "block":
        while True:
            params = {"n_blocks": int(rng.integers(1, 7)), "max_block_size": int(rng.integers(2, 5))}
            g = gen_block(params["n_blocks"], params["max_block_size"], s)
            if g.n <= max_n:
                return g, params
            s = int(rng.integers(2**63))
    if cls == "split":
        k = int(rng.integers(0, min(6, max_n) + 1))
        params = {
            "k_size": k,
            "s_size": int(rng.integers(0, min(8, max_n - k) + 1)),
            "p": round(float(rng.random()), 6),
        }
        return gen_split(params["k_size"], params["s_size"], params["p"], s), params
    if cls == "tree":
        params = {"n": int(rng.integers(1, max_n + 1))}
        return gen_tree(params["n"], s), params
    raise ValueError(f"unknown corpus class {cls!r}")


def class_solver(cls: str, g: Graph) -> EOPSolution:
    if cls == "pig":
        o = compute_bco(g)
        if o is None:
            raise InternalError("generated proper interval graph failed recognition")
        return solve_pig(g, o)
    if cls in ("block", "tree"):
        t = build_cut_tree(g)
        if t is None:
            raise InternalError("generated block graph failed recognition")
        return solve_block(g, t)
    if cls == "split":
        p = split_partition(g)
        if p is None:
            raise InternalError("generated split graph failed recognition")
        return solve_split(g, p)
    raise ValueError(f"unknown corpus class {cls!r}")


@dataclass(frozen=True)
class CheckRecord:
    index: int
    cls: str
    params: dict
    n: int
    m: int
    value: int
    oracle: int
    witness: tuple[tuple[int, int], ...]
    witness_ok: bool
    stars_ok: bool
    bound_ok: bool

    @property
    def agree(self) -> bool:
        return self.value == self.oracle

    @property
    def ok(self) -> bool:
        return self.agree and self.witness_ok and self.stars_ok and self.bound_ok

    def as_json(self) -> dict:
        return {
            "index": self.index,
            "class": self.cls,
            "params": self.params,
            "n": self.n,
            "m": self.m,
            "value": self.value,
            "oracle": self.oracle,
            "witness": [list(e) for e in self.witness],
            "agree": self.agree,
        }


def check_instance(cls: str, index: int, seed: int, max_n: int | None = None) -> CheckRecord:
    g, params = make_instance(cls, index, seed, max_n)
    sol = class_solver(cls, g)
    ref = brute_force_eop(g, ORACLE_BUDGET)
    bound = eop_upper_bound(g)
    return CheckRecord(
        index=index,
        cls=cls,
        params=params,
        n=g.n,
        m=g.m,
        value=sol.value,
        oracle=ref.value,
        witness=sol.witness,
        witness_ok=is_eop_set(g, sol.witness)[0] and len(sol.witness) == sol.value,
        stars_ok=is_induced_star_forest(g, sol.witness),
        bound_ok=bound is None or sol.value <= bound,
    )


def _check_star(args):
    return check_instance(*args)


def run_crosscheck(cls: str, count: int, seed: int, max_n: int | None = None, jobs: int = 1) -> list[CheckRecord]:
    """Check ``count`` instances; results are always in instance order."""
    tasks = [(cls, i, seed, max_n) for i in range(count)]
    if jobs <= 1:
        return [check_instance(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_check_star, tasks, chunksize=8))
