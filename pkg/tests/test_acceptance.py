"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Criteria 1-4 share one crosscheck run per corpus (cached at module scope) so
criteria 6 and 7 can inspect the very instances 1-4 produced.
"""

import io
import time

import pytest

from edgepack.block import solve_block
from edgepack.cli import run
from edgepack.crosscheck import run_crosscheck
from edgepack.generators import gen_proper_interval, gen_split
from edgepack.graph import complete_graph, eop_upper_bound, is_eop_set, is_induced_star_forest, path_graph, star_graph
from edgepack.oracle import SearchBudget, brute_force_eop
from edgepack.pig import solve_pig
from edgepack.recognition import BLOCK, PROPER_INTERVAL, SPLIT, classify, compute_bco, split_partition
from edgepack.split import solve_split

from conftest import report

CORPORA = {
    # criterion: (class, count, time limit in seconds)
    1: ("pig", 300, 60.0),
    2: ("block", 300, 60.0),
    3: ("split", 300, 30.0),
    4: ("tree", 200, None),
}
SEED = 2024
_runs: dict = {}
_closed_form: list = []


def corpus(criterion):
    if criterion not in _runs:
        cls, count, _ = CORPORA[criterion]
        start = time.perf_counter()
        records = run_crosscheck(cls, count, SEED)
        _runs[criterion] = (records, time.perf_counter() - start)
    return _runs[criterion]


@pytest.mark.parametrize("criterion", [1, 2, 3, 4])
def test_oracle_equivalence(criterion):
    cls, count, limit = CORPORA[criterion]
    records, elapsed = corpus(criterion)
    agree = sum(r.agree for r in records)
    ok = agree == count and (limit is None or elapsed < limit)
    limit_text = f", limit {limit:.0f} s" if limit else ""
    report(f"criterion {criterion} oracle equivalence ({cls})", ok,
           f"{agree}/{count} agree in {elapsed:.1f} s{limit_text}")
    assert ok


def _check_closed(g, solver, expected):
    sol = solver(g)
    _closed_form.append((g, sol))
    return sol.value == expected, sol.value


def _closed_forms(family, cases):
    bad = []
    for label, g, expected, solvers in cases:
        for sname, solver in solvers:
            ok, got = _check_closed(g, solver, expected)
            if not ok:
                bad.append(f"{label} via {sname}: got {got}, expected {expected}")
    report(f"criterion 5 closed forms ({family})", not bad,
           f"{len(cases)} graphs exact" if not bad else "; ".join(bad))
    assert not bad, bad


def _oracle(g):
    return brute_force_eop(g, SearchBudget(max_edges=80))


def test_closed_form_complete():
    solvers = [("solve_pig", solve_pig), ("solve_block", solve_block),
               ("solve_split", solve_split), ("oracle", _oracle)]
    _closed_forms("K_n -> 1", [(f"K{n}", complete_graph(n), 1, solvers) for n in range(2, 9)])


def test_closed_form_star():
    solvers = [("solve_block", solve_block), ("solve_split", solve_split)]
    _closed_forms("K1,t -> t", [(f"K1,{t}", star_graph(t), t, solvers) for t in range(1, 9)])


def test_closed_form_path():
    solvers = [("solve_pig", solve_pig), ("solve_block", solve_block)]
    _closed_forms("P_n -> 2", [(f"P{n}", path_graph(n), 2, solvers) for n in range(4, 11)])


def test_witness_soundness():
    checked, bad = 0, []
    for c in CORPORA:
        records, _ = corpus(c)
        for r in records:
            checked += 1
            if not (r.witness_ok and r.stars_ok):
                bad.append(f"{r.cls}#{r.index}")
    for g, sol in _closed_form:
        checked += 1
        if not (is_eop_set(g, sol.witness)[0] and len(sol.witness) == sol.value
                and is_induced_star_forest(g, sol.witness)):
            bad.append(repr(g))
    report("criterion 6 witness soundness", not bad, f"{checked - len(bad)}/{checked} sound")
    assert not bad, bad[:10]


def test_bound():
    checked, bad = 0, []
    for c in CORPORA:
        records, _ = corpus(c)
        for r in records:
            checked += 1
            if not r.bound_ok:
                bad.append(f"{r.cls}#{r.index}")
    report("criterion 7 upper bound m // min degree", not bad,
           f"{len(bad)} violations over {checked} instances")
    assert not bad, bad[:10]


def agreement_corpus():
    """100 distinct graphs, each in at least two solver classes.

    A complete split graph (every K-S pair adjacent) is in two classes only
    when |S| <= 2 or |K| = 1, so those two families are used.
    """
    out = [complete_graph(n) for n in range(2, 22)]
    out += [path_graph(n) for n in range(4, 44)]
    out += [gen_split(k, 2, 1.0, seed=k) for k in range(2, 22)]
    out += [gen_split(1, s, 1.0, seed=s) for s in range(3, 23)]
    return out


def test_cross_solver_agreement():
    graphs = agreement_corpus()
    solvers = {PROPER_INTERVAL: solve_pig, BLOCK: solve_block, SPLIT: solve_split}
    bad = []
    for i, g in enumerate(graphs):
        tags = [t for t in classify(g) if t in solvers]
        values = {t: solvers[t](g).value for t in tags}
        if g.m <= 24:
            values["oracle"] = brute_force_eop(g).value
        if len(tags) < 2 or len(set(values.values())) != 1:
            bad.append((i, values))
    ok = len(graphs) == 100 and not bad
    report("criterion 8 cross-solver agreement", ok, f"{len(graphs) - len(bad)}/{len(graphs)} graphs agree")
    assert ok, bad


def _crosscheck_json(cls, jobs):
    out = io.StringIO()
    code = run(["crosscheck", "--class", cls, "--count", "60", "--seed", "99", "--json",
                "--jobs", str(jobs)], io.StringIO(), out, io.StringIO())
    return code, out.getvalue()


def test_determinism():
    bad = []
    for cls in ("pig", "block", "split", "tree"):
        first = _crosscheck_json(cls, 1)
        if first != _crosscheck_json(cls, 1) or first != _crosscheck_json(cls, 2) or first[0] != 0:
            bad.append(cls)
    report("criterion 9 determinism of crosscheck JSON", not bad,
           "byte-identical across repeats and worker counts" if not bad else f"differs for {bad}")
    assert not bad


@pytest.mark.slow
def test_scale():
    g = gen_proper_interval(50_000, 0.5, seed=7)
    start = time.perf_counter()
    sol = solve_pig(g, compute_bco(g))
    t_pig = time.perf_counter() - start
    ok_pig = t_pig < 10.0 and sol.value <= eop_upper_bound(g)

    h = gen_split(1_000, 100_000, 0.01, seed=7)
    start = time.perf_counter()
    sol_s = solve_split(h, split_partition(h))
    t_split = time.perf_counter() - start
    bound = eop_upper_bound(h)
    ok_split = t_split < 10.0 and (bound is None or sol_s.value <= bound)

    report("criterion 10 scale smoke", ok_pig and ok_split,
           f"pig n=50000 m={g.m} in {t_pig:.1f} s; split |K|=1000 |S|=100000 m={h.m} in {t_split:.1f} s")
    assert ok_pig and ok_split
