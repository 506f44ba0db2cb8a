import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgepack.errors import InputError
from edgepack.generators import gen_proper_interval
from edgepack.graph import (
    build_graph,
    complete_graph,
    disjoint_union,
    induced_subgraph,
    is_eop_set,
    path_graph,
    relabel,
)
from edgepack.oracle import SearchBudget, brute_force_eop
from edgepack.pig import ONE_EDGE, SKIP, TWO_EDGES, solve_pig, suffix_table, suffix_value
from edgepack.recognition import compute_bco, make_ordering

BIG = SearchBudget(max_edges=80)


def test_p4_two_edge_branch():
    o = make_ordering(path_graph(4), [0, 1, 2, 3])
    table = suffix_table(o)
    assert table.choice[0] == (TWO_EDGES, 1, 2)
    assert (table.rho_pp[0], table.rho_p[0], table.rho_2[0]) == (2, 1, 2)
    sol = solve_pig(path_graph(4), o)
    assert sol.value == 2
    assert sol.witness == ((0, 1), (1, 2))


def test_suffix_values_p4():
    table = suffix_table(make_ordering(path_graph(4), [0, 1, 2, 3]))
    assert suffix_value(table, 4) == 0
    assert suffix_value(table, 0) == 2
    assert table.rho == [2, 2, 1, 0, 0]
    with pytest.raises(InputError):
        suffix_value(table, 5)


def test_k4_branches():
    table = suffix_table(make_ordering(complete_graph(4), [0, 1, 2, 3]))
    assert suffix_value(table, 0) == 1
    assert table.rho_p[0] == 1
    assert table.rho_pp[0] is None
    assert table.rho_2[0] == 1


def test_triangle_one_edge():
    o = make_ordering(complete_graph(3), [0, 1, 2])
    assert suffix_table(o).choice[0] == (ONE_EDGE, 1, -1)
    assert solve_pig(complete_graph(3), o).witness == ((0, 1),)


def test_trivial_graphs():
    sol = solve_pig(build_graph(5, []))
    assert sol.value == 0 and sol.witness == ()
    assert suffix_table(make_ordering(build_graph(2, []), [0, 1])).choice == [(SKIP, -1, -1)] * 2
    two = build_graph(4, [(0, 1), (2, 3)])
    assert solve_pig(two).witness == ((0, 1), (2, 3))
    assert solve_pig(build_graph(0, [])).value == 0


def test_invalid_ordering():
    with pytest.raises(InputError):
        solve_pig(path_graph(4), [0, 2, 1, 3])
    with pytest.raises(InputError):
        solve_pig(build_graph(4, [(0, 1), (0, 2), (0, 3)]))


pig_params = st.tuples(st.integers(1, 12), st.floats(0, 1), st.integers(0, 2**32))


@settings(max_examples=200, deadline=None)
@given(pig_params)
def test_matches_oracle(params):
    g = gen_proper_interval(*params)
    sol = solve_pig(g)
    assert sol.value == brute_force_eop(g, BIG).value
    assert is_eop_set(g, sol.witness)[0]


@settings(max_examples=100, deadline=None)
@given(pig_params)
def test_suffixes_match_oracle(params):
    g = gen_proper_interval(*params)
    o = compute_bco(g)
    table = suffix_table(o)
    for t in range(g.n):
        assert table.rho[t] >= table.rho[t + 1]
        assert table.rho[t] >= table.rho[o.last_neighbor[t] + 1]
        sub, _ = induced_subgraph(g, o.order[t:])
        assert table.rho[t] == brute_force_eop(sub, BIG).value


@settings(max_examples=100, deadline=None)
@given(pig_params, st.integers(0, 2**32))
def test_relabel_invariance(params, seed):
    g = gen_proper_interval(*params)
    perm = np.random.default_rng(seed).permutation(g.n).tolist()
    assert solve_pig(relabel(g, perm)).value == solve_pig(g).value


@settings(max_examples=100, deadline=None)
@given(pig_params, pig_params)
def test_union_additive(a, b):
    ga, gb = gen_proper_interval(*a), gen_proper_interval(*b)
    assert solve_pig(disjoint_union(ga, gb)).value == solve_pig(ga).value + solve_pig(gb).value
