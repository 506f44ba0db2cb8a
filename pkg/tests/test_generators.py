import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgepack.generators import gen_block, gen_proper_interval, gen_split, gen_tree
from edgepack.graph import is_connected
from edgepack.io import serialize_graph
from edgepack.recognition import build_cut_tree, compute_bco, split_partition


def test_fixed_examples():
    g = gen_split(2, 3, 1.0, seed=0)
    assert g.n == 5 and g.m == 7
    assert gen_tree(1, 0).m == 0
    assert gen_tree(9, 3).m == 8
    assert gen_proper_interval(6, 1.0, 7).m == 15
    assert gen_proper_interval(6, 0.0, 7).m >= 5


@pytest.mark.parametrize("bad", [
    lambda: gen_proper_interval(-1, 0.5, 0),
    lambda: gen_proper_interval(4, 1.5, 0),
    lambda: gen_block(0, 3, 0),
    lambda: gen_block(2, 1, 0),
    lambda: gen_split(2, 2, -0.1, 0),
    lambda: gen_tree(0, 0),
])
def test_bad_parameters(bad):
    with pytest.raises(ValueError):
        bad()


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 40), st.floats(0, 1), st.integers(0, 2**32))
def test_proper_interval(n, density, seed):
    g = gen_proper_interval(n, density, seed)
    assert g.n == n and compute_bco(g) is not None
    assert serialize_graph(g) == serialize_graph(gen_proper_interval(n, density, seed))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.integers(2, 5), st.integers(0, 2**32))
def test_block(n_blocks, size, seed):
    g = gen_block(n_blocks, size, seed)
    assert is_connected(g) and build_cut_tree(g) is not None
    assert serialize_graph(g) == serialize_graph(gen_block(n_blocks, size, seed))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 8), st.integers(0, 10), st.floats(0, 1), st.integers(0, 2**32))
def test_split(k, s, p, seed):
    g = gen_split(k, s, p, seed)
    assert g.n == k + s and split_partition(g) is not None
    assert serialize_graph(g) == serialize_graph(gen_split(k, s, p, seed))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 30), st.integers(0, 2**32))
def test_tree(n, seed):
    g = gen_tree(n, seed)
    assert g.m == n - 1 and is_connected(g)
