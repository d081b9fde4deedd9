import pytest
from hypothesis import given, settings

from bnreduce.errors import CapExceeded, NetworkError
from bnreduce.igraph import (
    SignedDigraph,
    all_minimum_pfvs,
    elementary_cycles,
    global_interaction_graph,
    has_loop,
    has_signed_path,
    igraph_to_dot,
    is_pfvs,
    local_interaction_graph,
    minimum_pfvs,
    positive_cycle_supports,
)
from bnreduce.netcore import State, parse_network

from conftest import networks, oracle_cycles, oracle_edges, oracle_min_pfvs_size


def graph(n, edges):
    return SignedDigraph(tuple(f"x{k + 1}" for k in range(n)), frozenset(edges))


def test_local_graph_examples(load):
    zero = local_interaction_graph(load("constant_zero"), State.from_string("01"))
    assert zero.edges == frozenset()
    neg = parse_network("x1, !x2\nx2, !x2\n")
    assert local_interaction_graph(neg, State.from_string("00")).edges == {(1, 0, -1), (1, 1, -1)}
    ident = load("identity")
    for code in range(4):
        assert local_interaction_graph(ident, State(2, code)).edges == {(0, 0, 1), (1, 1, 1)}


def test_global_graph_forward(load):
    G = global_interaction_graph(load("forward"))
    assert G.sorted_edges() == [(0, 0, -1), (0, 1, 1), (0, 2, 1), (1, 2, -1), (2, 2, 1)]


def test_global_graph_dual_sign():
    G = global_interaction_graph(parse_network("a, a\nb, (a & !b) | (!a & b)\n"))
    assert G.signs(0, 1) == {1, -1}


def test_loops(load):
    G = global_interaction_graph(load("forward"))
    assert has_loop(G, "u", -1) and not has_loop(G, "u", 1)
    assert has_loop(G, "w")
    assert not has_loop(G, "v")


def test_cycles_simple():
    G = graph(2, {(0, 1, 1), (1, 0, -1)})
    cyc = elementary_cycles(G)
    assert len(cyc) == 1
    assert cyc[0].vertices == (0, 1, 0)
    assert cyc[0].sign == -1


def test_cycles_expand_parallel_signs():
    G = graph(2, {(0, 1, 1), (0, 1, -1), (1, 0, 1)})
    signs = sorted(c.sign for c in elementary_cycles(G))
    assert signs == [-1, 1]


def test_cycle_cap():
    G = graph(21, set())
    with pytest.raises(CapExceeded):
        elementary_cycles(G)


def test_pfvs_examples(load):
    assert minimum_pfvs(global_interaction_graph(load("forward"))) == {2}
    assert minimum_pfvs(global_interaction_graph(load("two_cycle"))) == {0}
    assert all_minimum_pfvs(global_interaction_graph(load("two_cycle"))) == [{0}, {1}]
    assert minimum_pfvs(global_interaction_graph(load("rotation"))) == frozenset()
    assert minimum_pfvs(global_interaction_graph(load("identity"))) == {0, 1}


def test_is_pfvs(load):
    G = global_interaction_graph(load("identity"))
    assert is_pfvs(G, ["x1", "x2"])
    assert not is_pfvs(G, ["x1"])


def test_signed_paths():
    G = graph(3, {(0, 1, 1), (1, 2, -1), (2, 0, 1), (0, 0, -1)})
    assert has_signed_path(G, 0, 2, -1)
    assert not has_signed_path(G, 0, 2, 1)
    assert has_signed_path(G, 0, 0, -1)
    assert has_signed_path(G, 0, 0, -1, allow_loop=False)
    G2 = graph(1, {(0, 0, -1)})
    assert has_signed_path(G2, 0, 0, -1)
    assert not has_signed_path(G2, 0, 0, -1, allow_loop=False)


def test_signed_path_is_elementary():
    # a path 0 -> 1 -> 2 -> 1 is not elementary, so no negative path 0 ~> 1 exists
    G = graph(3, {(0, 1, 1), (1, 2, 1), (2, 1, -1)})
    assert has_signed_path(G, 0, 1, 1)
    assert not has_signed_path(G, 0, 1, -1)


def test_graph_validation():
    with pytest.raises(NetworkError):
        graph(2, {(0, 1, 0)})
    with pytest.raises(NetworkError):
        graph(2, {(0, 2, 1)})


def test_dot_export(load):
    dot = igraph_to_dot(global_interaction_graph(load("forward")))
    assert dot.count('sign="+1"') == 3
    assert dot.count('sign="-1"') == 2


@settings(max_examples=100, deadline=None)
@given(networks(max_n=4))
def test_global_graph_is_union_of_local_graphs(net):
    G = global_interaction_graph(net)
    assert set(G.edges) == oracle_edges(net)
    union = set()
    for code in range(1 << net.n):
        union |= local_interaction_graph(net, State(net.n, code)).edges
    assert union == set(G.edges)


@settings(max_examples=100, deadline=None)
@given(networks(max_n=4))
def test_cycles_and_pfvs_match_brute_force(net):
    G = global_interaction_graph(net)
    got = {(c.vertices, c.edge_signs) for c in elementary_cycles(G)}
    assert got == oracle_cycles(set(G.edges), net.n)
    I = minimum_pfvs(G)
    assert len(I) == oracle_min_pfvs_size(set(G.edges), net.n)
    assert is_pfvs(G, I)
    positive = [c.support for c in elementary_cycles(G) if c.sign > 0]
    for s in positive_cycle_supports(G):
        assert s in positive
