import pytest
from hypothesis import given, settings

from bnreduce.dynamics import (
    AttractorCensus,
    async_successors,
    attractor_report,
    attractors,
    build_stg,
    census,
    fixed_points,
    is_trap_set,
    reachable,
    stg_to_dot,
)
from bnreduce.errors import CapExceeded
from bnreduce.netcore import BooleanNetwork, State, parse_network
from bnreduce.reduction import eliminate
from bnreduce.verify import chain_counterexample

from conftest import networks, oracle_attractors, oracle_reach, oracle_successors


def states(*strings):
    return frozenset(State.from_string(s) for s in strings)


def test_successors_mediator(load):
    net = load("mediator")
    assert async_successors(net, State.from_string("000")) == states("001", "010")


def test_successors_fixed_point_empty(load):
    net = load("two_cycle")
    assert async_successors(net, State.from_string("11")) == frozenset()


def test_successors_negloop():
    net = parse_network("x1, !x2\nx2, !x2\n")
    assert async_successors(net, State.from_string("00")) == states("10", "01")


def test_reduced_mediator_stg(load):
    stg = build_stg(load("mediator_reduced"))
    edges = {(str(State(2, a)), str(State(2, b))) for a, b in stg.edges()}
    assert edges == {("00", "10"), ("10", "00"), ("01", "11"), ("11", "01")}


def test_constant_zero_descends(load):
    stg = build_stg(load("constant_zero"))
    assert stg.successors(0) == []
    for x in range(1, 4):
        assert set(stg.successors(x)) == {x ^ (1 << i) for i in range(2) if (x >> i) & 1}


def test_forward_stg_edges(load):
    net = load("forward")
    stg = build_stg(net)
    assert stg.n_states == 8
    assert {(a, b) for a, b in stg.edges()} == {(x, y) for x in range(8) for y in oracle_successors(net, x)}
    figure = {
        ("011", "001"), ("011", "010"), ("011", "111"), ("111", "011"),
        ("001", "101"), ("101", "001"), ("101", "111"),
        ("010", "000"), ("010", "110"), ("110", "010"),
        ("000", "100"), ("100", "000"), ("100", "101"), ("100", "110"),
    }
    assert {(str(State(3, a)), str(State(3, b))) for a, b in stg.edges()} == figure
    assert stg.n_edges() == 14


def test_attractor_examples(load):
    red = attractors(load("mediator_reduced"))
    assert [a.strings() for a in red] == [["00", "10"], ["01", "11"]]
    assert all(a.kind == "cyclic" for a in red)
    full = attractors(load("forward"))
    assert len(full) == 1 and len(full[0]) == 8
    zero = attractors(load("constant_zero"))
    assert [a.strings() for a in zero] == [["00"]]


def test_fixed_points(load):
    assert fixed_points(load("strict_fp")) == []
    assert len(fixed_points(load("identity"))) == 4
    assert [str(x) for x in fixed_points(chain_counterexample(1))] == ["111111"]


def test_trap_sets(load):
    net = load("strict_fp")
    assert is_trap_set(net, states("10", "11"))
    assert not is_trap_set(net, states("11"))
    assert is_trap_set(net, range(4))
    for a in attractors(load("forward")):
        assert is_trap_set(load("forward"), a.states)


def test_reachable_chain():
    net = chain_counterexample(1)
    one = State(6, 63)
    assert reachable(net, one) == frozenset({one})
    assert one in reachable(net, State(6, 0))
    red = eliminate(net, "v1").reduced
    assert State(5, 31) not in reachable(red, State(5, 0))


def test_census_examples(load):
    assert census(load("strict_fp")) == AttractorCensus(0, 1, (0, 1))
    # a single four-state cycle: cyclic, but not of the two-state kind
    assert census(load("rotation")) == AttractorCensus(0, 1, (0, 0))
    assert census(load("identity")) == AttractorCensus(4, 0, (0, 0))


def test_report_schema(load):
    net = load("mediator_reduced")
    rep = attractor_report(net, attractors(net))
    assert rep == {
        "attractors": [{"kind": "cyclic", "states": ["00", "10"]}, {"kind": "cyclic", "states": ["01", "11"]}],
        "S": 0,
        "A": 2,
        "A_i": {"x1": 2, "x3": 0},
    }


def test_stg_dot(load):
    dot = stg_to_dot(build_stg(load("two_cycle")))
    assert dot.count("[label=") == 4
    assert dot.count("->") == 4


def test_stg_cap():
    net = BooleanNetwork.from_map([f"x{k}" for k in range(5)], lambda x: x)
    with pytest.raises(CapExceeded):
        build_stg(net, max_vars=4)
    with pytest.raises(CapExceeded):
        attractors(net, max_vars=4)


@settings(max_examples=150, deadline=None)
@given(networks(max_n=4))
def test_attractors_match_minimal_trap_sets(net):
    assert [a.codes for a in attractors(net)] == oracle_attractors(net)


@settings(max_examples=100, deadline=None)
@given(networks(max_n=5))
def test_attractor_invariants(net):
    attrs = attractors(net)
    c = census(net)
    assert c.S + c.A == len(attrs)
    seen = set()
    for a in attrs:
        assert is_trap_set(net, a.codes)
        assert not seen & set(a.codes)
        seen |= set(a.codes)
        for x in a.codes:
            assert oracle_reach(net, x) == set(a.codes)
    # every state reaches some attractor
    for x in range(1 << net.n):
        assert oracle_reach(net, x) & seen
    assert c.S == sum(1 for a in attrs if len(a) == 1)
    assert c.S == len(fixed_points(net))


@settings(max_examples=100, deadline=None)
@given(networks(max_n=5))
def test_stg_matches_definition(net):
    stg = build_stg(net)
    for x in range(1 << net.n):
        assert set(stg.successors(x)) == oracle_successors(net, x)
