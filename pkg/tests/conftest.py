"""Independent reference implementations used as oracles.

Everything here works state by state in plain Python, sharing nothing with the
vectorized library code beyond the BooleanNetwork container.
"""

from __future__ import annotations

import itertools
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from bnreduce.netcore import BooleanNetwork

ROOT = Path(__file__).resolve().parents[1]
NETWORKS = ROOT / "networks"


def bit(x, i):
    return (x >> i) & 1


def f_at(net, i, x):
    return int(net.functions[i].table[x])


def oracle_successors(net, x):
    return {x ^ (1 << i) for i in range(net.n) if f_at(net, i, x) != bit(x, i)}


def oracle_attractors(net):
    """Minimal nonempty trap sets by exhaustive subset search (n <= 4)."""
    N = 1 << net.n
    assert N <= 16
    succ = np.zeros(N, dtype=np.int64)
    for x in range(N):
        for y in oracle_successors(net, x):
            succ[x] |= 1 << y
    M = 1 << N
    subsets = np.arange(M, dtype=np.int64)
    reach = np.zeros(M, dtype=np.int64)
    for x in range(N):
        has = (subsets >> x) & 1 == 1
        reach[has] |= succ[x]
    trap = (reach & ~subsets) == 0
    trap[0] = False
    # contains[S]: some nonempty trap T with T subset of S
    contains = trap.copy()
    for b in range(N):
        with_b = subsets[(subsets >> b) & 1 == 1]
        contains[with_b] |= contains[with_b ^ (1 << b)]
    proper = np.zeros(M, dtype=bool)
    for b in range(N):
        with_b = subsets[(subsets >> b) & 1 == 1]
        proper[with_b] |= contains[with_b ^ (1 << b)]
    minimal = np.nonzero(trap & ~proper)[0]
    out = []
    for S in minimal:
        out.append(tuple(x for x in range(N) if (int(S) >> x) & 1))
    return sorted(out)


def oracle_edges(net):
    """Global interaction graph as the union of local graphs, by definition."""
    edges = set()
    for x in range(1 << net.n):
        for j in range(net.n):
            y = x ^ (1 << j)
            for i in range(net.n):
                s = (f_at(net, i, y) - f_at(net, i, x)) * (bit(y, j) - bit(x, j))
                if s:
                    edges.add((j, i, s))
    return edges


def oracle_cycles(edges, n):
    """Elementary signed cycles as (rotated vertex tuple, sign tuple), by permutations."""
    out = set()
    for k in range(1, n + 1):
        for verts in itertools.permutations(range(n), k):
            if verts[0] != min(verts):
                continue
            closed = verts + (verts[0],)
            choices = []
            for a, b in zip(closed, closed[1:]):
                choices.append([s for s in (1, -1) if (a, b, s) in edges])
            for signs in itertools.product(*choices):
                out.add((closed, signs))
    return out


def oracle_min_pfvs_size(edges, n):
    positive = [set(c) for c, s in oracle_cycles(edges, n) if np.prod(s) > 0]
    for k in range(n + 1):
        for I in itertools.combinations(range(n), k):
            if all(c & set(I) for c in positive):
                return k
    raise AssertionError


def oracle_reduce(net, v):
    """Reduced tables straight from the representative-state definition."""
    n = net.n
    keep = [i for i in range(n) if i != v]
    tables = []
    for r, i in enumerate(keep):
        t = []
        for y in range(1 << (n - 1)):
            x = 0
            for pos, k in enumerate(keep):
                x |= bit(y, pos) << k
            vals = []
            for a in (0, 1):
                xa = x | (a << v)
                sa = x | (f_at(net, v, xa) << v)
                vals.append(f_at(net, i, sa))
            t.append(min(vals) if bit(y, r) else max(vals))
        tables.append(t)
    return BooleanNetwork.from_tables([net.names[i] for i in keep], [np.array(t, dtype=bool) for t in tables])


def oracle_reach(net, start):
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in oracle_successors(net, x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


@st.composite
def networks(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    tables = [
        np.array(draw(st.lists(st.booleans(), min_size=1 << n, max_size=1 << n)), dtype=bool)
        for _ in range(n)
    ]
    return BooleanNetwork.from_tables([f"x{k + 1}" for k in range(n)], tables)


@st.composite
def networks_with_eliminable(draw, min_n=2, max_n=4):
    """A network together with a component that carries no positive loop."""
    net = draw(networks(min_n, max_n))
    v = draw(st.integers(0, net.n - 1))
    t = net.table(v).copy()
    for x in range(1 << net.n):
        if bit(x, v) and not t[x ^ (1 << v)]:
            t[x] = False
    tables = [net.table(i) for i in range(net.n)]
    tables[v] = t
    return BooleanNetwork.from_tables(net.names, tables), v


@pytest.fixture
def load():
    from bnreduce.netcore import parse_network

    def _load(name):
        return parse_network((NETWORKS / f"{name}.bnet").read_text())

    return _load
