"""Signed interaction graphs, elementary cycles and positive feedback vertex sets.

Vertices are component indices ``0..n-1``; ``names`` is carried for display.
An edge is a triple ``(source, target, sign)`` with sign in {-1, +1}, so a pair
of vertices can be joined by at most two parallel edges of opposite sign.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

from .errors import CapExceeded, NetworkError
from .netcore import MAX_CYCLE_VERTICES, MAX_TABLE_VARS, BooleanNetwork, State

Edge = tuple[int, int, int]


@dataclass(frozen=True)
class SignedDigraph:
    names: tuple[str, ...]
    edges: frozenset[Edge]

    def __post_init__(self):
        n = len(self.names)
        for j, i, s in self.edges:
            if s not in (-1, 1):
                raise NetworkError(f"edge sign must be +1 or -1, got {s}")
            if not (0 <= j < n and 0 <= i < n):
                raise NetworkError(f"edge ({j}, {i}) has an endpoint outside 0..{n - 1}")

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def resolve(self, v: int | str) -> int:
        if isinstance(v, str):
            try:
                return self.names.index(v)
            except ValueError:
                raise NetworkError(f"unknown vertex {v!r}") from None
        if not 0 <= v < self.n:
            raise NetworkError(f"unknown vertex {v}")
        return v

    def has_edge(self, j: int, i: int, sign: int | None = None) -> bool:
        if sign is None:
            return (j, i, 1) in self.edges or (j, i, -1) in self.edges
        return (j, i, sign) in self.edges

    def signs(self, j: int, i: int) -> set[int]:
        return {s for s in (1, -1) if (j, i, s) in self.edges}

    def out_edges(self, j: int) -> list[tuple[int, int]]:
        return sorted((i, s) for (a, i, s) in self.edges if a == j)

    def regulators(self, i: int) -> set[int]:
        return {j for (j, t, _) in self.edges if t == i}

    def targets(self, j: int) -> set[int]:
        return {i for (a, i, _) in self.edges if a == j}

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: (e[0], e[1], -e[2]))

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.names),
            "edges": [
                {"source": self.names[j], "target": self.names[i], "sign": s}
                for j, i, s in self.sorted_edges()
            ],
        }


@dataclass(frozen=True)
class SignedCycle:
    """Elementary cycle; ``vertices`` starts at its smallest vertex and repeats it at the end."""

    vertices: tuple[int, ...]
    edge_signs: tuple[int, ...]

    @property
    def sign(self) -> int:
        s = 1
        for e in self.edge_signs:
            s *= e
        return s

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def __len__(self):
        return len(self.edge_signs)


def local_interaction_graph(net: BooleanNetwork, x: State) -> SignedDigraph:
    if x.width != net.n:
        raise NetworkError(f"state width {x.width} does not match network size {net.n}")
    edges = set()
    for j in range(net.n):
        y = x.bits ^ (1 << j)
        dj = 1 if (y >> j) & 1 else -1
        for i in range(net.n):
            t = net.table(i)
            s = (int(t[y]) - int(t[x.bits])) * dj
            if s:
                edges.add((j, i, s))
    return SignedDigraph(net.names, frozenset(edges))


def global_interaction_graph(net: BooleanNetwork, max_vars: int = MAX_TABLE_VARS) -> SignedDigraph:
    """Union of the local graphs, by scanning each regulator's 2^(n-1) contexts."""
    n = net.n
    if n > max_vars:
        raise CapExceeded("interaction graph", n, max_vars)
    codes = np.arange(1 << n)
    edges = set()
    for j in range(n):
        low = codes[(codes >> j) & 1 == 0]
        high = low | (1 << j)
        for i in range(n):
            t = net.table(i)
            d = t[high].astype(np.int8) - t[low].astype(np.int8)
            if np.any(d == 1):
                edges.add((j, i, 1))
            if np.any(d == -1):
                edges.add((j, i, -1))
    return SignedDigraph(net.names, frozenset(edges))


def has_loop(G: SignedDigraph, v: int | str, sign: int | None = None) -> bool:
    v = G.resolve(v)
    return G.has_edge(v, v, sign)


def _check_cycle_cap(G, max_vertices):
    if G.n > max_vertices:
        raise CapExceeded("cycle enumeration", G.n, max_vertices)


def _vertex_cycles(G: SignedDigraph) -> list[tuple[int, ...]]:
    """Elementary cycles of the unsigned graph, each rotated to start at its minimum."""
    D = nx.DiGraph()
    D.add_nodes_from(G.vertices)
    D.add_edges_from((j, i) for j, i, _ in G.edges)
    out = []
    for cyc in nx.simple_cycles(D):
        k = cyc.index(min(cyc))
        cyc = cyc[k:] + cyc[:k]
        out.append(tuple(cyc) + (cyc[0],))
    out.sort(key=lambda c: (len(c), c))
    return out


def elementary_cycles(G: SignedDigraph, max_vertices: int = MAX_CYCLE_VERTICES) -> list[SignedCycle]:
    """Every elementary cycle once, with parallel edges of both signs expanded."""
    _check_cycle_cap(G, max_vertices)
    result = []
    for cyc in _vertex_cycles(G):
        choices = [sorted(G.signs(a, b), reverse=True) for a, b in zip(cyc, cyc[1:])]
        for signs in itertools.product(*choices):
            result.append(SignedCycle(cyc, tuple(signs)))
    return result


def positive_cycle_supports(G: SignedDigraph, max_vertices: int = MAX_CYCLE_VERTICES) -> list[frozenset[int]]:
    """Inclusion-minimal supports of positive elementary cycles.

    A vertex cycle admits a positive sign assignment iff one of its edges comes
    in both signs or the product of its (unique) signs is +1; this avoids
    expanding every sign combination.
    """
    _check_cycle_cap(G, max_vertices)
    supports = set()
    for cyc in _vertex_cycles(G):
        sign = 1
        both = False
        for a, b in zip(cyc, cyc[1:]):
            ss = G.signs(a, b)
            if len(ss) == 2:
                both = True
                break
            sign *= next(iter(ss))
        if both or sign == 1:
            supports.add(frozenset(cyc))
    ordered = sorted(supports, key=len)
    minimal: list[frozenset[int]] = []
    for s in ordered:
        if not any(m <= s for m in minimal):
            minimal.append(s)
    return minimal


def is_pfvs(G: SignedDigraph, I: Iterable[int | str]) -> bool:
    I = {G.resolve(v) for v in I}
    return all(s & I for s in positive_cycle_supports(G))


def all_minimum_pfvs(G: SignedDigraph, max_vertices: int = MAX_CYCLE_VERTICES) -> list[frozenset[int]]:
    """Every minimum-cardinality PFVS, in lexicographic order."""
    supports = positive_cycle_supports(G, max_vertices)
    if not supports:
        return [frozenset()]
    candidates = sorted(set().union(*supports))
    for k in range(1, len(candidates) + 1):
        hits = [frozenset(c) for c in itertools.combinations(candidates, k) if all(s.intersection(c) for s in supports)]
        if hits:
            return hits
    raise AssertionError("the full vertex set always hits every cycle")


def minimum_pfvs(G: SignedDigraph, max_vertices: int = MAX_CYCLE_VERTICES) -> frozenset[int]:
    """Minimum PFVS; ties go to the lexicographically smallest sorted vertex tuple."""
    supports = positive_cycle_supports(G, max_vertices)
    if not supports:
        return frozenset()
    candidates = sorted(set().union(*supports))
    for k in range(1, len(candidates) + 1):
        for c in itertools.combinations(candidates, k):
            if all(s.intersection(c) for s in supports):
                return frozenset(c)
    raise AssertionError("the full vertex set always hits every cycle")


def path_signs(G: SignedDigraph, j: int, allow_loop: bool = True) -> set[tuple[int, int]]:
    """All ``(end, sign)`` such that an elementary path from ``j`` to ``end`` has that sign.

    ``end == j`` stands for a cycle through ``j``; with ``allow_loop=False`` the
    length-1 cycle (the loop at ``j``) is not counted. The search runs over
    (vertex, visited set, sign) triples rather than over individual paths.
    """
    out_edges = [G.out_edges(a) for a in G.vertices]
    found = set()
    start = (j, 1 << j, 1)
    seen = {start}
    stack = [start]
    while stack:
        cur, mask, sign = stack.pop()
        for w, e in out_edges[cur]:
            s = sign * e
            if w == j:
                if allow_loop or cur != j:
                    found.add((j, s))
            elif not (mask >> w) & 1:
                found.add((w, s))
                nxt = (w, mask | (1 << w), s)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return found


def walk_signs(G: SignedDigraph, j: int) -> set[tuple[int, int]]:
    """All ``(end, sign)`` reachable from ``j`` by walks of length >= 1.

    Walks may repeat vertices, so this is plain reachability over (vertex, sign).
    """
    out_edges = [G.out_edges(a) for a in G.vertices]
    found: set[tuple[int, int]] = set()
    stack = [(w, e) for w, e in out_edges[j]]
    found.update(stack)
    while stack:
        cur, sign = stack.pop()
        for w, e in out_edges[cur]:
            nxt = (w, sign * e)
            if nxt not in found:
                found.add(nxt)
                stack.append(nxt)
    return found


def has_signed_path(G: SignedDigraph, j: int | str, i: int | str, sign: int, allow_loop: bool = True) -> bool:
    """Elementary path from ``j`` to ``i`` of the given sign; for ``j == i`` a cycle."""
    j, i = G.resolve(j), G.resolve(i)
    return (i, sign) in path_signs(G, j, allow_loop)


def reachable_vertices(G: SignedDigraph, sources: Iterable[int]) -> set[int]:
    """Vertices reachable from ``sources`` by paths of length >= 1."""
    succ = {a: G.targets(a) for a in G.vertices}
    seen: set[int] = set()
    stack = list(sources)
    while stack:
        a = stack.pop()
        for b in succ[a]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return seen


def igraph_to_dot(G: SignedDigraph) -> str:
    lines = ["digraph interactions {"]
    for name in G.names:
        lines.append(f'  "{name}";')
    for j, i, s in G.sorted_edges():
        if s > 0:
            attrs = 'color=green, style=solid, arrowhead=normal, sign="+1"'
        else:
            attrs = 'color=red, style=dashed, arrowhead=tee, sign="-1"'
        lines.append(f'  "{G.names[j]}" -> "{G.names[i]}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def vertex_names(G: SignedDigraph, vs: Sequence[int] | Iterable[int]) -> list[str]:
    return [G.names[v] for v in sorted(vs)]
