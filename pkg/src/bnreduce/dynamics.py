"""Asynchronous dynamics: state transition graph, attractors, census counters."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import CapExceeded, NetworkError
from .netcore import MAX_STG_VARS, BooleanNetwork, State, code_to_string


@dataclass(frozen=True, eq=False)
class TransitionGraph:
    """AD(f) stored implicitly: ``changes[x]`` has bit i set iff f_i(x) != x_i.

    The successors of x are then ``x ^ (1 << i)`` for each set bit i.
    """

    width: int
    changes: np.ndarray

    @property
    def n_states(self) -> int:
        return 1 << self.width

    def successors(self, x: int) -> list[int]:
        mask = int(self.changes[x])
        out = []
        while mask:
            low = mask & -mask
            out.append(x ^ low)
            mask ^= low
        return out

    def has_transition(self, x: int, i: int) -> bool:
        return bool((int(self.changes[x]) >> i) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for x in range(self.n_states):
            for y in self.successors(x):
                yield x, y

    def n_edges(self) -> int:
        return int(sum(bin(int(c)).count("1") for c in self.changes))


@dataclass(frozen=True)
class Attractor:
    width: int
    codes: tuple[int, ...]

    @property
    def kind(self) -> str:
        return "fixed" if len(self.codes) == 1 else "cyclic"

    @property
    def is_fixed_point(self) -> bool:
        return len(self.codes) == 1

    @property
    def states(self) -> tuple[State, ...]:
        return tuple(State(self.width, c) for c in self.codes)

    def __len__(self):
        return len(self.codes)

    def __contains__(self, x):
        code = x.bits if isinstance(x, State) else x
        return code in self.codes

    def strings(self) -> list[str]:
        return [code_to_string(c, self.width) for c in self.codes]

    def flip_component(self) -> int | None:
        """The component i if this attractor is {x, x̄^i}, else None."""
        if len(self.codes) != 2:
            return None
        d = self.codes[0] ^ self.codes[1]
        if d & (d - 1):
            return None
        return d.bit_length() - 1


@dataclass(frozen=True)
class AttractorCensus:
    S: int
    A: int
    A_i: tuple[int, ...]

    def total(self) -> int:
        return self.S + self.A


def _check_cap(n, max_vars):
    if n > max_vars:
        raise CapExceeded("state transition graph", n, max_vars)


def _check_width(net, x):
    if x.width != net.n:
        raise NetworkError(f"state width {x.width} does not match network size {net.n}")


def async_successors(net: BooleanNetwork, x: State) -> frozenset[State]:
    _check_width(net, x)
    mask = int(net.image[x.bits]) ^ x.bits
    return frozenset(State(net.n, x.bits ^ (1 << i)) for i in range(net.n) if (mask >> i) & 1)


def build_stg(net: BooleanNetwork, max_vars: int = MAX_STG_VARS) -> TransitionGraph:
    _check_cap(net.n, max_vars)
    changes = net.image ^ np.arange(1 << net.n, dtype=np.int64)
    changes.setflags(write=False)
    return TransitionGraph(net.n, changes)


def terminal_sccs(stg: TransitionGraph) -> list[tuple[int, ...]]:
    """Terminal strongly connected components, iterative Tarjan.

    Components are popped in reverse topological order, so every successor of a
    popped component already carries a component id; terminality is decided at
    pop time.
    """
    N = stg.n_states
    changes = stg.changes.tolist()
    index = [-1] * N
    low = [0] * N
    on_stack = [False] * N
    comp = [-1] * N
    stack: list[int] = []
    counter = 0
    ncomp = 0
    found = []

    def succ(x):
        mask = changes[x]
        out = []
        while mask:
            b = mask & -mask
            out.append(x ^ b)
            mask ^= b
        return out

    for root in range(N):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, succ(root), 0)]
        while work:
            v, nbrs, pos = work[-1]
            if pos < len(nbrs):
                w = nbrs[pos]
                work[-1] = (v, nbrs, pos + 1)
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, succ(w), 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                members = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    members.append(w)
                    if w == v:
                        break
                terminal = all(comp[y] == ncomp for w in members for y in succ(w))
                if terminal:
                    found.append(tuple(sorted(members)))
                ncomp += 1
    found.sort()
    return found


def attractors(net: BooleanNetwork, max_vars: int = MAX_STG_VARS, stg: TransitionGraph | None = None) -> list[Attractor]:
    """All attractors of AD(f), ordered by smallest state code."""
    if stg is None:
        stg = build_stg(net, max_vars)
    return [Attractor(stg.width, c) for c in terminal_sccs(stg)]


def fixed_points(net: BooleanNetwork) -> list[State]:
    codes = np.nonzero(net.image == np.arange(1 << net.n))[0]
    return [State(net.n, int(c)) for c in codes]


def _codes(states, width):
    out = set()
    for s in states:
        if isinstance(s, State):
            if s.width != width:
                raise NetworkError(f"state width {s.width} does not match network size {width}")
            out.add(s.bits)
        else:
            out.add(int(s))
    return out


def is_trap_set(net: BooleanNetwork, states: Iterable) -> bool:
    T = _codes(states, net.n)
    image = net.image
    for x in T:
        mask = int(image[x]) ^ x
        while mask:
            b = mask & -mask
            if x ^ b not in T:
                return False
            mask ^= b
    return True


def reach_codes(stg: TransitionGraph, start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in stg.successors(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def reachable(net: BooleanNetwork, x: State, max_vars: int = MAX_STG_VARS) -> frozenset[State]:
    """Forward closure of ``x`` in AD(f), ``x`` included."""
    _check_width(net, x)
    _check_cap(net.n, max_vars)
    stg = build_stg(net, max_vars)
    return frozenset(State(net.n, c) for c in reach_codes(stg, x.bits))


def census_of(attrs: list[Attractor], width: int) -> AttractorCensus:
    S = sum(1 for a in attrs if a.is_fixed_point)
    per = [0] * width
    for a in attrs:
        i = a.flip_component()
        if i is not None:
            per[i] += 1
    return AttractorCensus(S, len(attrs) - S, tuple(per))


def census(net: BooleanNetwork, max_vars: int = MAX_STG_VARS) -> AttractorCensus:
    return census_of(attractors(net, max_vars), net.n)


def attractor_report(net: BooleanNetwork, attrs: list[Attractor]) -> dict:
    c = census_of(attrs, net.n)
    return {
        "attractors": [{"kind": a.kind, "states": a.strings()} for a in attrs],
        "S": c.S,
        "A": c.A,
        "A_i": {name: c.A_i[k] for k, name in enumerate(net.names)},
    }


def stg_to_dot(stg: TransitionGraph, names: Iterable[str] | None = None) -> str:
    lines = ["digraph stg {"]
    if names is not None:
        lines.append(f'  label="{" ".join(names)}";')
    for x in range(stg.n_states):
        s = code_to_string(x, stg.width)
        lines.append(f'  s{x} [label="{s}"];')
    for x, y in stg.edges():
        lines.append(f"  s{x} -> s{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
