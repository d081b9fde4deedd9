"""Variable elimination for components without positive autoregulation.

Given f and a component v whose update function never switches on because of
itself (no positive loop at v), the representative maps

    R^a(x) = x with component v replaced by f_v(x^{v=a}),   a in {0, 1}

factor through the projection pi dropping v: R^a = S^a o pi. The reduced
network on the remaining components is

    f~_i(y) = f_i(S^0(y)) & f_i(S^1(y))   if y_i = 1
    f~_i(y) = f_i(S^0(y)) | f_i(S^1(y))   if y_i = 0

i.e. f~_i(y) keeps y_i only when both sections agree to keep it. Without any
loop at v both sections coincide and this is the substitution f~ = pi o f o S.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EliminationForbidden, NetworkError
from .igraph import all_minimum_pfvs, global_interaction_graph, minimum_pfvs
from .netcore import (
    MAX_CYCLE_VERTICES,
    BoolExpr,
    BooleanNetwork,
    State,
    UpdateFunction,
    embed_code,
    project_code,
    synthesize_expr,
)

CLASSICAL = "classical"
GENERALIZED = "generalized"
FORBIDDEN = "forbidden"


@dataclass(frozen=True, eq=False)
class RepresentativeMaps:
    """R^0 and R^1 as code arrays over all 2^n states."""

    v: int
    r0: np.ndarray
    r1: np.ndarray

    def __call__(self, a: int, code: int) -> int:
        return int((self.r1 if a else self.r0)[code])


@dataclass(frozen=True, eq=False)
class ReductionResult:
    reduced: BooleanNetwork
    eliminated: str
    eliminated_index: int
    index_map: dict[int, int]
    mode: str
    substitution: BoolExpr | None = None

    def to_dict(self, original_names: Sequence[str]) -> dict:
        return {
            "eliminated": self.eliminated,
            "mode": self.mode,
            "index_map": {original_names[k]: r for k, r in self.index_map.items()},
            "substitution": None if self.substitution is None else str(self.substitution),
        }


@dataclass(frozen=True, eq=False)
class EliminationChain:
    original: BooleanNetwork
    steps: tuple[ReductionResult, ...]

    @property
    def network(self) -> BooleanNetwork:
        return self.steps[-1].reduced if self.steps else self.original

    @property
    def eliminated(self) -> list[str]:
        return [s.eliminated for s in self.steps]

    @property
    def index_map(self) -> dict[int, int]:
        """Original index -> index in the final network, for surviving components."""
        current = {k: k for k in range(self.original.n)}
        for step in self.steps:
            current = {k: step.index_map[c] for k, c in current.items() if c in step.index_map}
        return current


@dataclass(frozen=True, eq=False)
class AttractorBound:
    pfvs: frozenset[str]
    bound: int
    order: tuple[str, ...]
    residual: BooleanNetwork
    pfvs_sizes: tuple[int, ...]

    @property
    def certified(self) -> bool:
        """The elimination order alone proves the bound.

        Requires the minimum PFVS size never to exceed |I| along the way and the
        residual network to be fully covered by its minimum PFVS. Elimination
        can create new positive cycles, so this may be False even though the
        bound itself holds.
        """
        # a single component without a positive loop has exactly one attractor
        covered = self.pfvs_sizes[-1] == self.residual.n or self.residual.n == 1
        return max(self.pfvs_sizes) <= len(self.pfvs) and covered


def _halves(net: BooleanNetwork, v: int):
    codes = np.arange(1 << net.n)
    low = codes[(codes >> v) & 1 == 0]
    t = net.table(v)
    return low, t[low], t[low | (1 << v)]


def can_eliminate(net: BooleanNetwork, v: int | str) -> str:
    """``"classical"`` (no loop at v), ``"generalized"`` (negative loop only) or ``"forbidden"``."""
    v = net.resolve(v)
    _, f0, f1 = _halves(net, v)
    if np.any(~f0 & f1):
        return FORBIDDEN
    if np.array_equal(f0, f1):
        return CLASSICAL
    return GENERALIZED


def _require_eliminable(net, v):
    mode = can_eliminate(net, v)
    if mode == FORBIDDEN:
        raise EliminationForbidden(net.names[v])
    return mode


def representative_maps(net: BooleanNetwork, v: int | str) -> RepresentativeMaps:
    v = net.resolve(v)
    _require_eliminable(net, v)
    codes = np.arange(1 << net.n, dtype=np.int64)
    t = net.table(v).astype(np.int64)
    cleared = codes & ~(1 << v)
    r0 = cleared | (t[cleared] << v)
    r1 = cleared | (t[cleared | (1 << v)] << v)
    r0.setflags(write=False)
    r1.setflags(write=False)
    return RepresentativeMaps(v, r0, r1)


def representative(net: BooleanNetwork, v: int | str, a: int, x: State) -> State:
    v = net.resolve(v)
    _require_eliminable(net, v)
    if x.width != net.n:
        raise NetworkError(f"state width {x.width} does not match network size {net.n}")
    placed = (x.bits & ~(1 << v)) | (a << v)
    value = int(net.table(v)[placed])
    return State(net.n, (x.bits & ~(1 << v)) | (value << v))


def section_codes(net: BooleanNetwork, v: int) -> tuple[np.ndarray, np.ndarray]:
    """S^0 and S^1 as code arrays over the 2^(n-1) reduced states."""
    y = np.arange(1 << (net.n - 1), dtype=np.int64)
    t = net.table(v).astype(np.int64)
    base = embed_code(y, v, 0)
    s0 = base | (t[base] << v)
    s1 = base | (t[base | (1 << v)] << v)
    return s0, s1


def section(net: BooleanNetwork, v: int | str, a: int, y: State) -> State:
    v = net.resolve(v)
    _require_eliminable(net, v)
    if y.width != net.n - 1:
        raise NetworkError(f"reduced state must have width {net.n - 1}, got {y.width}")
    return representative(net, v, a, State(net.n, embed_code(y.bits, v, a)))


def eliminate(net: BooleanNetwork, v: int | str) -> ReductionResult:
    v = net.resolve(v)
    mode = _require_eliminable(net, v)
    if net.n == 1:
        raise NetworkError("cannot eliminate the only component of a network")
    s0, s1 = section_codes(net, v)
    y = np.arange(1 << (net.n - 1), dtype=np.int64)
    keep = [i for i in range(net.n) if i != v]
    tables = []
    for r, i in enumerate(keep):
        a = net.table(i)[s0]
        b = net.table(i)[s1]
        yi = ((y >> r) & 1).astype(bool)
        tables.append(np.where(yi, a & b, a | b))
    names = tuple(net.names[i] for i in keep)
    reduced = BooleanNetwork(names, tuple(UpdateFunction(t) for t in tables))

    substitution = None
    if mode == CLASSICAL:
        # independent route: pi o f o S with the single section S
        t_v = net.table(v).astype(np.int64)
        lifted = embed_code(y, v, 0)
        S = lifted | (t_v[lifted] << v)
        direct = project_code(net.image[S], v)
        if not np.array_equal(direct, reduced.image):
            raise AssertionError("generalized elimination disagrees with pi o f o S")
        fn = net.functions[v]
        substitution = fn.source if fn.source is not None else synthesize_expr(fn, net.names)
    index_map = {i: r for r, i in enumerate(keep)}
    return ReductionResult(reduced, net.names[v], v, index_map, mode, substitution)


def eliminate_sequence(net: BooleanNetwork, order: Iterable[int | str]) -> EliminationChain:
    """Eliminate components one after another.

    Names are looked up in the current network at each step; integers refer to
    indices of the original network.
    """
    names = [net.names[net.resolve(c)] if isinstance(c, int) else c for c in order]
    steps = []
    current = net
    for k, name in enumerate(names):
        v = current.resolve(name)
        if can_eliminate(current, v) == FORBIDDEN:
            raise EliminationForbidden(name, f"positive loop at step {k + 1} of the elimination order")
        step = eliminate(current, v)
        steps.append(step)
        current = step.reduced
    return EliminationChain(net, tuple(steps))


def attractor_bound(net: BooleanNetwork, max_vertices: int = MAX_CYCLE_VERTICES) -> AttractorBound:
    """PFVS bound on the number of attractors, with the elimination order behind it.

    Repeatedly eliminates the smallest-index vertex lying outside some minimum
    PFVS of the current network, until every minimum PFVS is the whole vertex
    set (or a single component is left). ``pfvs_sizes`` records the minimum
    PFVS size of each network along the way, the last entry for the residual.
    """
    G = global_interaction_graph(net)
    I = minimum_pfvs(G, max_vertices)
    sizes: list[int] = []
    order = []
    current = net
    while True:
        mins = all_minimum_pfvs(global_interaction_graph(current), max_vertices)
        size = len(mins[0])
        sizes.append(size)
        if size == current.n or current.n == 1:
            break
        chosen = None
        for u in range(current.n):
            if any(u not in m for m in mins) and can_eliminate(current, u) != FORBIDDEN:
                chosen = u
                break
        if chosen is None:
            break
        order.append(current.names[chosen])
        current = eliminate(current, chosen).reduced
    return AttractorBound(
        frozenset(net.names[k] for k in I),
        2 ** len(I),
        tuple(order),
        current,
        tuple(sizes),
    )
