"""Exhaustive checks of the elimination results on concrete networks.

Every check enumerates the full state space, so it is meant for networks of
at most eight components. Each named statement yields one :class:`CheckReport`;
a failing report carries the first violating instance as its witness, which is
already a single state, transition or attractor and needs no further shrinking.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .dynamics import (
    TransitionGraph,
    attractors,
    build_stg,
    census_of,
    reach_codes,
)
from .errors import CapExceeded, EliminationForbidden, NetworkError
from .igraph import (
    SignedDigraph,
    global_interaction_graph,
    path_signs,
    positive_cycle_supports,
    reachable_vertices,
    walk_signs,
)
from .netcore import (
    MAX_STG_VARS,
    And,
    BoolExpr,
    BooleanNetwork,
    Not,
    Or,
    Var,
    code_to_string,
    embed_code,
    project_code,
)
from .reduction import (
    CLASSICAL,
    FORBIDDEN,
    can_eliminate,
    eliminate,
    representative_maps,
    section_codes,
)

MAX_CHECK_VARS = 8
MAX_SHAPE_SEARCH = 12


@dataclass(frozen=True)
class CheckReport:
    statement: str
    fingerprint: str
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "statement": self.statement,
            "fingerprint": self.fingerprint,
            "verdict": "pass" if self.passed else "fail",
            "witness": self.witness,
        }


@dataclass(frozen=True)
class ShapePartition:
    U1: frozenset[int]
    U2: frozenset[int]
    v: int
    W: frozenset[int]

    def part_of(self, k: int) -> str:
        if k == self.v:
            return "v"
        for label in ("U1", "U2", "W"):
            if k in getattr(self, label):
                return label
        raise NetworkError(f"vertex {k} is not covered by the partition")


def fingerprint(net: BooleanNetwork) -> str:
    h = hashlib.sha256()
    h.update(",".join(net.names).encode())
    h.update(np.ascontiguousarray(net.image).tobytes())
    return "sha256:" + h.hexdigest()[:16]


# --------------------------------------------------------------------------
# shared context


class _Context:
    """Everything the checks need about f, v and the reduced network."""

    def __init__(self, net: BooleanNetwork, v: int, label: str | None = None, reduced: BooleanNetwork | None = None):
        if net.n > MAX_CHECK_VARS:
            raise CapExceeded("exhaustive statement check", net.n, MAX_CHECK_VARS)
        self.net = net
        self.v = v
        self.n = net.n
        self.label = label or fingerprint(net)
        self.mode = can_eliminate(net, v)
        if self.mode == FORBIDDEN:
            raise EliminationForbidden(net.names[v])
        self.red = eliminate(net, v).reduced if reduced is None else reduced
        if self.red.n != net.n - 1:
            raise NetworkError("candidate reduction must have one component fewer")
        self.stg = build_stg(net)
        self.rstg = build_stg(self.red)
        self.ch = self.stg.changes.tolist()
        self.rch = self.rstg.changes.tolist()
        maps = representative_maps(net, v)
        self.r = (maps.r0.tolist(), maps.r1.tolist())
        s0, s1 = section_codes(net, v)
        self.s = (s0.tolist(), s1.tolist())
        self.attrs = attractors(net, stg=self.stg)
        self.rattrs = attractors(self.red, stg=self.rstg)
        self.census = census_of(self.attrs, self.n)
        self.rcensus = census_of(self.rattrs, self.n - 1)
        self._reach: dict[int, set[int]] = {}
        self._G = None
        self._Gr = None

    def proj(self, x: int) -> int:
        return project_code(x, self.v)

    def ridx(self, i: int) -> int:
        return i if i < self.v else i - 1

    def oidx(self, r: int) -> int:
        return r if r < self.v else r + 1

    def reach(self, x: int) -> set[int]:
        if x not in self._reach:
            self._reach[x] = reach_codes(self.stg, x)
        return self._reach[x]

    @property
    def G(self) -> SignedDigraph:
        if self._G is None:
            self._G = global_interaction_graph(self.net)
        return self._G

    @property
    def Gr(self) -> SignedDigraph:
        if self._Gr is None:
            self._Gr = global_interaction_graph(self.red)
        return self._Gr

    def s_(self, x: int) -> str:
        return code_to_string(x, self.n)

    def rs(self, y: int) -> str:
        return code_to_string(y, self.n - 1)

    def report(self, statement: str, witness: dict | None) -> CheckReport:
        return CheckReport(statement, self.label, witness is None, witness or {})


def _first(gen):
    return next(gen, None)


# --------------------------------------------------------------------------
# dynamics-side statements


def _repr_i(c: _Context):
    vbit = 1 << c.v
    for x in range(1 << c.n):
        a, b = c.r[0][x], c.r[1][x]
        if x == a and x == b:
            continue
        ok = any(t != x and t ^ x == vbit and c.ch[x] & vbit for t in (a, b))
        if a != b:
            ok = ok and bool(c.ch[a] & vbit) and bool(c.ch[b] & vbit)
        if not ok:
            yield {"x": c.s_(x), "R0": c.s_(a), "R1": c.s_(b)}


def _repr_ii(c: _Context):
    for x in range(1 << c.n):
        px = c.proj(x)
        for a in (0, 1):
            z = c.r[a][x]
            for i in range(c.n):
                if i != c.v and c.ch[z] >> i & 1 and not c.rch[px] >> c.ridx(i) & 1:
                    yield {"x": c.s_(x), "a": a, "direction": c.net.names[i]}


def _repr_iii(c: _Context):
    free = [i for i in range(c.n) if i != c.v and not c.G.has_edge(c.v, i)]
    for x in range(1 << c.n):
        for i in free:
            if not c.ch[x] >> i & 1:
                continue
            ok = all(c.ch[c.r[a][x]] >> i & 1 for a in (0, 1))
            ok = ok and c.rch[c.proj(x)] >> c.ridx(i) & 1
            if not ok:
                yield {"x": c.s_(x), "direction": c.net.names[i]}


def _repr_iv(c: _Context):
    for y in range(1 << (c.n - 1)):
        fiber = [embed_code(y, c.v, 0), embed_code(y, c.v, 1)]
        for r in range(c.n - 1):
            if not c.rch[y] >> r & 1:
                continue
            i = c.oidx(r)
            ok = False
            for a in (0, 1):
                s = c.s[a][y]
                if c.ch[s] >> i & 1:
                    target = s ^ (1 << i)
                    if all(target in c.reach(z) for z in fiber):
                        ok = True
                        break
            if not ok:
                yield {"y": c.rs(y), "direction": c.net.names[i]}


def _fixed_i(c: _Context):
    fixed = [a.codes[0] for a in c.attrs if a.is_fixed_point]
    for x in fixed:
        px = c.proj(x)
        others = [z for z in fixed if z != x and c.proj(z) == px]
        if not (x == c.r[0][x] == c.r[1][x]) or c.rch[px] != 0 or others:
            yield {"fixed_point": c.s_(x)}


def _fixed_ii(c: _Context):
    for a in c.attrs:
        if a.flip_component() == c.v and c.rch[c.proj(a.codes[0])] != 0:
            yield {"attractor": a.strings()}


def _fixed_iii(c: _Context):
    attr_sets = {frozenset(a.codes) for a in c.attrs}
    for y in range(1 << (c.n - 1)):
        if c.rch[y] == 0 and frozenset({c.s[0][y], c.s[1][y]}) not in attr_sets:
            yield {"reduced_fixed_point": c.rs(y)}


def _is_reduced_trap(c: _Context, T: set[int]) -> bool:
    for y in T:
        m = c.rch[y]
        while m:
            b = m & -m
            if y ^ b not in T:
                return False
            m ^= b
    return True


def _fixed_iv(c: _Context):
    # every trap set is a union of forward closures and projection commutes
    # with unions, so checking each closure covers all trap sets
    for x in range(1 << c.n):
        T = {c.proj(z) for z in c.reach(x)}
        if not _is_reduced_trap(c, T):
            yield {"closure_of": c.s_(x)}


def _fixed_v(c: _Context):
    rsets = {frozenset(a.codes) for a in c.rattrs}
    for a in c.attrs:
        i = a.flip_component()
        if i is None or i == c.v:
            continue
        img = frozenset(c.proj(x) for x in a.codes)
        if len(img) != 2 or img not in rsets:
            yield {"attractor": a.strings()}


def _fixed_vi(c: _Context):
    for ra in c.rattrs:
        rset = set(ra.codes)
        hits = [a for a in c.attrs if any(c.proj(x) in rset for x in a.codes)]
        if len(hits) > 1:
            yield {"reduced_attractor": ra.strings(), "preimages": [a.strings() for a in hits]}


def _cor_i(c: _Context):
    lhs = c.rcensus.S
    rhs = c.census.S + c.census.A_i[c.v]
    if lhs != rhs:
        yield {"S_reduced": lhs, "S": c.census.S, "A_v": c.census.A_i[c.v]}


def _cor_ii(c: _Context):
    for i in range(c.n):
        if i != c.v and c.census.A_i[i] > c.rcensus.A_i[c.ridx(i)]:
            yield {"component": c.net.names[i], "A_i": c.census.A_i[i], "A_i_reduced": c.rcensus.A_i[c.ridx(i)]}


def _cor_iii(c: _Context):
    if c.census.total() > c.rcensus.total():
        yield {"total": c.census.total(), "total_reduced": c.rcensus.total()}


def _classical_formula(c: _Context):
    if c.mode != CLASSICAL:
        return
    t_v = c.net.table(c.v)
    for y in range(1 << (c.n - 1)):
        x = embed_code(y, c.v, 0)
        x = x | (int(t_v[x]) << c.v)
        expected = c.proj(int(c.net.image[x]))
        if int(c.red.image[y]) != expected:
            yield {"y": c.rs(y)}


_REDUCTION_CHECKS = [
    ("Representatives.i", _repr_i),
    ("Representatives.ii", _repr_ii),
    ("Representatives.iii", _repr_iii),
    ("Representatives.iv", _repr_iv),
    ("FixedPoints.i", _fixed_i),
    ("FixedPoints.ii", _fixed_ii),
    ("FixedPoints.iii", _fixed_iii),
    ("FixedPoints.iv", _fixed_iv),
    ("FixedPoints.v", _fixed_v),
    ("FixedPoints.vi", _fixed_vi),
    ("Census.i", _cor_i),
    ("Census.ii", _cor_ii),
    ("Census.iii", _cor_iii),
]


def _context(net, v, label, reduced=None):
    return _Context(net, net.resolve(v), label, reduced)


def check_reduction_statements(net: BooleanNetwork, v: int | str, label: str | None = None,
                               reduced: BooleanNetwork | None = None) -> list[CheckReport]:
    """One report per representative-map, fixed-point and census statement,
    for eliminating ``v`` from ``net``.

    ``reduced`` substitutes a candidate reduced network for the computed one,
    which lets the checks be pointed at a deliberately wrong reduction.
    """
    c = _context(net, v, label, reduced)
    reports = [c.report(name, _first(fn(c))) for name, fn in _REDUCTION_CHECKS]
    if c.mode == CLASSICAL:
        reports.append(c.report("Classical.pi-f-S", _first(_classical_formula(c))))
    return reports


# --------------------------------------------------------------------------
# interaction-graph statements


def _two_cycle_signs(G: SignedDigraph, i: int, v: int) -> set[int]:
    return {a * b for a in G.signs(i, v) for b in G.signs(v, i)}


def _ig_neg_loop(c: _Context):
    G, v = c.G, c.v
    for r in range(c.n - 1):
        if c.Gr.has_edge(r, r, -1):
            i = c.oidx(r)
            if not (G.has_edge(i, i, -1) or G.has_edge(v, v, -1) or -1 in _two_cycle_signs(G, i, v)):
                yield {"component": c.net.names[i]}


def _ig_pos_loop(c: _Context):
    G, v = c.G, c.v
    for r in range(c.n - 1):
        if c.Gr.has_edge(r, r, 1):
            i = c.oidx(r)
            if not (G.has_edge(i, i, 1) or 1 in _two_cycle_signs(G, i, v)):
                yield {"component": c.net.names[i]}


def _edges_in_ig(c: _Context):
    G, v = c.G, c.v
    for jr, ir, s in c.Gr.sorted_edges():
        if jr == ir:
            continue
        j, i = c.oidx(jr), c.oidx(ir)
        via = {a * b for a in G.signs(j, v) for b in G.signs(v, i)}
        if not (G.has_edge(j, i, s) or s in via):
            yield {"edge": [c.net.names[j], c.net.names[i], s]}


def _paths(c: _Context, allow_loop: bool):
    """Elementary paths of G(f~) against elementary paths of G(f)."""
    orig = {j: path_signs(c.G, j) for j in range(c.n)}
    for jr in range(c.n - 1):
        j = c.oidx(jr)
        for ir, s in sorted(path_signs(c.Gr, jr, allow_loop)):
            i = c.oidx(ir)
            if (i, s) not in orig[j]:
                yield {"from": c.net.names[j], "to": c.net.names[i], "sign": s}


def _paths_to_walks(c: _Context, elementary: bool):
    """Paths of G(f~) (elementary non-loop ones, or all walks) against walks of G(f)."""
    for jr in range(c.n - 1):
        j = c.oidx(jr)
        orig = walk_signs(c.G, j)
        ends = path_signs(c.Gr, jr, allow_loop=False) if elementary else walk_signs(c.Gr, jr)
        for ir, s in sorted(ends):
            i = c.oidx(ir)
            if (i, s) not in orig:
                yield {"from": c.net.names[j], "to": c.net.names[i], "sign": s}


def _pfvs_shrinks(c: _Context):
    sup = positive_cycle_supports(c.G)
    rsup = positive_cycle_supports(c.Gr)
    others = [k for k in range(c.n) if k != c.v]
    for size in range(len(others) + 1):
        for I in itertools.combinations(others, size):
            Iset = set(I)
            if not all(s & Iset for s in sup):
                continue
            mapped = {c.ridx(k) for k in I}
            if c.G.has_edge(c.v, c.v, 1) or not all(s & mapped for s in rsup):
                yield {"pfvs": [c.net.names[k] for k in I]}


def check_ig_statements(net: BooleanNetwork, v: int | str, label: str | None = None,
                        reduced: BooleanNetwork | None = None) -> list[CheckReport]:
    c = _context(net, v, label, reduced)
    return _ig_reports(c)


def _ig_reports(c: _Context) -> list[CheckReport]:
    reports = [
        c.report("IG.neg-loop", _first(_ig_neg_loop(c))),
        c.report("IG.pos-loop", _first(_ig_pos_loop(c))),
        c.report("IG.edges", _first(_edges_in_ig(c))),
        c.report("IG.paths", _first(_paths(c, allow_loop=False))),
        c.report("IG.paths-walk", _first(_paths_to_walks(c, elementary=True))),
        c.report("IG.pfvs", _first(_pfvs_shrinks(c))),
    ]
    if c.mode == CLASSICAL:
        reports.append(c.report("IG.paths-classical", _first(_paths_to_walks(c, elementary=False))))
    return reports


def check_all(net: BooleanNetwork, v: int | str, label: str | None = None,
              reduced: BooleanNetwork | None = None) -> list[CheckReport]:
    """Reduction and interaction-graph statements from one shared context."""
    c = _context(net, v, label, reduced)
    reports = [c.report(name, _first(fn(c))) for name, fn in _REDUCTION_CHECKS]
    if c.mode == CLASSICAL:
        reports.append(c.report("Classical.pi-f-S", _first(_classical_formula(c))))
    return reports + _ig_reports(c)


# --------------------------------------------------------------------------
# reachability outside a PFVS


def reach_matrix(stg: TransitionGraph) -> np.ndarray:
    """Boolean matrix R with R[x, y] iff y is reachable from x (reflexive)."""
    N = stg.n_states
    R = np.eye(N, dtype=bool)
    for x, y in stg.edges():
        R[x, y] = True
    while True:
        nxt = (R.astype(np.int32) @ R.astype(np.int32)) > 0
        if np.array_equal(nxt, R):
            return R
        R = nxt


def check_blocked_paths(net: BooleanNetwork, label: str | None = None) -> CheckReport:
    """If I is not reachable from W in G(f), flipping I never needs to disturb W.

    For every disjoint W, I (I nonempty, W nonempty) with no path from W to I,
    and every x: if some reachable y has y_I = complement of x_I, then some
    reachable z has z_I = complement of x_I and z_W = x_W.
    """
    if net.n > MAX_CHECK_VARS:
        raise CapExceeded("blocked paths check", net.n, MAX_CHECK_VARS)
    label = label or fingerprint(net)
    G = global_interaction_graph(net)
    R = reach_matrix(build_stg(net))
    codes = np.arange(1 << net.n)
    X = codes[:, None] ^ codes[None, :]
    for assign in itertools.product((0, 1, 2), repeat=net.n):
        W = [k for k, a in enumerate(assign) if a == 1]
        I = [k for k, a in enumerate(assign) if a == 2]
        if not W or not I:
            continue
        if reachable_vertices(G, W) & set(I):
            continue
        mI = sum(1 << k for k in I)
        mW = sum(1 << k for k in W)
        flipped = R & ((X & mI) == mI)
        kept = flipped & ((X & mW) == 0)
        bad = np.nonzero(flipped.any(axis=1) & ~kept.any(axis=1))[0]
        if len(bad):
            x = int(bad[0])
            return CheckReport("Paths.blocked", label, False, {
                "x": code_to_string(x, net.n),
                "W": [net.names[k] for k in W],
                "I": [net.names[k] for k in I],
            })
    return CheckReport("Paths.blocked", label, True, {})


# --------------------------------------------------------------------------
# attractor preservation and the shape condition


def attractors_preserved(net: BooleanNetwork, v: int | str, max_vars: int = MAX_STG_VARS) -> tuple[bool, CheckReport]:
    v = net.resolve(v)
    if can_eliminate(net, v) == FORBIDDEN:
        raise EliminationForbidden(net.names[v])
    red = eliminate(net, v).reduced
    attrs = attractors(net, max_vars)
    rattrs = attractors(red, max_vars)
    rsets = {frozenset(a.codes) for a in rattrs}
    images = [frozenset(project_code(x, v) for x in a.codes) for a in attrs]
    label = fingerprint(net)
    for a, img in zip(attrs, images):
        if img not in rsets:
            w = {"condition": "i", "attractor": a.strings(), "projection": sorted(code_to_string(y, net.n - 1) for y in img)}
            return False, CheckReport("Attractors.preserved", label, False, w)
    for ra in rattrs:
        k = sum(1 for img in images if img == frozenset(ra.codes))
        if k != 1:
            w = {"condition": "ii", "reduced_attractor": ra.strings(), "preimages": k}
            return False, CheckReport("Attractors.preserved", label, False, w)
    return True, CheckReport("Attractors.preserved", label, True, {})


_ALLOWED = {
    ("U1", "U1"), ("U2", "U2"), ("W", "W"),
    ("U1", "U2"), ("U1", "W"), ("U2", "v"), ("v", "W"),
}


def _validate_partition(G: SignedDigraph, p: ShapePartition):
    parts = [p.U1, p.U2, frozenset({p.v}), p.W]
    union = frozenset().union(*parts)
    if sum(len(s) for s in parts) != len(union) or union != frozenset(G.vertices):
        raise NetworkError("U1, U2, {v}, W must partition the vertex set")


def matches_shape(G: SignedDigraph, p: ShapePartition) -> bool:
    """True iff every edge of G is allowed by the shape U1 -> U2 -> v -> W (with U1 -> W).

    The only loop allowed at v is negative.
    """
    _validate_partition(G, p)
    for j, i, s in G.edges:
        a, b = p.part_of(j), p.part_of(i)
        if (a, b) == ("v", "v"):
            if s != -1:
                return False
        elif (a, b) not in _ALLOWED:
            return False
    return True


def find_shape_partition(G: SignedDigraph, v: int | str) -> ShapePartition | None:
    v = G.resolve(v)
    W = frozenset(reachable_vertices(G, [v]) - {v})
    U2 = frozenset(G.regulators(v) - {v})
    if not U2 & W:
        U1 = frozenset(G.vertices) - W - U2 - {v}
        p = ShapePartition(U1, U2, v, W)
        if matches_shape(G, p):
            return p
    if G.n > MAX_SHAPE_SEARCH:
        return None
    rest = [k for k in G.vertices if k != v]
    for assign in itertools.product(("U1", "U2", "W"), repeat=len(rest)):
        groups = {"U1": set(), "U2": set(), "W": set()}
        for k, label in zip(rest, assign):
            groups[label].add(k)
        p = ShapePartition(frozenset(groups["U1"]), frozenset(groups["U2"]), v, frozenset(groups["W"]))
        if matches_shape(G, p):
            return p
    return None


# --------------------------------------------------------------------------
# the mediator-chain construction


def _and(args: Sequence[BoolExpr]) -> BoolExpr:
    return args[0] if len(args) == 1 else And(tuple(args))


def chain_counterexample(n: int, max_vars: int = 24) -> BooleanNetwork:
    """Network on u, v1..v{n+1}, w1..w{n+2} whose unique attractor is the all-ones state.

    Eliminating any mediator v_i makes the all-ones state unreachable from the
    all-zeros state.
    """
    if n < 1:
        raise NetworkError("chain length must be at least 1")
    size = 2 * (n + 2)
    if size > max_vars:
        raise CapExceeded("chain counterexample", size, max_vars)
    u = Var("u")
    vs = [Var(f"v{k}") for k in range(1, n + 2)]
    ws = [Var(f"w{k}") for k in range(1, n + 3)]
    all_w = _and(ws)
    no_w = _and([Not(w) for w in ws])
    exprs: dict[str, BoolExpr] = {}
    exprs["u"] = Or((all_w, And((Not(u), no_w)), And((u, Not(all_w), Not(no_w)))))
    exprs["v1"] = u
    for k in range(2, n + 2):
        exprs[f"v{k}"] = vs[k - 2]
    last = vs[-1]
    for i in range(1, n + 3):
        gate = last if i % 2 == 1 else Not(last)
        body = [gate] + ws[: i - 1] + [Not(w) for w in ws[i - 1:]]
        exprs[f"w{i}"] = Or((all_w, And(tuple(body))))
    return BooleanNetwork.from_exprs(exprs)


def chain_report(n: int) -> dict:
    """Attractor counts before and after eliminating each mediator of the chain."""
    net = chain_counterexample(n)
    attrs = attractors(net)
    c = census_of(attrs, net.n)
    ones = (1 << net.n) - 1
    out = {
        "n": n,
        "components": net.n,
        "attractors": len(attrs),
        "S": c.S,
        "A": c.A,
        "unique_attractor_is_ones": len(attrs) == 1 and attrs[0].codes == (ones,),
        "eliminations": [],
    }
    for k in range(1, n + 2):
        name = f"v{k}"
        red = eliminate(net, name).reduced
        stg = build_stg(red)
        rattrs = attractors(red, stg=stg)
        rc = census_of(rattrs, red.n)
        rones = (1 << red.n) - 1
        out["eliminations"].append({
            "eliminated": name,
            "attractors": len(rattrs),
            "S": rc.S,
            "A": rc.A,
            "ones_reachable_from_zero": rones in reach_codes(stg, 0),
        })
    return out


# --------------------------------------------------------------------------
# random networks


@dataclass(frozen=True)
class NoPositiveLoopAt:
    v: int


@dataclass(frozen=True)
class NoLoopAt:
    v: int


@dataclass(frozen=True)
class Shaped:
    """Sizes of U1, U2 and W; components are laid out as U1, U2, v, W."""

    u1: int
    u2: int
    w: int

    @property
    def n(self) -> int:
        return self.u1 + self.u2 + 1 + self.w

    @property
    def v(self) -> int:
        return self.u1 + self.u2

    def partition(self) -> ShapePartition:
        U1 = frozenset(range(self.u1))
        U2 = frozenset(range(self.u1, self.v))
        W = frozenset(range(self.v + 1, self.n))
        return ShapePartition(U1, U2, self.v, W)


def _lift(rng, n, inputs):
    """Random function of the given inputs, tabulated over all 2^n states."""
    inputs = sorted(inputs)
    small = rng.integers(0, 2, size=1 << len(inputs)).astype(bool)
    codes = np.arange(1 << n)
    idx = np.zeros(1 << n, dtype=np.int64)
    for pos, k in enumerate(inputs):
        idx |= ((codes >> k) & 1) << pos
    return small[idx]


def _drop_positive_loop(t, v):
    t = t.copy()
    codes = np.arange(len(t))
    low = codes[(codes >> v) & 1 == 0]
    high = low | (1 << v)
    bad = ~t[low] & t[high]
    t[high[bad]] = False
    return t


def random_network(n: int, seed: int, constraint=None, max_indegree: int | None = None, max_vars: int = MAX_CHECK_VARS) -> BooleanNetwork:
    """Deterministic random network for (n, seed, constraint, max_indegree).

    ``max_indegree=None`` samples every table uniformly over all 2^n states;
    otherwise each component reads a random subset of at most that many
    components.
    """
    if isinstance(constraint, Shaped):
        if n != constraint.n:
            raise NetworkError(f"shape sizes give {constraint.n} components, not {n}")
    if n > max_vars:
        raise CapExceeded("random network", n, max_vars)
    if n < 1:
        raise NetworkError("a network needs at least one component")
    rng = np.random.default_rng(seed)
    names = [f"x{k + 1}" for k in range(n)]
    if isinstance(constraint, Shaped):
        return _shaped(rng, names, constraint)
    tables = []
    for _ in range(n):
        if max_indegree is None:
            tables.append(rng.integers(0, 2, size=1 << n).astype(bool))
        else:
            k = int(rng.integers(0, min(max_indegree, n) + 1))
            inputs = rng.choice(n, size=k, replace=False)
            tables.append(_lift(rng, n, inputs))
    if isinstance(constraint, NoPositiveLoopAt):
        tables[constraint.v] = _drop_positive_loop(tables[constraint.v], constraint.v)
    elif isinstance(constraint, NoLoopAt):
        v = constraint.v
        t = tables[v].copy()
        codes = np.arange(1 << n)
        low = codes[(codes >> v) & 1 == 0]
        t[low | (1 << v)] = t[low]
        tables[v] = t
    elif constraint is not None:
        raise NetworkError(f"unknown constraint {constraint!r}")
    return BooleanNetwork.from_tables(names, tables)


def _shaped(rng, names, shape: Shaped, retries: int = 20) -> BooleanNetwork:
    p = shape.partition()
    n = shape.n
    allowed = {}
    for k in range(n):
        part = p.part_of(k)
        if part == "U1":
            allowed[k] = p.U1
        elif part == "U2":
            allowed[k] = p.U1 | p.U2
        elif part == "v":
            allowed[k] = p.U2 | {p.v}
        else:
            allowed[k] = p.U1 | {p.v} | p.W
    for _ in range(retries):
        tables = [_lift(rng, n, allowed[k]) for k in range(n)]
        tables[p.v] = _drop_positive_loop(tables[p.v], p.v)
        net = BooleanNetwork.from_tables(names, tables)
        if matches_shape(global_interaction_graph(net), p):
            return net
    raise NetworkError(f"could not sample a network of shape {shape} in {retries} attempts")


def constraint_label(constraint) -> str:
    if constraint is None:
        return "none"
    if isinstance(constraint, NoPositiveLoopAt):
        return f"no_positive_loop_at({constraint.v})"
    if isinstance(constraint, NoLoopAt):
        return f"no_loop_at({constraint.v})"
    return f"shaped({constraint.u1},{constraint.u2},{constraint.w})"


# --------------------------------------------------------------------------
# suites


@dataclass(frozen=True)
class SuiteCase:
    n: int
    seed: int
    v: int
    max_indegree: int | None

    @property
    def label(self) -> str:
        deg = "dense" if self.max_indegree is None else f"indeg<={self.max_indegree}"
        return f"random(n={self.n},seed={self.seed},no_positive_loop_at({self.v}),{deg})"

    def network(self) -> BooleanNetwork:
        return random_network(self.n, self.seed, NoPositiveLoopAt(self.v), self.max_indegree)


def suite_cases(count: int, seed: int = 0, sizes: Iterable[int] = (3, 4, 5, 6)) -> list[SuiteCase]:
    """Deterministic list of random cases cycling through sizes and densities."""
    sizes = list(sizes)
    densities = [None, 2, 3]
    rng = np.random.default_rng(seed)
    cases = []
    for k in range(count):
        n = sizes[k % len(sizes)]
        v = int(rng.integers(0, n))
        cases.append(SuiteCase(n, seed * 1_000_003 + k, v, densities[(k // len(sizes)) % len(densities)]))
    return cases


def run_suite(cases: Iterable[SuiteCase], blocked_paths: bool = True) -> list[CheckReport]:
    reports = []
    for case in cases:
        net = case.network()
        reports.extend(check_all(net, case.v, case.label))
        if blocked_paths:
            reports.append(check_blocked_paths(net, case.label))
    reports.sort(key=lambda r: (r.statement, r.fingerprint))
    return reports


def network_reports(net: BooleanNetwork, v: int | str | None = None, label: str | None = None) -> list[CheckReport]:
    """Every applicable statement for one network, over one or all eliminable components."""
    label = label or fingerprint(net)
    targets = [net.resolve(v)] if v is not None else [k for k in range(net.n) if can_eliminate(net, k) != FORBIDDEN]
    reports = []
    if net.n >= 2:
        for k in targets:
            reports.extend(check_all(net, k, f"{label}/eliminate={net.names[k]}"))
    reports.append(check_blocked_paths(net, label))
    reports.sort(key=lambda r: (r.statement, r.fingerprint))
    return reports
