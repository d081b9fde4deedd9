"""Boolean network representation.

A network on ``n`` components stores one dense truth table per component,
indexed by the integer encoding of a state: bit ``k`` of the index holds the
value of component ``k`` (0-based). States are *displayed* with component 0
leftmost, so the state with only the last of three components on prints as
``"001"`` and has integer code 4.

Network files hold one ``name, expression`` line per component::

    # comment
    x1, (!x2 & x3) | (x2 & !x3)
    x2, (x1 & x3) | (!x1 & !x3)
    x3, (!x1 & !x2) | (x2 & x3)

Expressions use ``!``, ``&``, ``|``, parentheses and the literals ``0``/``1``;
``&`` binds tighter than ``|``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import CapExceeded, NetworkError, ParseError

MAX_TABLE_VARS = 24
MAX_STG_VARS = 20
MAX_CYCLE_VERTICES = 20

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


# --------------------------------------------------------------------------
# states


@dataclass(frozen=True, order=True)
class State:
    """An assignment of 0/1 values to ``width`` components."""

    width: int
    bits: int

    def __post_init__(self):
        if self.width < 1:
            raise NetworkError(f"state width must be >= 1, got {self.width}")
        if self.bits < 0 or self.bits >> self.width:
            raise NetworkError(f"bits {self.bits} do not fit in width {self.width}")

    @classmethod
    def from_string(cls, text: str) -> "State":
        if not text or set(text) - {"0", "1"}:
            raise NetworkError(f"not a state string: {text!r}")
        bits = sum(1 << k for k, ch in enumerate(text) if ch == "1")
        return cls(len(text), bits)

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "State":
        return cls(len(values), sum((1 << k) for k, b in enumerate(values) if b))

    def __getitem__(self, k: int) -> int:
        if not 0 <= k < self.width:
            raise NetworkError(f"component index {k} out of range for width {self.width}")
        return (self.bits >> k) & 1

    def values(self) -> tuple[int, ...]:
        return tuple((self.bits >> k) & 1 for k in range(self.width))

    def __str__(self) -> str:
        return code_to_string(self.bits, self.width)


def code_to_string(code: int, width: int) -> str:
    return "".join("1" if (code >> k) & 1 else "0" for k in range(width))


def _check_index(i: int, width: int) -> None:
    if not 0 <= i < width:
        raise NetworkError(f"component index {i} out of range for width {width}")


def flip(x: State, components: Iterable[int]) -> State:
    """Complement ``x`` on the given components."""
    mask = 0
    for i in components:
        _check_index(i, x.width)
        mask |= 1 << i
    return State(x.width, x.bits ^ mask)


def with_value(x: State, i: int, a: int) -> State:
    _check_index(i, x.width)
    return State(x.width, set_bit(x.bits, i, a))


def project(x: State, v: int) -> State:
    """Drop component ``v``; higher components shift down by one."""
    if x.width == 1:
        raise NetworkError("cannot project a width-1 state")
    _check_index(v, x.width)
    return State(x.width - 1, project_code(x.bits, v))


def set_bit(code, i, a):
    return (code | (1 << i)) if a else (code & ~(1 << i))


def project_code(code, v):
    """Integer form of :func:`project`; also works on numpy integer arrays."""
    low = code & ((1 << v) - 1)
    return low | ((code >> (v + 1)) << v)


def embed_code(code, v, a=0):
    """Inverse of :func:`project_code`: insert bit ``a`` at position ``v``."""
    low = code & ((1 << v) - 1)
    return low | ((code >> v) << (v + 1)) | (a << v)


# --------------------------------------------------------------------------
# expressions


class BoolExpr:
    """Base class of expression nodes."""

    __slots__ = ()

    def variables(self) -> set[str]:
        out: set[str] = set()
        _collect_vars(self, out)
        return out

    def __str__(self) -> str:
        return format_expr(self)


@dataclass(frozen=True)
class Var(BoolExpr):
    name: str


@dataclass(frozen=True)
class Const(BoolExpr):
    value: bool


@dataclass(frozen=True)
class Not(BoolExpr):
    arg: BoolExpr


@dataclass(frozen=True)
class And(BoolExpr):
    args: tuple[BoolExpr, ...]


@dataclass(frozen=True)
class Or(BoolExpr):
    args: tuple[BoolExpr, ...]


def _collect_vars(e, out):
    if isinstance(e, Var):
        out.add(e.name)
    elif isinstance(e, Not):
        _collect_vars(e.arg, out)
    elif isinstance(e, (And, Or)):
        for a in e.args:
            _collect_vars(a, out)


def eval_expr(e: BoolExpr, env: Mapping[str, int]) -> bool:
    """Recursive evaluation under a name -> value assignment."""
    if isinstance(e, Var):
        return bool(env[e.name])
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Not):
        return not eval_expr(e.arg, env)
    if isinstance(e, And):
        return all(eval_expr(a, env) for a in e.args)
    if isinstance(e, Or):
        return any(eval_expr(a, env) for a in e.args)
    raise TypeError(f"not an expression node: {e!r}")


def compile_expr(e: BoolExpr, names: Sequence[str]) -> np.ndarray:
    """Truth table of ``e`` over all ``2**len(names)`` states."""
    n = len(names)
    index = {name: k for k, name in enumerate(names)}
    states = np.arange(1 << n, dtype=np.int64)

    def go(node):
        if isinstance(node, Var):
            if node.name not in index:
                raise NetworkError(f"undeclared component {node.name!r}")
            return ((states >> index[node.name]) & 1).astype(bool)
        if isinstance(node, Const):
            return np.full(1 << n, node.value, dtype=bool)
        if isinstance(node, Not):
            return ~go(node.arg)
        if isinstance(node, And):
            out = np.ones(1 << n, dtype=bool)
            for a in node.args:
                out &= go(a)
            return out
        if isinstance(node, Or):
            out = np.zeros(1 << n, dtype=bool)
            for a in node.args:
                out |= go(a)
            return out
        raise TypeError(f"not an expression node: {node!r}")

    return go(e)


def format_expr(e: BoolExpr) -> str:
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Const):
        return "1" if e.value else "0"
    if isinstance(e, Not):
        inner = format_expr(e.arg)
        if isinstance(e.arg, (And, Or)):
            inner = f"({inner})"
        return "!" + inner
    if isinstance(e, (And, Or)):
        op = " & " if isinstance(e, And) else " | "
        parts = []
        for a in e.args:
            s = format_expr(a)
            if isinstance(a, (And, Or)):
                s = f"({s})"
            parts.append(s)
        return op.join(parts)
    raise TypeError(f"not an expression node: {e!r}")


_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<num>[01])|(?P<op>[!&|()]))")


class _ExprParser:
    def __init__(self, text, line=None, offset=0):
        self.text = text
        self.line = line
        self.offset = offset
        self.tokens = self._tokenize()
        self.pos = 0

    def _error(self, message, col):
        raise ParseError(message, self.line, col + self.offset + 1)

    def _tokenize(self):
        toks = []
        i = 0
        text = self.text
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            m = _TOKEN_RE.match(text, i)
            if not m or m.end() == i:
                self._error(f"unexpected character {text[i]!r}", i)
            kind = m.lastgroup
            start = m.start(kind)
            # a number glued to letters is not a name: "1a"
            if kind == "num" and m.end() < len(text) and (text[m.end()].isalnum() or text[m.end()] == "_"):
                self._error("malformed token", start)
            toks.append((kind, m.group(kind), start))
            i = m.end()
        toks.append(("end", "", len(text)))
        return toks

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            self._error("empty expression", self.peek()[2])
        e = self.expr()
        kind, value, col = self.peek()
        if kind != "end":
            self._error(f"unexpected {value!r}", col)
        return e

    def expr(self):
        args = [self.term()]
        while self.peek()[1] == "|":
            self.take()
            args.append(self.term())
        return args[0] if len(args) == 1 else Or(tuple(args))

    def term(self):
        args = [self.factor()]
        while self.peek()[1] == "&":
            self.take()
            args.append(self.factor())
        return args[0] if len(args) == 1 else And(tuple(args))

    def factor(self):
        kind, value, col = self.take()
        if value == "!":
            return Not(self.factor())
        if value == "(":
            e = self.expr()
            kind2, value2, col2 = self.take()
            if value2 != ")":
                self._error("expected ')'" if kind2 != "end" else "unclosed '('", col2)
            return e
        if kind == "name":
            return Var(value)
        if kind == "num":
            return Const(value == "1")
        if kind == "end":
            self._error("unexpected end of expression", col)
        self._error(f"unexpected {value!r}", col)


def parse_expr(text: str) -> BoolExpr:
    return _ExprParser(text).parse()


# --------------------------------------------------------------------------
# networks


@dataclass(frozen=True, eq=False)
class UpdateFunction:
    """Truth table of one coordinate function, with its source expression if known."""

    table: np.ndarray
    source: BoolExpr | None = None

    def __post_init__(self):
        t = np.asarray(self.table, dtype=bool).copy()
        if t.ndim != 1 or len(t) == 0 or len(t) & (len(t) - 1):
            raise NetworkError("truth table length must be a power of two")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @property
    def width(self) -> int:
        return len(self.table).bit_length() - 1

    def __eq__(self, other):
        if not isinstance(other, UpdateFunction):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    __hash__ = None

    def __call__(self, code: int) -> int:
        return int(self.table[code])

    def support(self) -> list[int]:
        """Components the function actually depends on."""
        n = self.width
        t = self.table
        idx = np.arange(len(t))
        return [k for k in range(n) if np.any(t[idx] != t[idx ^ (1 << k)])]


@dataclass(frozen=True, eq=False)
class BooleanNetwork:
    names: tuple[str, ...]
    functions: tuple[UpdateFunction, ...]
    _image: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        names = tuple(self.names)
        functions = tuple(self.functions)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "functions", functions)
        n = len(names)
        if n < 1:
            raise NetworkError("a network needs at least one component")
        if len(functions) != n:
            raise NetworkError(f"{n} names but {len(functions)} functions")
        if len(set(names)) != n:
            dup = next(x for x in names if names.count(x) > 1)
            raise NetworkError(f"duplicate component name {dup!r}")
        for name in names:
            if not NAME_RE.fullmatch(name):
                raise NetworkError(f"invalid component name {name!r}")
        for name, fn in zip(names, functions):
            if len(fn.table) != 1 << n:
                raise NetworkError(f"table of {name!r} has length {len(fn.table)}, expected {1 << n}")
        image = np.zeros(1 << n, dtype=np.int64)
        for k, fn in enumerate(functions):
            image |= fn.table.astype(np.int64) << k
        image.setflags(write=False)
        object.__setattr__(self, "_image", image)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def image(self) -> np.ndarray:
        """Integer code of f(x) for every state code x (read-only)."""
        return self._image

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise NetworkError(f"unknown component {name!r}") from None

    def resolve(self, component: int | str) -> int:
        if isinstance(component, str):
            return self.index(component)
        _check_index(component, self.n)
        return component

    def table(self, i: int) -> np.ndarray:
        return self.functions[i].table

    def __eq__(self, other):
        if not isinstance(other, BooleanNetwork):
            return NotImplemented
        return self.names == other.names and np.array_equal(self._image, other._image)

    __hash__ = None

    def __repr__(self):
        return f"BooleanNetwork(n={self.n}, names={self.names!r})"

    @classmethod
    def from_tables(cls, names: Sequence[str], tables: Sequence, max_vars: int = MAX_TABLE_VARS) -> "BooleanNetwork":
        _check_table_cap(len(names), max_vars)
        return cls(tuple(names), tuple(UpdateFunction(t) for t in tables))

    @classmethod
    def from_map(cls, names: Sequence[str], fn: Callable[[tuple[int, ...]], Sequence[int]]) -> "BooleanNetwork":
        """Tabulate a Python function from value tuples to value tuples."""
        n = len(names)
        _check_table_cap(n, MAX_TABLE_VARS)
        tables = np.zeros((n, 1 << n), dtype=bool)
        for code in range(1 << n):
            out = fn(tuple((code >> k) & 1 for k in range(n)))
            for k in range(n):
                tables[k, code] = bool(out[k])
        return cls.from_tables(names, tables)

    @classmethod
    def from_exprs(cls, exprs: Mapping[str, BoolExpr | str], max_vars: int = MAX_TABLE_VARS) -> "BooleanNetwork":
        names = list(exprs)
        _check_table_cap(len(names), max_vars)
        functions = []
        for name in names:
            e = exprs[name]
            if isinstance(e, str):
                e = parse_expr(e)
            functions.append(UpdateFunction(compile_expr(e, names), e))
        return cls(tuple(names), tuple(functions))


def _check_table_cap(n, max_vars):
    if n > max_vars:
        raise CapExceeded("truth table construction", n, max_vars)


def evaluate(net: BooleanNetwork, x: State) -> State:
    """Synchronous image f(x)."""
    if x.width != net.n:
        raise NetworkError(f"state width {x.width} does not match network size {net.n}")
    return State(net.n, int(net.image[x.bits]))


def parse_network(text: str, max_vars: int = MAX_TABLE_VARS) -> BooleanNetwork:
    """Parse the ``name, expression`` line format."""
    entries = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if not entries and line.strip().replace(" ", "").lower() == "targets,factors":
            continue
        if "," not in line:
            raise ParseError("expected 'name, expression'", lineno, len(line.rstrip()) + 1)
        head, body = line.split(",", 1)
        name = head.strip()
        if not NAME_RE.fullmatch(name):
            raise ParseError(f"invalid component name {name!r}", lineno, 1 + len(head) - len(head.lstrip()))
        if name in seen:
            raise ParseError(f"duplicate component {name!r} (first declared on line {seen[name]})", lineno, 1)
        seen[name] = lineno
        expr = _ExprParser(body, lineno, offset=len(head) + 1).parse()
        entries.append((name, expr, lineno, body, len(head) + 1))
    if not entries:
        raise ParseError("empty network: no component declarations")
    names = [e[0] for e in entries]
    _check_table_cap(len(names), max_vars)
    for name, expr, lineno, body, offset in entries:
        for ref in sorted(expr.variables()):
            if ref not in seen:
                col = re.search(rf"(?<![A-Za-z0-9_]){re.escape(ref)}(?![A-Za-z0-9_])", body)
                raise ParseError(f"undeclared component {ref!r}", lineno, offset + 1 + (col.start() if col else 0))
    functions = tuple(UpdateFunction(compile_expr(expr, names), expr) for _, expr, *_ in entries)
    return BooleanNetwork(tuple(names), functions)


def synthesize_expr(fn: UpdateFunction, names: Sequence[str]) -> BoolExpr:
    """A disjunctive normal form for a bare truth table, over its support only."""
    support = fn.support()
    t = fn.table
    if not support:
        return Const(bool(t[0]))
    minterms = []
    for code in range(1 << len(support)):
        x = 0
        for pos, k in enumerate(support):
            if (code >> pos) & 1:
                x |= 1 << k
        if t[x]:
            minterms.append([(code >> pos) & 1 for pos in range(len(support))])
    if len(support) <= 8:
        return _sympy_sop(minterms, [names[k] for k in support])
    clauses = []
    for m in minterms:
        lits = [Var(names[k]) if b else Not(Var(names[k])) for k, b in zip(support, m)]
        clauses.append(lits[0] if len(lits) == 1 else And(tuple(lits)))
    return clauses[0] if len(clauses) == 1 else Or(tuple(clauses))


def _sympy_sop(minterms, varnames):
    import sympy
    from sympy.logic import SOPform

    symbols = [sympy.Symbol(nm) for nm in varnames]
    return _from_sympy(SOPform(symbols, minterms))


def _from_sympy(e):
    import sympy

    if e is sympy.true:
        return Const(True)
    if e is sympy.false:
        return Const(False)
    if isinstance(e, sympy.Symbol):
        return Var(e.name)
    if isinstance(e, sympy.Not):
        return Not(_from_sympy(e.args[0]))
    if isinstance(e, (sympy.And, sympy.Or)):
        # sympy orders args canonically; keep a readable, stable order
        args = sorted((_from_sympy(a) for a in e.args), key=_literal_key)
        return (And if isinstance(e, sympy.And) else Or)(tuple(args))
    raise TypeError(f"unexpected sympy node {e!r}")


def _literal_key(e):
    if isinstance(e, Var):
        return (0, e.name, 0)
    if isinstance(e, Not) and isinstance(e.arg, Var):
        return (0, e.arg.name, 1)
    return (1, format_expr(e), 0)


def render_network(net: BooleanNetwork) -> str:
    lines = []
    for name, fn in zip(net.names, net.functions):
        e = fn.source if fn.source is not None else synthesize_expr(fn, net.names)
        lines.append(f"{name}, {format_expr(e)}")
    return "\n".join(lines) + "\n"
