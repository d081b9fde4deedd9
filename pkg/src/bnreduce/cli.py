"""Command-line front end.

Exit codes: 0 success, 1 a verification statement failed, 2 input error,
3 resource cap exceeded, 4 forbidden elimination (positive loop).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import tempfile
from dataclasses import dataclass

from . import __version__
from .dynamics import attractor_report, attractors, build_stg, fixed_points, stg_to_dot
from .errors import CapExceeded, EliminationForbidden, NetworkError
from .igraph import global_interaction_graph, igraph_to_dot, minimum_pfvs, positive_cycle_supports
from .netcore import MAX_STG_VARS, BooleanNetwork, code_to_string, format_expr, parse_network, render_network
from .reduction import attractor_bound, eliminate_sequence
from .verify import chain_counterexample, network_reports, run_suite, suite_cases

CAP_ENV = "BNREDUCE_CAP"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_FORBIDDEN = 4

log = logging.getLogger("bnreduce")


@dataclass(frozen=True)
class Config:
    input: str | None
    format: str
    cap: int
    seed: int
    verbosity: int
    output: str | None = None

    def __post_init__(self):
        if self.cap < 1:
            raise ValueError("cap must be >= 1")
        if self.format not in ("text", "json", "dot"):
            raise ValueError(f"unknown format {self.format!r}")


class InputError(Exception):
    pass


def _read_input(cfg: Config) -> tuple[str, dict]:
    if cfg.input in (None, "-"):
        text = sys.stdin.read()
        path = "<stdin>"
    else:
        try:
            with open(cfg.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {cfg.input}: {exc.strerror}") from None
        path = cfg.input
    digest = hashlib.sha256(text.encode()).hexdigest()
    return text, {"path": path, "sha256": digest}


def _load(cfg: Config) -> tuple[BooleanNetwork, dict]:
    text, info = _read_input(cfg)
    return parse_network(text), info


def _envelope(command: str, info: dict | None, body: dict) -> str:
    doc = {"tool": "bnreduce", "version": __version__, "command": command}
    if info is not None:
        doc["input"] = info
    doc.update(body)
    return json.dumps(doc, indent=2) + "\n"


def _no_dot(cfg, command):
    if cfg.format == "dot":
        raise InputError(f"{command} has no DOT output; use --format json or text")


# --------------------------------------------------------------------------
# commands


def cmd_attractors(cfg: Config) -> tuple[str, int]:
    _no_dot(cfg, "attractors")
    net, info = _load(cfg)
    attrs = attractors(net, cfg.cap)
    report = attractor_report(net, attrs)
    if cfg.format == "json":
        return _envelope("attractors", info, report), EXIT_OK
    lines = [f"components: {' '.join(net.names)}", f"fixed points S = {report['S']}, cyclic attractors A = {report['A']}"]
    for k, a in enumerate(report["attractors"], 1):
        lines.append(f"  [{k}] {a['kind']:6s} {' '.join(a['states'])}")
    per = ", ".join(f"{name}={c}" for name, c in report["A_i"].items())
    lines.append(f"two-state attractors per component: {per}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_fixed_points(cfg: Config) -> tuple[str, int]:
    _no_dot(cfg, "fixed-points")
    net, info = _load(cfg)
    fps = [str(x) for x in fixed_points(net)]
    if cfg.format == "json":
        return _envelope("fixed-points", info, {"components": list(net.names), "fixed_points": fps}), EXIT_OK
    return "\n".join([f"components: {' '.join(net.names)}"] + fps) + "\n", EXIT_OK


def cmd_reduce(cfg: Config, names: list[str]) -> tuple[str, int]:
    _no_dot(cfg, "reduce")
    net, info = _load(cfg)
    for name in names:
        if name not in net.names:
            raise NetworkError(f"unknown component {name!r}")
    chain = eliminate_sequence(net, names)
    reduced = chain.network
    text = render_network(reduced)
    if cfg.format == "json":
        current = net.names
        steps = []
        for step in chain.steps:
            steps.append(step.to_dict(current))
            current = step.reduced.names
        index_map = {net.names[k]: r for k, r in sorted(chain.index_map.items())}
        body = {"network": text, "components": list(reduced.names), "steps": steps, "index_map": index_map}
        return _envelope("reduce", info, body), EXIT_OK
    header = []
    for step in chain.steps:
        line = f"# eliminated {step.eliminated} ({step.mode})"
        if step.substitution is not None:
            line += f": {step.eliminated} := {format_expr(step.substitution)}"
        header.append(line)
    kept = ", ".join(f"{net.names[k]}->{r}" for k, r in sorted(chain.index_map.items()))
    header.append(f"# index map: {kept}")
    return "\n".join(header) + ("\n" if header else "") + text, EXIT_OK


def cmd_igraph(cfg: Config) -> tuple[str, int]:
    net, info = _load(cfg)
    G = global_interaction_graph(net)
    if cfg.format == "dot":
        return igraph_to_dot(G), EXIT_OK
    if cfg.format == "json":
        return _envelope("igraph", info, G.to_dict()), EXIT_OK
    lines = [f"{G.names[j]} -> {G.names[i]} ({'+' if s > 0 else '-'})" for j, i, s in G.sorted_edges()]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_pfvs(cfg: Config) -> tuple[str, int]:
    _no_dot(cfg, "pfvs")
    net, info = _load(cfg)
    G = global_interaction_graph(net)
    I = sorted(minimum_pfvs(G))
    cycles = [sorted(G.names[k] for k in s) for s in positive_cycle_supports(G)]
    names = [net.names[k] for k in I]
    if cfg.format == "json":
        return _envelope("pfvs", info, {"pfvs": names, "size": len(names), "positive_cycle_supports": cycles}), EXIT_OK
    return f"minimum positive feedback vertex set ({len(names)}): {{{', '.join(names)}}}\n", EXIT_OK


def cmd_bound(cfg: Config) -> tuple[str, int]:
    _no_dot(cfg, "bound")
    net, info = _load(cfg)
    b = attractor_bound(net)
    body = {
        "pfvs": sorted(b.pfvs),
        "bound": b.bound,
        "certificate": list(b.order),
        "certified": b.certified,
        "pfvs_sizes": list(b.pfvs_sizes),
        "residual_components": list(b.residual.names),
    }
    if net.n <= cfg.cap:
        body["attractors"] = len(attractors(net, cfg.cap))
    if cfg.format == "json":
        return _envelope("bound", info, body), EXIT_OK
    lines = [
        f"minimum PFVS: {{{', '.join(body['pfvs'])}}}",
        f"bound: at most {b.bound} attractors",
        f"elimination order: {' '.join(b.order) or '(none)'}",
    ]
    if "attractors" in body:
        lines.append(f"actual attractors: {body['attractors']}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_verify(cfg: Config, component: str | None, count: int) -> tuple[str, int]:
    _no_dot(cfg, "verify")
    if cfg.input is None:
        reports = run_suite(suite_cases(count, cfg.seed))
        info = {"suite": {"count": count, "seed": cfg.seed}}
    else:
        net, info = _load(cfg)
        reports = network_reports(net, component)
    failed = [r for r in reports if not r.passed]
    code = EXIT_FAILED if failed else EXIT_OK
    if cfg.format == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n", code
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.statement} {r.fingerprint}" + ("" if r.passed else f" {json.dumps(r.witness)}")
             for r in reports]
    lines.append(f"{len(reports) - len(failed)}/{len(reports)} passed")
    return "\n".join(lines) + "\n", code


def cmd_chain(cfg: Config, n: int) -> tuple[str, int]:
    _no_dot(cfg, "chain")
    net = chain_counterexample(n)
    text = render_network(net)
    if cfg.format == "json":
        return _envelope("chain", None, {"n": n, "components": list(net.names), "network": text}), EXIT_OK
    return text, EXIT_OK


def cmd_stg(cfg: Config) -> tuple[str, int]:
    net, info = _load(cfg)
    stg = build_stg(net, cfg.cap)
    if cfg.format == "dot":
        return stg_to_dot(stg, net.names), EXIT_OK
    edges = [[code_to_string(x, net.n), code_to_string(y, net.n)] for x, y in stg.edges()]
    if cfg.format == "json":
        return _envelope("stg", info, {"components": list(net.names), "states": stg.n_states, "edges": edges}), EXIT_OK
    return "\n".join(f"{a} -> {b}" for a, b in edges) + "\n", EXIT_OK


# --------------------------------------------------------------------------
# entry point


def _default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if not raw:
        return MAX_STG_VARS
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{CAP_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="json")
    common.add_argument("--cap", type=int, default=None,
                        help=f"max components for state-space enumeration (default {MAX_STG_VARS}, env {CAP_ENV})")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="bnreduce", description="Boolean network variable elimination toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in [
        ("attractors", "list attractors and the S/A census"),
        ("fixed-points", "list fixed points"),
        ("igraph", "global signed interaction graph"),
        ("pfvs", "minimum positive feedback vertex set"),
        ("bound", "PFVS attractor bound with elimination certificate"),
        ("stg", "asynchronous state transition graph"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file", nargs="?", default="-")

    p = sub.add_parser("reduce", parents=[common], help="eliminate components")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--eliminate", required=True, help="comma-separated component names, eliminated in order")

    p = sub.add_parser("verify", parents=[common], help="check the elimination statements exhaustively")
    p.add_argument("file", nargs="?", default=None, help="network file; omit to run the random suite")
    p.add_argument("--component", help="only eliminate this component (default: every eliminable one)")
    p.add_argument("--count", type=int, default=100, help="random suite size when no file is given")

    p = sub.add_parser("chain", parents=[common], help="write the mediator-chain network")
    p.add_argument("n", type=int)
    return parser


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".bnreduce-")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s")
    try:
        cap = args.cap if args.cap is not None else _default_cap()
        cfg = Config(getattr(args, "file", None), args.format, cap, args.seed, args.verbose, args.output)
        cmd = args.command
        if cmd == "attractors":
            out, code = cmd_attractors(cfg)
        elif cmd == "fixed-points":
            out, code = cmd_fixed_points(cfg)
        elif cmd == "reduce":
            names = [s.strip() for s in args.eliminate.split(",") if s.strip()]
            out, code = cmd_reduce(cfg, names)
        elif cmd == "igraph":
            out, code = cmd_igraph(cfg)
        elif cmd == "pfvs":
            out, code = cmd_pfvs(cfg)
        elif cmd == "bound":
            out, code = cmd_bound(cfg)
        elif cmd == "verify":
            out, code = cmd_verify(cfg, args.component, args.count)
        elif cmd == "chain":
            out, code = cmd_chain(cfg, args.n)
        else:
            out, code = cmd_stg(cfg)
    except EliminationForbidden as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORBIDDEN
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (NetworkError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _write(out, args.output)
    log.info("%s finished with exit code %d", args.command, code)
    return code


def main() -> None:
    sys.exit(run())
