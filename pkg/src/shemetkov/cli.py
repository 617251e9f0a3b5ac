"""Command-line front end.

Formation files have one line per prime, ``<p>: <q1> <q2> ...``; graph files
start with ``vertices: <p1> <p2> ...`` followed by ``<p> -> <q>`` lines.  In
both, ``#`` starts a comment.

Exit status is 0 whenever a verdict was computed (either answer) and 2 on any
input or validation error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, TextIO

from .decider import Verdict, in_rho_phase, decide_graph
from .errors import ValidationError
from .formation import LocalFormationSpec, formation_graph
from .graph import CriticalGraph, format_set, graph_from
from .primes import is_prime

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2


class ParseError(ValidationError):
    def __init__(self, lineno: int, msg: str) -> None:
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass(frozen=True)
class RunConfig:
    mode: str = "formation"
    input_path: str | None = None
    output_format: str = "text"
    emit_trace: bool = False
    all_witnesses: bool = False
    strict: bool = False


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _primes(tokens: Sequence[str], lineno: int) -> list[int]:
    out = []
    for tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(lineno, f"{tok!r} is not an integer") from None
        if not is_prime(v):
            raise ParseError(lineno, f"{v} is not a prime")
        out.append(v)
    return out


def parse_formation_file(text: str) -> LocalFormationSpec:
    rows: dict[int, tuple[int, list[int]]] = {}
    for lineno, line in _content_lines(text):
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(lineno, "expected '<p>: <q1> <q2> ...'")
        (p,) = _primes([head.strip()], lineno)
        if p in rows:
            raise ParseError(lineno, f"prime {p} already defined on line {rows[p][0]}")
        rows[p] = (lineno, _primes(rest.split(), lineno))
    if not rows:
        raise ValidationError("no primes defined")
    for p, (lineno, allowed) in rows.items():
        if p not in allowed:
            raise ParseError(lineno, f"prime {p} must belong to its own set")
        for q in allowed:
            if q not in rows:
                raise ParseError(lineno, f"{q} is not one of the defined primes")
    return LocalFormationSpec.from_mapping({p: allowed for p, (_, allowed) in rows.items()})


def parse_graph_file(text: str, strict: bool = False) -> CriticalGraph:
    """Parse a graph file.

    Loops and non-primes are always errors.  Duplicate edges and edges to
    undeclared vertices are errors with ``strict``; otherwise they are logged
    as warnings, and undeclared endpoints are added as vertices.
    """
    lines = _content_lines(text)
    first = next(lines, None)
    if first is None:
        raise ValidationError("empty graph file")
    lineno, line = first
    key, sep, rest = line.partition(":")
    if not sep or key.strip() != "vertices":
        raise ParseError(lineno, "first line must be 'vertices: <p1> <p2> ...'")
    vertices = _primes(rest.split(), lineno)
    declared = set(vertices)
    edges: dict[tuple[int, int], int] = {}
    for lineno, line in lines:
        src, arrow, dst = line.partition("->")
        if not arrow:
            raise ParseError(lineno, "expected '<p> -> <q>'")
        p, q = _primes([src.strip(), dst.strip()], lineno)
        if p == q:
            raise ParseError(lineno, f"loop ({p}, {q}) is not allowed")
        for end in (p, q):
            if end not in declared:
                if strict:
                    raise ParseError(lineno, f"vertex {end} is not declared")
                log.warning("line %d: vertex %d is not declared; adding it", lineno, end)
                declared.add(end)
        if (p, q) in edges:
            if strict:
                raise ParseError(lineno, f"duplicate edge ({p}, {q}), first on line {edges[p, q]}")
            log.warning("line %d: duplicate edge (%d, %d) ignored", lineno, p, q)
            continue
        edges[p, q] = lineno
    return graph_from(declared, edges)


def render_text(gamma: CriticalGraph, verdict: Verdict, emit_trace: bool) -> str:
    out = []
    if verdict.is_soluble_shemetkov:
        out.append("VERDICT: soluble+Shemetkov")
    else:
        w = verdict.witness
        tag = w.family.value if w.parameter is None else f"{w.family.value}, p={w.parameter}"
        out.append(f"VERDICT: not guaranteed — witness {w.name} ({tag})")
        if len(verdict.witnesses) > 1:
            out.append("witnesses: " + ", ".join(c.name for c in verdict.witnesses))
    out.append(f"candidates checked: {verdict.candidates_checked}")
    if emit_trace:
        steps = [f"Γ: {gamma}"]
        rho_done = False
        for rec in verdict.trace:
            if not rho_done and in_rho_phase(rec.candidate):
                steps.append(f"ρ = {format_set(verdict.rho)}")
                rho_done = True
            steps.append(rec.describe())
        if verdict.reached_rho and not rho_done:
            steps.append(f"ρ = {format_set(verdict.rho)}")
        steps.append("result: " + ("true" if verdict.is_soluble_shemetkov else "false"))
        out.append("trace:")
        out += [f"  {i}. {s}" for i, s in enumerate(steps, start=1)]
    return "\n".join(out) + "\n"


def render_json(gamma: CriticalGraph, verdict: Verdict, emit_trace: bool) -> str:
    payload = {
        "verdict": verdict.is_soluble_shemetkov,
        "witness": verdict.witness.to_dict() if verdict.witness else None,
        "witnesses": [c.to_dict() for c in verdict.witnesses],
        "trace": [r.to_dict() for r in verdict.trace] if emit_trace else [],
        "candidates_checked": verdict.candidates_checked,
        "rho": list(verdict.rho),
        "graph": gamma.to_dict(),
    }
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def run(
    config: RunConfig,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        if config.input_path in (None, "-"):
            text = stdin.read()
        else:
            text = Path(config.input_path).read_text(encoding="utf-8")
        if config.mode == "formation":
            gamma = formation_graph(parse_formation_file(text))
        elif config.mode == "graph":
            gamma = parse_graph_file(text, strict=config.strict)
        else:
            raise ValidationError(f"unknown mode {config.mode!r}")
    except (OSError, UnicodeDecodeError, ValidationError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT

    verdict = decide_graph(gamma, all_witnesses=config.all_witnesses)
    render = render_json if config.output_format == "json" else render_text
    stdout.write(render(gamma, verdict, config.emit_trace))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="shemetkov",
        description="Decide whether a local formation f(p_i) = G_{pi_i} is a formation "
        "of soluble groups with the Shemetkov property.",
    )
    parser.add_argument("--mode", choices=("formation", "graph"), default="formation")
    parser.add_argument("--input", default=None, help="input file (default: stdin)")
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--trace", action="store_true", help="include the check trace")
    parser.add_argument("--all-witnesses", action="store_true",
                        help="keep checking after the first embedded group")
    parser.add_argument("--strict", action="store_true",
                        help="treat graph-file warnings as errors")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="warning: %(message)s", stream=sys.stderr)
    config = RunConfig(
        mode=args.mode,
        input_path=args.input,
        output_format="json" if args.json else "text",
        emit_trace=args.trace,
        all_witnesses=args.all_witnesses,
        strict=args.strict,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
