"""Command-line front end.

    qgzeta spectrum    --family complete-bipartite 2 3
    qgzeta zeta        --graph g.edges --length 1 --s 2 --s -0.5 --s 0.75+1i
    qgzeta energy      --family star 5
    qgzeta determinant --spectrum spec.json --length 2
    qgzeta verify      [--family cycle 5]

Results go to stdout as JSON (default) or CSV; diagnostics go to stderr.
Exit status: 0 success, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import graph as G
from .errors import QGZetaError
from .graph import Graph
from .quantum import (
    TransferredSpectrum,
    casimir_force,
    log_spectral_determinant,
    quantum_zeta,
    quantum_zeta_series,
    spectrum_transfer,
    vacuum_energy,
)
from .spectrum import DEFAULT_ZERO_TOLERANCE, DiscreteSpectrum, eigenvalues
from .verify import graph_checks, run_acceptance

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2

FAMILIES = {
    "complete-bipartite": (2, G.complete_bipartite),
    "star": (1, G.star),
    "cycle": (1, G.cycle),
    "path": (1, G.path),
    "complete": (1, G.complete),
}


class InputError(Exception):
    """Bad user input; the message names the offending flag."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class Source:
    """What the computation runs on: a graph, or a spectrum read back from JSON."""

    spectrum: DiscreteSpectrum
    graph: Graph | None
    bipartite: bool


def parse_complex(text: str) -> complex:
    """Accept "2", "-0.5", "0.75+1i", "1e-3-2.5i" (a trailing j works too)."""
    raw = text.strip()
    if not raw:
        raise ValueError("empty value")
    value = complex(raw.replace("i", "j").replace("J", "j"))
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError(f"{text!r} is not finite")
    return value


def _normalise_argv(argv: Sequence[str]) -> list[str]:
    # "--s -1+2i" would look like an option to argparse; glue the value on
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--s":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--s={nxt}")
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qgzeta", description="Spectral zeta function of equilateral quantum graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "spectrum": "discrete eigenvalues, quantum k values, Betti number, Dirichlet multiplicities",
        "zeta": "spectral zeta function at one or more s",
        "energy": "vacuum (Casimir) energy and force",
        "determinant": "zeta-regularized spectral determinant",
        "verify": "run the numerical acceptance suite (and per-graph checks if a graph is given)",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text, description=text)
        src = p.add_mutually_exclusive_group(required=name != "verify")
        src.add_argument("--graph", metavar="FILE", help="edge-list file ('u v' per line, '#' comments)")
        src.add_argument(
            "--family",
            nargs="+",
            metavar="ARG",
            help="built-in family: complete-bipartite M P | star E | cycle N | path N | complete N",
        )
        if name != "verify":
            src.add_argument("--spectrum", metavar="FILE", help="JSON written by 'qgzeta spectrum'")
        p.add_argument("--length", default="1", metavar="L", help="common edge length (default 1)")
        p.add_argument(
            "--zero-tolerance",
            type=float,
            default=DEFAULT_ZERO_TOLERANCE,
            help="eigenvalues this close to 0 or 2 are treated as exact (default %(default)g)",
        )
        p.add_argument("--format", choices=("json", "csv"), default="json")
        if name == "zeta":
            p.add_argument(
                "--s",
                action="append",
                required=True,
                metavar="S",
                help="evaluation point, real or complex like 0.5+2i (repeatable)",
            )
    return parser


def _family(args: list[str]) -> Graph:
    name, rest = args[0], args[1:]
    if name not in FAMILIES:
        raise InputError(f"--family: unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    arity, build = FAMILIES[name]
    if len(rest) != arity:
        raise InputError(f"--family {name}: expected {arity} integer argument(s), got {len(rest)}")
    try:
        ints = [int(x) for x in rest]
    except ValueError:
        raise InputError(f"--family {name}: arguments must be integers, got {rest}") from None
    try:
        return build(*ints)
    except ValueError as exc:
        raise InputError(f"--family {name}: {exc}") from None


def _spectrum_from_json(path: str, zero_tolerance: float) -> Source:
    try:
        doc = json.loads(Path(path).read_text())
        info = doc["graph"]
        values = [float(row["eigenvalue"]) for row in doc["results"]]
        spec = DiscreteSpectrum.from_eigenvalues(values, int(info["E"]), zero_tolerance)
    except OSError as exc:
        raise InputError(f"--spectrum: cannot read {path}: {exc.strerror}") from None
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"--spectrum: {path} is not a spectrum document: {exc}") from None
    if spec.vertex_count != int(info.get("V", spec.vertex_count)):
        raise InputError(f"--spectrum: {path} lists {spec.vertex_count} eigenvalues but V = {info['V']}")
    return Source(spec, None, bool(info.get("bipartite", spec.kernel_dim_2 > 0)))


def load_source(ns: argparse.Namespace) -> Source | None:
    if not 0.0 < ns.zero_tolerance <= 1e-6:
        raise InputError(f"--zero-tolerance must lie in (0, 1e-6], got {ns.zero_tolerance}")
    if getattr(ns, "spectrum", None):
        return _spectrum_from_json(ns.spectrum, ns.zero_tolerance)
    if ns.graph:
        try:
            g = G.read_edge_list(ns.graph)
        except OSError as exc:
            raise InputError(f"--graph: cannot read {ns.graph}: {exc.strerror}") from None
        except ValueError as exc:
            raise InputError(f"--graph {ns.graph}: {exc}") from None
    elif ns.family:
        g = _family(ns.family)
    else:
        return None
    return Source(eigenvalues(g, ns.zero_tolerance), g, G.is_bipartite(g))


def _length(text: str) -> float:
    try:
        L = float(text)
    except ValueError:
        raise InputError(f"--length: not a number: {text!r}") from None
    if not (L > 0.0 and math.isfinite(L)):
        raise InputError(f"--length must be positive and finite, got {text}")
    return L


def _graph_block(src: Source, ts: TransferredSpectrum) -> dict[str, Any]:
    return {
        "V": ts.vertex_count,
        "E": ts.edge_count,
        "beta": ts.betti,
        "bipartite": src.bipartite,
        "mult_even": ts.mult_even,
        "mult_odd": ts.mult_odd,
    }


def _zeta_row(z) -> dict[str, Any]:
    s = complex(z.s)
    v = complex(z.value)
    return {
        "s_re": s.real,
        "s_im": s.imag,
        "re": v.real,
        "im": v.imag,
        "method": z.method,
        "abs_error_estimate": z.abs_error_estimate,
    }


def _run_zeta(ts: TransferredSpectrum, s_texts: list[str]) -> list[dict[str, Any]]:
    rows = []
    for text in s_texts:
        try:
            s = parse_complex(text)
        except ValueError as exc:
            raise InputError(f"--s {text}: {exc}") from None
        try:
            rows.append(_zeta_row(quantum_zeta(ts, s)))
            if s.real < 0.0:
                rows.append(_zeta_row(quantum_zeta_series(ts, s)))
        except QGZetaError as exc:
            raise InputError(f"--s {text}: {exc}") from None
    return rows


def _emit(doc: dict[str, Any], fmt: str) -> None:
    if fmt == "json":
        # json writes floats with repr, which round-trips every double exactly
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
        return
    rows = doc["results"]
    if not rows:
        return
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: repr(v) if isinstance(v, float) else v for k, v in row.items()})
    sys.stdout.write(buf.getvalue())


def run(ns: argparse.Namespace) -> int:
    L = _length(ns.length)
    src = load_source(ns)
    doc: dict[str, Any] = {"command": ns.command, "graph": None, "L": L, "results": []}

    if ns.command == "verify":
        results = run_acceptance()
        if src is not None:
            if src.graph is None:
                raise InputError("verify needs --graph or --family for per-graph checks")
            ts = spectrum_transfer(src.spectrum, L)
            doc["graph"] = _graph_block(src, ts)
            results += graph_checks(src.graph, L)
        for r in results:
            print(r.line(), file=sys.stderr)
        failed = sum(not r.passed for r in results)
        print(f"{len(results) - failed} passed, {failed} failed", file=sys.stderr)
        doc["results"] = [
            {"name": r.name, "passed": r.passed, "measured": r.measured, "tolerance": r.tolerance, "detail": r.detail}
            for r in results
        ]
        doc["summary"] = {"passed": len(results) - failed, "failed": failed}
        _emit(doc, ns.format)
        return EXIT_VERIFY if failed else EXIT_OK

    assert src is not None
    try:
        ts = spectrum_transfer(src.spectrum, L)
    except QGZetaError as exc:
        raise InputError(f"--spectrum: {exc}") from None
    doc["graph"] = _graph_block(src, ts)

    if ns.command == "spectrum":
        doc["zero_tolerance"] = src.spectrum.zero_tolerance
        doc["results"] = [
            {"index": i, "eigenvalue": lam, "k": k, "phase": a}
            for i, (lam, k, a) in enumerate(zip(src.spectrum.eigenvalues, ts.k_values, ts.phases))
        ]
    elif ns.command == "zeta":
        doc["results"] = _run_zeta(ts, ns.s)
    elif ns.command == "energy":
        doc["results"] = [{"vacuum_energy": vacuum_energy(ts), "casimir_force": casimir_force(ts)}]
    elif ns.command == "determinant":
        try:
            log_det = log_spectral_determinant(ts)
        except ArithmeticError as exc:
            raise InputError(f"determinant: {exc}") from None
        doc["results"] = [{"spectral_determinant": math.exp(log_det), "log_spectral_determinant": log_det}]
    _emit(doc, ns.format)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(_normalise_argv(sys.argv[1:] if argv is None else argv))
    try:
        return run(ns)
    except InputError as exc:
        print(f"qgzeta: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except QGZetaError as exc:
        print(f"qgzeta: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
