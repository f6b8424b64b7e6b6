"""Command-line front end: ``stardom {spectrum,domination,star-set,verify,sweep}``.

Exit status: 0 when every report holds (or is skipped), 1 on usage or input
errors, 2 when at least one check is violated.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from .algebraic import AlgebraicNumber
from .domination import TOK_READINGS, DominationVariant, domination_number
from .graph import (
    Graph,
    GraphFamily,
    MAX_ENUMERATION_ORDER,
    GraphFormatError,
    encode_graph6,
    enumerate_connected,
    generate,
    is_connected,
    parse_edge_list,
    parse_graph6,
    read_graph6_lines,
)
from .spectra import MatrixKind, spectrum
from .starsets import find_connected_star_complement, find_star_set
from .verifier import CSV_COLUMNS, DEFAULT_CHECKS, Census, Check, Status, sweep

EXIT_OK, EXIT_USAGE, EXIT_VIOLATED = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    graph6: str | None = None
    file: str | None = None
    family: str | None = None
    enumerate: tuple[int, int] | None = None
    matrix: MatrixKind = MatrixKind.ADJACENCY
    p_values: tuple[int, ...] = (1, 2, 3)
    checks: tuple[Check, ...] = DEFAULT_CHECKS
    out: str | None = None
    format: str = "csv"
    shard: tuple[int, int] = (0, 1)
    keep_going: bool = False
    jobs: int = 1
    variant: str = "domination"
    eigenvalue: str | None = None
    connected: bool = False
    seed: tuple[int, ...] | None = None
    census: str | None = None
    tok_reading: str = "conservative"


# ---------------------------------------------------------------- argument parsing

def _order_range(text: str) -> tuple[int, int]:
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return int(lo), int(hi)
        n = int(text)
        return n, n
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n or lo-hi, got {text!r}") from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError("p values must be positive integers")
    return vals


def _checks(text: str) -> tuple[Check, ...]:
    if text.strip().lower() == "all":
        return DEFAULT_CHECKS
    try:
        return tuple(Check.parse(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _shard(text: str) -> tuple[int, int]:
    try:
        k, m = (int(t) for t in text.split("/"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected k/m, got {text!r}") from None
    if not 0 <= k < m:
        raise argparse.ArgumentTypeError(f"shard index must satisfy 0 <= k < m, got {text}")
    return k, m


def _vertex_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stardom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def add_input(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("-g", dest="graph6", metavar="GRAPH6", help="a single graph6 record")
        src.add_argument("--file", help="graph6 lines or an edge list ('-' for stdin)")
        src.add_argument("--family", help="builtin family: K:n, K:r,s, C:n, P:n, S:n")
        src.add_argument("--enumerate", type=_order_range, metavar="N|LO-HI",
                         help="all labelled connected graphs of the given order(s)")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--format", choices=("csv", "json", "text"), default=None)

    p = sub.add_parser("spectrum", help="exact spectrum with multiplicities")
    add_input(p)
    p.add_argument("--matrix", type=MatrixKind, default=MatrixKind.ADJACENCY,
                   choices=list(MatrixKind), metavar="adjacency|laplacian")

    p = sub.add_parser("domination", help="gamma, gamma_t or gamma_p with a witness")
    add_input(p)
    p.add_argument("--variant", choices=("domination", "total", "p"), default="domination")
    p.add_argument("--p", dest="p_values", type=_int_list, default=(1,))

    p = sub.add_parser("star-set", help="star sets and star complements per eigenvalue")
    add_input(p)
    p.add_argument("--eigenvalue", help="restrict to this rational eigenvalue (e.g. -1, 0)")
    p.add_argument("--connected", action="store_true", help="grow a connected star complement")
    p.add_argument("--seed", type=_vertex_list, help="vertices the connected complement must contain")

    for name, helptext in (("verify", "run theorem checks on the given graphs"),
                           ("sweep", "run theorem checks over a stream with a census")):
        p = sub.add_parser(name, help=helptext)
        add_input(p)
        p.add_argument("--checks", type=_checks, default=DEFAULT_CHECKS,
                       help="comma-separated: " + ",".join(c.value for c in Check))
        p.add_argument("--p", dest="p_values", type=_int_list, default=(1, 2, 3))
        p.add_argument("--shard", type=_shard, default=(0, 1), metavar="k/m")
        p.add_argument("--keep-going", action="store_true")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--census", help="write the equality census as JSON here")
        p.add_argument("--tok-reading", choices=TOK_READINGS, default="conservative",
                       help="reading of the private-neighbour hypothesis for thm44tok")
        p.add_argument("--matrix", type=MatrixKind, default=MatrixKind.ADJACENCY,
                       choices=list(MatrixKind), metavar="adjacency|laplacian",
                       help="accepted for symmetry; checks pick their own matrices")
    return parser


def parse_config(argv: list[str]) -> CliConfig:
    ns = build_parser().parse_args(argv)
    cfg = CliConfig(subcommand=ns.subcommand)
    for key, value in vars(ns).items():
        if value is not None and hasattr(cfg, key) and key != "subcommand":
            setattr(cfg, key, value)
    if ns.format is None:
        cfg.format = "csv" if ns.subcommand in ("verify", "sweep") else "text"
    if cfg.subcommand in ("verify", "sweep") and cfg.format == "text":
        raise UsageError("verify/sweep write csv or json")
    if cfg.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    return cfg


# ---------------------------------------------------------------- graph sources

def _open_input(path: str):
    if path == "-":
        return sys.stdin
    try:
        return open(path, encoding="ascii", errors="replace")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _read_file(handle) -> Iterator[Graph]:
    """Graphs from graph6 lines, or one graph if the first line is a bare vertex count."""
    with handle:
        lines = iter(handle)
        first = []
        for line in lines:
            first.append(line)
            if line.strip():
                break
        head = first[-1].strip() if first else ""
        if head.isdigit():
            yield parse_edge_list("".join(itertools.chain(first, lines)))
            return
        for _, g in read_graph6_lines(itertools.chain(first, lines)):
            yield g


def graph_source(cfg: CliConfig) -> Iterator[Graph]:
    """The configured input stream, restricted to shard ``k`` of ``m``.

    Single-graph inputs are parsed immediately so errors surface before output starts.
    """
    k, m = cfg.shard
    if cfg.enumerate is not None:
        lo, hi = cfg.enumerate
        if not 1 <= lo <= hi:
            raise UsageError(f"bad order range {lo}-{hi}")
        if hi > MAX_ENUMERATION_ORDER:
            raise UsageError(f"built-in enumeration stops at n = {MAX_ENUMERATION_ORDER}; "
                             "pass larger graphs as a graph6 file")
        return itertools.chain.from_iterable(
            enumerate_connected(n, (k, m)) for n in range(lo, hi + 1))
    if cfg.graph6 is not None:
        graphs = iter([parse_graph6(cfg.graph6)])
    elif cfg.family is not None:
        try:
            graphs = iter([generate(GraphFamily.parse(cfg.family))])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        graphs = _read_file(_open_input(cfg.file))
    return (g for i, g in enumerate(graphs) if i % m == k)


# ---------------------------------------------------------------- subcommands

def _pick_eigenvalues(g: Graph, text: str | None) -> list[AlgebraicNumber]:
    eigs = spectrum(g).eigenvalues
    if text is None:
        return eigs
    try:
        q = Fraction(text)
    except ValueError:
        raise UsageError(f"--eigenvalue takes a rational number, got {text!r}") from None
    chosen = [lam for lam in eigs if lam == q]
    if not chosen:
        raise UsageError(f"{text} is not an eigenvalue of {encode_graph6(g)}")
    return chosen


def _emit_simple(cfg: CliConfig, out, graphs: Iterator[Graph]) -> int:
    records = []
    for g in graphs:
        g6 = encode_graph6(g)
        if cfg.subcommand == "spectrum":
            spec = spectrum(g, cfg.matrix)
            rec = {"graph6": g6, "matrix": cfg.matrix.value, "s": spec.s,
                   "eigenvalues": [{"lambda": lam.display(), "approx": lam.approx,
                                    "mult": m} for lam, m in spec.eigs]}
            text = f"{g6} {cfg.matrix.value} s={spec.s} {spec}"
        elif cfg.subcommand == "domination":
            if not is_connected(g):
                raise UsageError(f"{g6} is disconnected; domination needs a connected graph")
            if cfg.variant == "p":
                variants = [DominationVariant.pdom(p) for p in cfg.p_values]
            else:
                variants = [DominationVariant(cfg.variant)]
            certs = [domination_number(g, v) for v in variants]
            rec = {"graph6": g6, "certificates": [c.to_dict() for c in certs]}
            text = "\n".join(
                f"{g6} {c.variant.name}={'infinite' if c.infinite else c.value} "
                f"witness={list(c.witness) if c.witness is not None else None}" for c in certs)
        else:
            if not is_connected(g):
                raise UsageError(f"{g6} is disconnected; star complements need a connected graph")
            parts = []
            for lam in _pick_eigenvalues(g, cfg.eigenvalue):
                if cfg.connected:
                    try:
                        part = find_connected_star_complement(g, lam, cfg.seed)
                    except ValueError as exc:
                        raise UsageError(str(exc)) from None
                else:
                    part = find_star_set(g, lam)
                parts.append(part.to_dict(g))
            rec = {"graph6": g6, "partitions": parts}
            text = "\n".join(f"{g6} lambda={d['lambda']} star_set={d['star_set']} "
                             f"complement={d['complement']} connected={d['complement_connected']}"
                             for d in parts)
        if cfg.format == "json":
            records.append(rec)
        elif cfg.format == "csv":
            raise UsageError(f"{cfg.subcommand} writes text or json")
        else:
            print(text, file=out)
    if cfg.format == "json":
        json.dump(records, out, indent=1)
        out.write("\n")
    return EXIT_OK


def _emit_reports(cfg: CliConfig, out, graphs: Iterator[Graph]) -> int:
    census = Census()
    violated = False
    stream = sweep(graphs, cfg.checks, cfg.p_values, census,
                   keep_going=cfg.keep_going, jobs=cfg.jobs, tok_reading=cfg.tok_reading)
    if cfg.format == "csv":
        writer = csv.DictWriter(out, CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for rep in stream:
            violated |= rep.status == Status.VIOLATED
            writer.writerows(rep.csv_rows())
    else:
        out.write("[")
        first = True
        for rep in stream:
            violated |= rep.status == Status.VIOLATED
            out.write(("\n" if first else ",\n") + json.dumps(rep.to_dict()))
            first = False
        out.write("\n]\n")
    for line in census.summary_lines():
        print(line, file=sys.stderr)
    if cfg.census:
        with open(cfg.census, "w") as fh:
            json.dump(census.to_dict(), fh, indent=1)
            fh.write("\n")
    if violated:
        print("violations found" + ("" if cfg.keep_going else "; stopped at the first"),
              file=sys.stderr)
    return EXIT_VIOLATED if violated else EXIT_OK


def run(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = parse_config(argv)
        out = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
        try:
            graphs = graph_source(cfg)
            if cfg.subcommand in ("verify", "sweep"):
                return _emit_reports(cfg, out, graphs)
            return _emit_simple(cfg, out, graphs)
        finally:
            if cfg.out:
                out.close()
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphFormatError as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
