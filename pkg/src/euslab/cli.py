"""Command-line front end.

Exit status: 0 on success, 1 when a verification is refuted, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Optional, Sequence

from . import bounds, families, verify
from .graph import Graph, GraphError
from .graph6 import emit_graph6, parse_graph6
from .indices import IndexKind, index_value
from .report import ReportDocument
from .search import EnumFilter, ScanError, default_workers, extremal_scan

FAMILIES = ("cycle", "path", "star", "complete", "tadpole", "h1", "pineapple", "clique-pendants")
FORMULAS = ("h1", "unicyclic-bound", "knp-bound")


class UsageError(Exception):
    pass


def parse_params(text: str) -> dict[str, str]:
    """``"n=7,g=4"`` -> ``{"n": "7", "g": "4"}``; a bare key means ``key=1``."""
    out = {}
    for item in filter(None, (s.strip() for s in (text or "").split(","))):
        key, sep, value = item.partition("=")
        out[key.strip().replace("-", "_")] = value.strip() if sep else "1"
    return out


def _ints(params: dict[str, str], *names: str) -> list[int]:
    missing = [k for k in names if k not in params]
    if missing:
        raise UsageError(f"missing parameter(s): {', '.join(missing)}")
    extra = set(params) - set(names)
    if extra:
        raise UsageError(f"unknown parameter(s): {', '.join(sorted(extra))}")
    try:
        return [int(params[k]) for k in names]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_edge_list(text: str) -> Graph:
    """``n=<N>`` header then one 0-based ``i j`` pair per line; ``#`` starts a comment."""
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if n is not None:
                raise GraphError("duplicate n= header")
            n = int(line[2:])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise GraphError("edge list needs an n=<N> header")
    return Graph.from_edges(n, edges)


def read_graphs(text: str) -> list[Graph]:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    if any(ln.startswith("n=") for ln in lines):
        return [parse_edge_list(text)]
    graphs = [parse_graph6(ln) for ln in lines if ln]
    if not graphs:
        raise GraphError("no graph found in input")
    return graphs


def build_family(family: str, params: dict[str, str]) -> Graph:
    if family == "tadpole":
        return families.tadpole(*_ints(params, "n", "g"))
    if family == "h1":
        n, g, k, l = _ints(params, "n", "g", "k", "l")
        return families.h1(families.H1Params(n, g, k, l))
    if family == "pineapple":
        return families.pineapple(*_ints(params, "n", "p"))
    if family == "clique-pendants":
        if set(params) != {"a"}:
            raise UsageError("clique-pendants takes a=<a1>:<a2>:...")
        try:
            a = [int(x) for x in params["a"].split(":")]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return families.clique_with_pendants(a)
    (n,) = _ints(params, "n")
    return {"cycle": families.cycle, "path": families.path, "star": families.star,
            "complete": families.complete}[family](n)


def evaluate_formula(which: str, params: dict[str, str]) -> float:
    if which == "h1":
        return bounds.eus_h1(*_ints(params, "n", "g", "k", "l"))
    if which == "unicyclic-bound":
        return bounds.unicyclic_min_bound(*_ints(params, "n", "g"))
    return bounds.knp_max_bound(*_ints(params, "n", "p"))


def parse_filter(text: str) -> EnumFilter:
    params = parse_params(text)
    flags = {"connected": "connected", "unicyclic": "unicyclic"}
    numbers = {"girth": "girth", "pendants": "pendant_count", "pendant_count": "pendant_count",
               "max_degree": "max_degree", "edges": "edge_count", "edge_count": "edge_count"}
    kwargs = {}
    for key, value in params.items():
        if key in flags:
            kwargs[flags[key]] = value.lower() not in ("0", "false", "no")
        elif key in numbers:
            try:
                kwargs[numbers[key]] = int(value)
            except ValueError:
                raise UsageError(f"filter {key} needs an integer, got {value!r}") from None
        else:
            raise UsageError(f"unknown filter key {key!r}")
    return EnumFilter(**kwargs)


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    kind = IndexKind(args.index)
    for g in read_graphs(text):
        print(f"{index_value(g, kind):.9f}")
    return 0


def cmd_construct(args) -> int:
    print(emit_graph6(build_family(args.family, parse_params(args.params))))
    return 0


def cmd_formulas(args) -> int:
    print(f"{evaluate_formula(args.which, parse_params(args.params)):.9f}")
    return 0


def cmd_scan(args, argv) -> int:
    filt = parse_filter(args.filter)
    report = extremal_scan(args.n, filt, IndexKind(args.index), args.direction, args.workers)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "filter", "index", "direction", "optimum", "witnesses", "scanned", "matched"])
        d = report.to_dict()
        writer.writerow([d["n"], parse_params_repr(d["filter"]), d["index"], d["direction"],
                         f"{report.optimum:.9f}", " ".join(d["witnesses"]), d["scanned"], d["matched"]])
        _write(buf.getvalue(), args.out)
        return 0
    doc = ReportDocument(command=list(argv), reports=[report.to_dict()])
    _write(doc.to_json(timings=False), args.out)
    return 0


def parse_params_repr(d: dict) -> str:
    return ",".join(f"{k}={int(v) if isinstance(v, bool) else v}" for k, v in d.items())


def cmd_verify(args, argv) -> int:
    if args.max_n > 9:
        raise UsageError("--max-n must be <= 9")
    if args.claim == "all":
        verdicts = verify.run_all(args.max_n, args.workers)
    else:
        verdicts = verify.run_claim(args.claim, args.max_n, args.workers)
    doc = ReportDocument(
        command=list(argv),
        verdicts=[v.to_dict() for v in verdicts],
        timings={v.claim: v.elapsed for v in verdicts},
    )
    _write(doc.to_json(timings=not args.no_timings), args.out)
    for v in verdicts:
        print(f"{v.status.value.upper():9s} {v.claim} {v.reason}".rstrip(), file=sys.stderr)
    return 1 if doc.refuted else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="euslab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="index value of graphs read from a file")
    c.add_argument("--index", choices=[k.value for k in IndexKind], default="eus")
    c.add_argument("--in", dest="input", default="-", help="edge-list or graph6 file ('-' = stdin)")

    c = sub.add_parser("construct", help="print a family member as graph6")
    c.add_argument("--family", choices=FAMILIES, required=True)
    c.add_argument("--params", default="")

    c = sub.add_parser("scan", help="brute-force extremal scan")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--filter", default="")
    c.add_argument("--index", choices=[k.value for k in IndexKind], default="eus")
    c.add_argument("--direction", choices=("min", "max"), default="min")
    c.add_argument("--workers", type=int, default=None)
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("--out")

    c = sub.add_parser("verify", help="check the extremal results by exhaustive scans")
    c.add_argument("--claim", choices=("all",) + verify.CLAIMS, default="all")
    c.add_argument("--max-n", type=int, default=7)
    c.add_argument("--workers", type=int, default=None)
    c.add_argument("--out")
    c.add_argument("--no-timings", action="store_true", help="omit timings for byte-stable output")

    c = sub.add_parser("formulas", help="evaluate a closed-form value")
    c.add_argument("--which", choices=FORMULAS, required=True)
    c.add_argument("--params", default="")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "workers", None) is None and hasattr(args, "workers"):
        args.workers = default_workers()
    try:
        if args.command == "compute":
            return cmd_compute(args)
        if args.command == "construct":
            return cmd_construct(args)
        if args.command == "formulas":
            return cmd_formulas(args)
        if args.command == "scan":
            return cmd_scan(args, argv)
        return cmd_verify(args, argv)
    except (UsageError, GraphError, ScanError, ValueError, OSError) as exc:
        print(f"euslab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
