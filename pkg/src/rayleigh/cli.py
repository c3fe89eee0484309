"""Command-line front end.

Exit codes: 0 success (HOLDS, CERTIFIED or a plain command), 1 VIOLATED,
2 NO_VIOLATION_FOUND, 3 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import analysis as an
from . import catalog, mtr
from .errors import MatroidError
from .graphic import effective_conductance, square_certificate
from .matroid import dual, matroid_minor, parallel_expand, profile, two_sum
from .poly import format_poly, parse_assignment
from .report import POSITIVE, REAL, PropertyReport, SampleDomain, Verdict

EXIT = {Verdict.HOLDS: 0, Verdict.CERTIFIED: 0, Verdict.VIOLATED: 1, Verdict.NO_VIOLATION_FOUND: 2}
USAGE_ERROR = 3

SAMPLING = {"rayleigh-sample", "strong-sample", "triple", "hpp-spot", "indep-pairs"}
PROPERTIES = ["negcorr", "balanced", "rayleigh-coeff", "rayleigh-sample", "strong-sample",
              "triple", "rz", "lc", "hpp-spot", "indep-pairs"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _load(source: str) -> mtr.MtrDocument:
    """A path to an .mtr file, or ``catalog:NAME`` for a built-in entry."""
    if source.startswith("catalog:"):
        name = source.split(":", 1)[1]
        M = catalog.get(name)
        try:
            G = catalog.get_graph(name)
        except MatroidError:
            G = None
        return mtr.MtrDocument(M.name, M.labels, "catalog", M, G)
    return mtr.load(source)


def _labels(text: str | None) -> list[str]:
    return [x for x in (text or "").split(",") if x]


def _table(rows: list[list[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _witness_cell(w: dict) -> list[str]:
    what = w.get("pair") or w.get("triple") or w.get("subset") or w.get("minor") or ""
    if isinstance(what, dict):
        what = f"contract {{{','.join(what['contract'])}}} delete {{{','.join(what['delete'])}}}"
    elif isinstance(what, list):
        what = "{" + ",".join(",".join(x) if isinstance(x, list) else x for x in what) + "}"
    extra = w.get("value") or w.get("polynomial") or ""
    point = w.get("assignment")
    pt = " ".join(f"{k}={v}" for k, v in point.items()) if point else ""
    if "minor" in w:
        what += f" pair {{{','.join(w['pair'])}}}"
    return [what, extra, pt]


def render_report(rep: PropertyReport) -> str:
    head = [["property", rep.property], ["verdict", rep.verdict.value],
            ["matroid", rep.matroid_name or "-"]]
    head += [[k, json.dumps(v) if not isinstance(v, str) else v] for k, v in rep.parameters.items()]
    head += [[f"work.{k}", str(v)] for k, v in rep.work.items()]
    out = [_table(head)]
    if rep.witnesses:
        out.append("")
        out.append(_table([["witness", "value", "assignment"]] + [_witness_cell(w) for w in rep.witnesses]))
    for note in rep.notes:
        out.append(f"note: {note}")
    if rep.certificate:
        out.append(f"certificate: {rep.certificate}")
    return "\n".join(out)


def _emit(args, rep: PropertyReport) -> int:
    print(rep.to_json(args.timing) if args.json else render_report(rep))
    return EXIT[rep.verdict]


# subcommands

def cmd_info(args) -> int:
    doc = _load(args.file)
    prof = profile(doc.matroid)
    if args.json:
        print(json.dumps(prof, indent=2))
    else:
        print(_table([[k, ", ".join(v) if isinstance(v, (list, tuple)) else str(v)] for k, v in prof.items()]))
    return 0


def cmd_delta(args) -> int:
    M = _load(args.file).matroid
    p = an.rayleigh_diff(M, args.e, args.f)
    if args.at:
        point = parse_assignment(args.at)
        p = p.substitute({k: v for k, v in point.items() if k in p.labels})
        unknown = set(point) - set(M.labels)
        if unknown:
            raise MatroidError(f"unknown elements {sorted(unknown)}")
    print(p.constant_value() if p.is_constant() else format_poly(p))
    return 0


def cmd_check(args) -> int:
    M = _load(args.file).matroid
    prop = args.property
    if prop in SAMPLING and args.seed is None:
        raise UsageError(f"--seed is required for {prop}")
    seed = args.seed
    inject = [parse_assignment(a) for a in args.inject or []]
    if prop == "negcorr":
        rep = an.negative_correlation_check(M)
    elif prop == "balanced":
        rep = an.balanced_check(M)
    elif prop == "rayleigh-coeff":
        rep = an.coefficient_nonneg_check(M)
    elif prop in ("rayleigh-sample", "strong-sample"):
        mode = POSITIVE if prop == "rayleigh-sample" else REAL
        rep = an.rayleigh_sample_check(M, SampleDomain(mode, args.bound), args.samples, seed, inject)
    elif prop == "triple":
        rep = an.triple_condition_check(M, args.mode, args.samples, seed, inject, args.bound)
    elif prop in ("rz", "lc"):
        a = parse_assignment(args.at) if args.at else None
        rep = an.rz_lc_check(M, args.m, a, prop.upper())
    elif prop == "hpp-spot":
        rep = an.hpp_spot_check(M, args.samples, seed, args.bound)
    else:
        rep = an.independent_pair_check(M, args.samples, seed, args.bound, inject)
    return _emit(args, rep)


def cmd_op(args) -> int:
    M = _load(args.file).matroid
    if args.op == "dual":
        out = dual(M)
    elif args.op in ("contract", "delete"):
        S = _labels(args.set)
        out = matroid_minor(M, S, ()) if args.op == "contract" else matroid_minor(M, (), S)
    elif args.op == "2sum":
        if not (args.other and args.g1 and args.g2):
            raise UsageError("2sum needs a second file and --g1/--g2")
        out = two_sum(M, _load(args.other).matroid, args.g1, args.g2)
    else:
        if not args.mult:
            raise UsageError("expand needs --mult")
        if "=" in args.mult:
            mult = {k: int(v) for k, v in (x.split("=") for x in _labels(args.mult))}
        else:
            mult = [int(x) for x in _labels(args.mult)]
        out = parallel_expand(M, mult)
    sys.stdout.write(mtr.dump_matroid(out))
    return 0


def cmd_graph(args) -> int:
    doc = _load(args.file)
    if doc.graph is None:
        raise MatroidError("input has no graph section")
    if args.action == "conductance":
        if not (args.a and args.b):
            raise UsageError("conductance needs -a and -b")
        y = parse_assignment(args.at) if args.at else {}
        print(effective_conductance(doc.graph, args.a, args.b, y))
        return 0
    if not (args.e and args.f):
        raise UsageError("certificate needs -e and -f")
    G = doc.graph.reversed(_labels(args.reverse)) if args.reverse else doc.graph
    cert = square_certificate(G, args.e, args.f)
    if args.json:
        print(json.dumps({"P": format_poly(cert.P), "verified": cert.verified}, indent=2))
    else:
        print(f"P        {format_poly(cert.P)}\nverified {'true' if cert.verified else 'false'}")
    return 0 if cert.verified else 1


def cmd_catalog(args) -> int:
    if not args.name:
        rows = [[e.name + (f"({e.params})" if e.params else ""), e.description]
                for e in catalog.ENTRIES.values()]
        print(_table(rows))
        return 0
    M = catalog.get(args.name)
    try:
        G = catalog.get_graph(args.name)
    except MatroidError:
        G = None
    sys.stdout.write(mtr.dump_graph(G, M.name) if G is not None and args.graph else mtr.dump_matroid(M))
    return 0


def cmd_paper_verify(args) -> int:
    rep = catalog.paper_verify()
    print(rep.to_json() if args.json else rep.to_text())
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rayleigh", description="Exact checks of correlation properties of matroids.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def source(sp):
        sp.add_argument("file", help=".mtr file, or catalog:NAME")

    sp = sub.add_parser("info", help="rank, size, basis count, loops and coloops")
    source(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("delta", help="Rayleigh difference of a pair")
    source(sp)
    sp.add_argument("-e", required=True)
    sp.add_argument("-f", required=True)
    sp.add_argument("--at", help="assignment label=p/q,...")
    sp.set_defaults(func=cmd_delta)

    sp = sub.add_parser("check", help="run a property check")
    source(sp)
    sp.add_argument("--property", required=True, choices=PROPERTIES)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--bound", type=int, default=100)
    sp.add_argument("--m", type=int, default=2, help="subset size bound for rz/lc")
    sp.add_argument("--at", help="positive point for rz/lc")
    sp.add_argument("--mode", choices=[an.BALANCED_NECESSARY, an.STRONG], default=an.BALANCED_NECESSARY)
    sp.add_argument("--inject", action="append", help="extra point tried before sampling")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--timing", action="store_true", help="include runtime_ms in JSON")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("op", help="structural operations; writes .mtr")
    sp.add_argument("op", choices=["dual", "contract", "delete", "2sum", "expand"])
    source(sp)
    sp.add_argument("other", nargs="?", help="second factor for 2sum")
    sp.add_argument("--set", help="comma-separated labels to contract or delete")
    sp.add_argument("--g1")
    sp.add_argument("--g2")
    sp.add_argument("--mult", help="multiplicities: k1,k2,... or label=k,...")
    sp.set_defaults(func=cmd_op)

    sp = sub.add_parser("graph", help="graph-specific commands")
    sp.add_argument("action", choices=["conductance", "certificate"])
    source(sp)
    sp.add_argument("-a")
    sp.add_argument("-b")
    sp.add_argument("-e")
    sp.add_argument("-f")
    sp.add_argument("--at")
    sp.add_argument("--reverse", help="edges whose orientation is flipped")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("catalog", help="list entries or emit one as .mtr")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--graph", action="store_true", help="emit graphic entries as a graph section")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("paper-verify", help="recompute every golden number")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_paper_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MatroidError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
