"""Command line entry point: ``pfpoly <subcommand> --u 1,2,3``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from .core import as_rational
from .ehrhart import NonIntegralError, decomposition, ehrhart_polynomial, volume
from .enumerative import NotSimpleError, h_polynomial
from .polytope import (
    MDPair,
    face_poset,
    f_vector,
    facet_description,
    is_simple,
    is_simplicial_polytope,
    locate_vertex,
    md_pair,
    rays,
    vertex_of,
    vertices,
)
from . import verify

EXIT_OK, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_DISAGREE = 0, 2, 3, 4
ENUM_LIMIT, CHECK_LIMIT = 12, 6


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message, EXIT_INPUT)


def _rationals(text: str) -> list:
    try:
        return [as_rational(x) for x in text.split(",")]
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise CliError(f"cannot parse rational list {text!r}: {exc}", EXIT_INPUT) from None


def _read_u(args) -> tuple:
    try:
        if args.u is not None:
            if args.m is not None or args.d is not None:
                raise CliError("give either --u or --m/--d, not both", EXIT_INPUT)
            return md_pair(_rationals(args.u)).u()
        if args.m is None:
            raise CliError("missing --u (or --m with --d)", EXIT_INPUT)
        m = [int(x) for x in args.m.split(",")]
        d = _rationals(args.d) if args.d else list(range(1, len(m)))
        return MDPair(tuple(m), tuple(d)).u()
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None


def _guard(n: int, limit: int, force: bool, what: str) -> None:
    if n > limit and not force:
        raise CliError(f"{what} refused for n = {n} > {limit}; pass --force to override", EXIT_UNSUPPORTED)


def _s(x) -> str:
    return str(Fraction(x))


def _point(p) -> list:
    return [_s(x) for x in p]


def _jobs(args) -> int:
    raw = args.jobs if args.jobs is not None else os.environ.get("PFPOLY_JOBS", "1")
    try:
        k = int(raw)
    except ValueError:
        raise CliError(f"invalid job count {raw!r}", EXIT_INPUT) from None
    if k < 1:
        raise CliError("job count must be positive", EXIT_INPUT)
    return k


# each handler returns (json payload, csv rows)

def cmd_vertices(u, args):
    _guard(len(u), ENUM_LIMIT, args.force, "vertex enumeration")
    pts = [_point(v) for v in vertices(u, jobs=_jobs(args))]
    return pts, pts


def cmd_facets(u, args):
    ineqs = facet_description(u)
    if not args.all:
        ineqs = [q for q in ineqs if q.facet]
    rows = [q.coeffs + (q.rhs, q.facet) for q in ineqs]
    return [q.to_json() for q in ineqs], [[_s(x) for x in r[:-1]] + [str(r[-1]).lower()] for r in rows]


def cmd_rays(u, args):
    if len(u) == 1:
        gens = [(-1,), (1,)]
    else:
        gens = rays(u)
    out = [[str(x) for x in g] for g in gens]
    return out, out


def cmd_fvector(u, args):
    f = f_vector(u)
    return {"f": f}, [f]


def cmd_hpoly(u, args):
    h = h_polynomial(u)
    return {"h": h.to_strings()}, [h.to_strings()]


def cmd_ehrhart(u, args):
    E = ehrhart_polynomial(u)
    if args.t is not None:
        if args.t < 0:
            raise CliError("--t must be nonnegative", EXIT_INPUT)
        return {"t": args.t, "count": _s(E(args.t))}, [[args.t, _s(E(args.t))]]
    dec = decomposition(u).to_json()
    payload = {"ehrhart": E.to_strings(), "volume": _s(volume(u)), "decomposition": dec}
    return payload, [E.to_strings()]


def cmd_volume(u, args):
    v = _s(volume(u))
    return {"volume": v}, [[v]]


def cmd_decompose(u, args):
    dec = decomposition(u).to_json()
    return {"decomposition": dec}, [[e["size"], e["y"]] for e in dec]


def cmd_faceposet(u, args):
    _guard(len(u), ENUM_LIMIT, args.force, "face poset enumeration")
    fp = face_poset(u)
    payload = fp.to_json()
    return payload, [[i, str(B), d] for i, (B, d) in enumerate(zip(fp.nodes, fp.dims))]


def cmd_classify(u, args):
    pair = md_pair(u)
    payload = {
        "m": list(pair.m),
        "d": [_s(x) for x in pair.d],
        "simple": is_simple(u),
        "simplicial": is_simplicial_polytope(u),
    }
    row = [" ".join(map(str, pair.m)), " ".join(payload["d"]), str(payload["simple"]).lower(),
           str(payload["simplicial"]).lower()]
    return payload, [row]


def cmd_locate(u, args):
    if args.c is None:
        raise CliError("locate needs --c", EXIT_INPUT)
    c = _rationals(args.c)
    if len(c) != len(u):
        raise CliError(f"--c has {len(c)} entries, expected {len(u)}", EXIT_INPUT)
    B = locate_vertex(u, c)
    v = _point(vertex_of(B, md_pair(u)))
    return {"partition": str(B), "vertex": v}, [[str(B)] + v]


COMMANDS = {
    "vertices": cmd_vertices,
    "facets": cmd_facets,
    "rays": cmd_rays,
    "fvector": cmd_fvector,
    "hpoly": cmd_hpoly,
    "ehrhart": cmd_ehrhart,
    "volume": cmd_volume,
    "decompose": cmd_decompose,
    "faceposet": cmd_faceposet,
    "classify": cmd_classify,
    "locate": cmd_locate,
}


def run_check(args, err) -> tuple:
    level = args.level
    if args.u is not None or args.m is not None:
        u = _read_u(args)
        if level == "full":
            _guard(len(u), CHECK_LIMIT, args.force, "full check")
        cases, found = 1, verify.suite_for_u(u, level)
    else:
        cases, found = verify.suite_all(3 if level == "quick" else 4, level)
    for item in found:
        print("discrepancy: " + json.dumps(item, sort_keys=True), file=err)
    payload = {"level": level, "cases": cases, "discrepancies": len(found), "ok": not found}
    return payload, [[level, cases, len(found)]], (EXIT_DISAGREE if found else EXIT_OK)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--u", help="comma-separated nondecreasing rationals, e.g. 0,1/2,3")
    common.add_argument("--m", help="multiplicity vector m_0,...,m_l")
    common.add_argument("--d", help="data vector d_1,...,d_l (defaults to 1,...,l)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--jobs", help="worker processes (env PFPOLY_JOBS as fallback)")
    common.add_argument("--force", action="store_true", help="lift the size guards")

    parser = _Parser(prog="pfpoly", description="Exact data for parking function polytopes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "ehrhart":
            p.add_argument("--t", type=int, help="evaluate at a single dilation factor")
        if name == "locate":
            p.add_argument("--c", help="comma-separated objective vector")
        if name == "facets":
            p.add_argument("--all", action="store_true", help="include redundant inequalities")
    p = sub.add_parser("check", parents=[common])
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    return parser


def _emit(payload, rows, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
        return
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    out.write(buf.getvalue())


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "check":
            payload, rows, code = run_check(args, err)
        else:
            u = _read_u(args)
            payload, rows = COMMANDS[args.command](u, args)
            code = EXIT_OK
    except CliError as exc:
        print(f"error: {exc}", file=err)
        return exc.code
    except (NotSimpleError, NonIntegralError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_UNSUPPORTED
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    _emit(payload, rows, args.format, out)
    return code


def main() -> None:
    sys.exit(run())
