"""Command-line interface.

Subcommands: series (closed-form generating functions), oracle (exhaustive
counts), dirichlet (zeta prefixes), verify (named verification suites), and
conj (conjugacy-class counts).  Reports echo the resolved parameters and are
bit-for-bit reproducible apart from the top-level elapsed_ms field, which
lives outside the comparison payload.  Exit codes: 0 success, 1 verification
mismatch, 2 usage or infeasible-budget error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import dirichlet as dd
from . import formulas as fb
from . import verify as vf
from .oracle import BudgetExceededError, count_matrix_points, matrix_point_series
from .oracle.endomorphisms import PGroupModule, conj_classes_aut
from .partitions import Partition
from .series import TruncSeries


def _series_tsv(series: TruncSeries) -> str:
    lines = []
    for exps, c in series.terms():
        degree = ",".join(str(e) for e in exps)
        lines.append(f"{degree}\t{c.numerator}\t{c.denominator}")
    return "\n".join(lines)


def _dirichlet_tsv(series: dd.DirichletSeries) -> str:
    lines = []
    for n in range(1, series.length + 1):
        c = series[n]
        lines.append(f"{n}\t{c.numerator}\t{c.denominator}")
    return "\n".join(lines)


def _emit(args, command: dict, result, checks=None, started=None) -> int:
    elapsed_ms = round((time.monotonic() - started) * 1000.0, 3) if started else None
    failed = [c for c in (checks or []) if not c.passed]
    if args.format == "json":
        report = {"command": command, "result": result}
        if checks is not None:
            report["checks"] = [c.to_json_dict() for c in checks]
            report["verdict"] = "pass" if not failed else "fail"
        if elapsed_ms is not None:
            report["elapsed_ms"] = elapsed_ms
        print(json.dumps(report))
    else:
        if isinstance(result, str):
            print(result)
        else:
            print(json.dumps(result))
        for c in checks or []:
            status = "pass" if c.passed else "FAIL"
            print(f"{status}\t{c.name}\t{c.lhs}\t{c.rhs}")
    return 1 if failed else 0


def _cmd_series(args) -> int:
    started = time.monotonic()
    command = {
        "subcommand": "series",
        "id": args.id,
        "q": args.q,
        "b": args.b,
        "trunc": args.trunc,
        "u_trunc": args.u_trunc,
        "q_trunc": args.q_trunc,
        "format": args.format,
    }
    if args.id in fb.SPECIALIZED_FORMULAS:
        if args.q is None:
            raise SystemExit2("--q is required for this formula")
        series = fb.SPECIALIZED_FORMULAS[args.id](
            Fraction(args.q), args.trunc, b=args.b if args.b else 1
        )
    elif args.id in fb.FORMAL_FORMULAS:
        series = fb.FORMAL_FORMULAS[args.id](
            args.trunc, args.u_trunc or args.trunc, args.q_trunc or 20
        )
    else:
        known = sorted(fb.SPECIALIZED_FORMULAS) + sorted(fb.FORMAL_FORMULAS)
        raise SystemExit2(f"unknown formula id {args.id!r}; known ids: {known}")
    payload = series.to_json_dict() if args.format == "json" else _series_tsv(series)
    return _emit(args, command, payload, started=started)


def _cmd_oracle(args) -> int:
    started = time.monotonic()
    command = {
        "subcommand": "oracle",
        "relations": args.relations,
        "q": args.q,
        "n": args.n,
        "nmax": args.nmax,
        "shards": args.shards,
        "budget": args.budget,
        "format": args.format,
    }
    if (args.n is None) == (args.nmax is None):
        raise SystemExit2("exactly one of --n or --nmax is required")
    if args.n is not None:
        res = count_matrix_points(
            args.relations, args.n, args.q, shards=args.shards, budget=args.budget
        )
        payload = res.to_json_dict(
            "count_matrix_points",
            {"relations": args.relations, "n": args.n, "q": args.q},
        )
        if args.format == "tsv":
            payload = f"{args.n}\t{res.value}\t1"
        return _emit(args, command, payload, started=started)
    series = matrix_point_series(
        args.relations, args.q, args.nmax, shards=args.shards, budget=args.budget
    )
    payload = series.to_json_dict() if args.format == "json" else _series_tsv(series)
    return _emit(args, command, payload, started=started)


_RINGS = {
    "Z": lambda args: dd.ring_Z(),
    "Zp": lambda args: dd.ring_Zp(_require(args.p, "--p")),
    "FqPoly": lambda args: dd.ring_FqPoly(_require(args.qparam, "--qparam")),
    "FqPowerSeries": lambda args: dd.ring_FqPowerSeries(_require(args.qparam, "--qparam")),
}


def _require(value, flag):
    if value is None:
        raise SystemExit2(f"{flag} is required for this ring")
    return value


def _cmd_dirichlet(args) -> int:
    started = time.monotonic()
    command = {
        "subcommand": "dirichlet",
        "which": args.which,
        "ring": args.ring,
        "p": args.p,
        "qparam": args.qparam,
        "length": args.length,
        "k": args.k,
        "format": args.format,
    }
    if args.which == "an-local":
        if args.p is None or args.k is None:
            raise SystemExit2("an-local needs --p and --k")
        value = dd.local_cl_coefficient(args.p, args.k)
        payload = {"value": f"{value.numerator}/{value.denominator}"}
        if args.format == "tsv":
            payload = f"{args.k}\t{value.numerator}\t{value.denominator}"
        return _emit(args, command, payload, started=started)
    ring = _RINGS[args.ring](args)
    if args.which == "zeta":
        series = dd.dedekind_zeta(ring, args.length)
    elif args.which == "cl-local":
        series = dd.cohen_lenstra_local_zeta(ring, args.length)
    elif args.which == "cl-poly":
        series = dd.polynomial_ring_cl_zeta(ring, args.length)
    else:
        raise SystemExit2(f"unknown computation {args.which!r}")
    payload = series.to_json_dict() if args.format == "json" else _dirichlet_tsv(series)
    return _emit(args, command, payload, started=started)


def _cmd_verify(args) -> int:
    started = time.monotonic()
    command = {
        "subcommand": "verify",
        "suite": args.suite,
        "q": args.q,
        "b": args.b,
        "nmax": args.nmax,
        "shards": args.shards,
        "budget": args.budget,
        "format": args.format,
    }
    ac_map = {ac.lower(): suite for ac, suite in vf.ACCEPTANCE_ORDER}
    if args.suite == "all":
        names = [suite for _, suite in vf.ACCEPTANCE_ORDER]
    else:
        names = [ac_map.get(args.suite.lower(), args.suite)]
    checks = []
    for name in names:
        kwargs = {}
        if name in ("feit-fine", "fat-line", "nonred-node"):
            if args.q is not None:
                kwargs["q_values"] = (args.q,)
            if args.b is not None and name != "feit-fine":
                kwargs["b_values"] = (args.b,)
            if args.nmax is not None:
                kwargs["n_max"] = args.nmax
            kwargs["shards"] = args.shards
            kwargs["budget"] = args.budget
        elif name in (
            "aut-end",
            "zt-dirichlet",
            "surjection",
            "framing",
            "conjugacy",
            "strategies",
        ):
            kwargs["budget"] = args.budget
        checks += vf.run_suite(name, **kwargs)
    summary = {
        "suites": names,
        "checks": len(checks),
        "failed": sum(1 for c in checks if not c.passed),
    }
    return _emit(args, command, summary, checks=checks, started=started)


def _cmd_conj(args) -> int:
    started = time.monotonic()
    command = {
        "subcommand": "conj",
        "p": args.p,
        "type": args.type,
        "budget": args.budget,
        "format": args.format,
    }
    lam = Partition(int(x) for x in args.type.split(",") if x.strip())
    value = conj_classes_aut(PGroupModule(args.p, lam), budget=args.budget)
    payload = {"classes": value}
    if args.format == "tsv":
        payload = f"{args.type}\t{value}\t1"
    return _emit(args, command, payload, started=started)


class SystemExit2(Exception):
    """Usage-level error, mapped to exit code 2."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clzeta",
        description="Exact Cohen-Lenstra series and brute-force counting oracles",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.add_argument("--shards", type=int, default=1)
        p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("series", help="evaluate a closed-form series by id")
    p.add_argument("--id", required=True)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--trunc", type=int, default=6, help="t truncation order")
    p.add_argument("--u-trunc", type=int, default=None)
    p.add_argument("--q-trunc", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("oracle", help="count matrix points exhaustively")
    p.add_argument("--relations", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("dirichlet", help="Dirichlet series prefixes")
    p.add_argument(
        "--which",
        choices=("zeta", "cl-local", "cl-poly", "an-local"),
        required=True,
    )
    p.add_argument("--ring", choices=tuple(_RINGS), default="Z")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--qparam", type=int, default=None)
    p.add_argument("--length", type=int, default=32)
    p.add_argument("--k", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_dirichlet)

    p = sub.add_parser("verify", help="run a named verification suite")
    suite_choices = (
        ("all",)
        + tuple(sorted(vf.SUITES))
        + tuple(ac.lower() for ac, _ in vf.ACCEPTANCE_ORDER)
    )
    p.add_argument("--suite", required=True, choices=suite_choices)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("conj", help="conjugacy classes of Aut of a module")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--type", required=True, help="partition, e.g. 2,1")
    common(p)
    p.set_defaults(func=_cmd_conj)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
