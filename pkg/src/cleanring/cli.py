"""Command-line interface.

Exit codes: 0 all checks pass, 1 a mathematical check failed or the input
is outside the domain, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import finite_ring
from .fields import QQ, Field, parse_field
from .laurent import (
    DEFAULT_PRECISION,
    FieldBase,
    NotAUnitError,
    parse_base,
    parse_series,
    random_series,
    two_unit_decompose,
)
from .operators import ProbeSet, apply_operator, parse_word, verify_main_proposition
from .parser import ParseError, format_poly, format_ratfunc, parse_ratfunc
from .ratfunc import NotLocalError, split, to_local

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    field: Field = QQ
    seed: int = 0
    probe_count: int = 20
    budget: int = finite_ring.DEFAULT_BUDGET
    precision: int = DEFAULT_PRECISION
    json: bool = False
    strict: bool = False

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        return cls(args.field, args.seed, args.probes, args.budget, args.precision, args.json, args.strict)


class UsageError(Exception):
    pass


def _field_arg(text: str) -> Field:
    try:
        return parse_field(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _common_flags(parser: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--field", type=_field_arg, default=d(QQ), help="Q or gf<p> (default Q)")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for random probes/series")
    parser.add_argument("--probes", type=_positive, default=d(20), help="number of random probes")
    parser.add_argument("--budget", type=_positive, default=d(finite_ring.DEFAULT_BUDGET),
                        help="maximum ring size for enumeration")
    parser.add_argument("--precision", type=_positive, default=d(DEFAULT_PRECISION),
                        help="Laurent series precision")
    parser.add_argument("--json", action="store_true", default=d(False), help="emit JSON")
    parser.add_argument("--strict", action="store_true", default=d(False), help="count skipped checks as failures")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cleanring", description=__doc__.splitlines()[0], allow_abbrev=False)
    _common_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    _common_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], allow_abbrev=False, help="verify x y = 1, y x != 1 and strong cleanness")
    p.add_argument("target", choices=["main"])

    p = sub.add_parser("split", parents=[common], allow_abbrev=False, help="split a local element into polynomial + proper parts")
    p.add_argument("expr")

    p = sub.add_parser("apply", parents=[common], allow_abbrev=False, help="apply a word in y x e iy1 ixe to an element")
    p.add_argument("word")
    p.add_argument("expr")

    p = sub.add_parser("finite", parents=[common], allow_abbrev=False, help="classify M_n(GF(p)) exhaustively")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--csv", metavar="PATH", help="write per-element CSV")
    p.add_argument("--out", metavar="PATH", help="write full JSON report")

    p = sub.add_parser("laurent", parents=[common], allow_abbrev=False, help="write a Laurent series as a sum of two commuting units")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--series")
    src.add_argument("--random", action="store_true")
    p.add_argument("--base", help="Q, gf<p> or m<n>gf<p>; defaults to --field")
    return parser


def _emit(cfg: RunConfig, payload: dict, text: str):
    if cfg.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _parse_local(expr: str, field: Field):
    try:
        f = parse_ratfunc(expr, field)
    except (ParseError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc
    return to_local(f)


def cmd_verify_main(cfg: RunConfig) -> int:
    probes = ProbeSet.canonical(cfg.field, cfg.seed, cfg.probe_count)
    report = verify_main_proposition(probes)
    _emit(cfg, report.to_dict() | {"strict": cfg.strict}, report.format_table())
    return EXIT_OK if report.passed(strict=cfg.strict) else EXIT_FAIL


def cmd_split(expr: str, cfg: RunConfig) -> int:
    f = _parse_local(expr, cfg.field)
    parts = split(f)
    v0, v1 = format_poly(parts.v0), format_ratfunc(parts.v1)
    _emit(cfg, {"input": format_ratfunc(f), "v0": v0, "v1": v1}, f"v0 = {v0}\nv1 = {v1}")
    return EXIT_OK


def cmd_apply(word: str, expr: str, cfg: RunConfig) -> int:
    try:
        op = parse_word(word)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    f = _parse_local(expr, cfg.field)
    out = format_ratfunc(apply_operator(op, f))
    _emit(cfg, {"word": word, "input": format_ratfunc(f), "output": out}, out)
    return EXIT_OK


def cmd_finite(n: int, p: int, cfg: RunConfig, csv_path=None, out_path=None) -> int:
    report = finite_ring.classify_ring(n, p, cfg.budget)
    if csv_path:
        with open(csv_path, "w", newline="") as fh:
            fh.write(report.to_csv())
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(report.to_json())
    s = report.summary()
    lines = [f"{s['ring']}: {s['size']} elements"]
    for key in ("all_clean", "all_strongly_clean", "uniquely_strongly_clean", "dedekind_finite"):
        lines.append(f"  {key:<24} {str(s[key]).lower()}")
    for rec in report.non_unique():
        ws = finite_ring.strongly_clean_decompositions(rec.element, cfg.budget)
        shown = ", ".join(f"{w.idempotent} + {w.unit}" for w in ws)
        lines.append(f"  {rec.element}: {rec.strong_count} strongly clean decompositions: {shown}")
    _emit(cfg, report.to_dict(), "\n".join(lines))
    return EXIT_OK


def cmd_laurent(cfg: RunConfig, series: str | None = None, base_text: str | None = None) -> int:
    try:
        base = parse_base(base_text) if base_text else FieldBase(cfg.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if series is None:
        x = random_series(base, random.Random(cfg.seed), cfg.precision)
    else:
        try:
            x = parse_series(series, base, cfg.precision)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(str(exc)) from exc
    d = two_unit_decompose(x)
    checks = d.checks()
    lines = [f"x  = {d.x}", f"N  = {d.N}", f"u  = {d.u}", f"u' = {d.u2}"]
    lines += [f"  {name:<8} {'PASS' if ok else 'FAIL'}" for name, ok in checks.items()]
    _emit(cfg, d.to_dict() | {"base": base.name}, "\n".join(lines))
    return EXIT_OK if all(checks.values()) else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig.from_args(args)
    try:
        if args.command == "verify":
            return cmd_verify_main(cfg)
        if args.command == "split":
            return cmd_split(args.expr, cfg)
        if args.command == "apply":
            return cmd_apply(args.word, args.expr, cfg)
        if args.command == "finite":
            return cmd_finite(args.n, args.p, cfg, args.csv, args.out)
        if args.command == "laurent":
            return cmd_laurent(cfg, None if args.random else args.series, args.base)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotLocalError, finite_ring.BudgetExceeded, NotAUnitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        # e.g. a non-prime --p
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser.error(f"unknown command {args.command}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
