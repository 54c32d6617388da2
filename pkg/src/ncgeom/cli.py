"""Command line entry point.

    ncgeom verify torus [--params r_uu=EXPR ...]
    ncgeom verify sphere [--h111 E --h121 E --h211 E --h221 E] [--case a|b|c|d]
    ncgeom verify flows [--order N]
    ncgeom verify all
    ncgeom eval "EXPR"
    ncgeom dim torus|sphere

Global options (before or after the verb): --format text|json, --seed S,
--eval-q RATIONAL, --timings.  Exit status: 0 all checks pass, 1 some check
failed or errored, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .connections import ConnectionParams, TorusConnection
from .parser import EvalError, ParseError, eval_text, parse_scalar
from .report import emit
from .scalars import PoleError, scalar_eval
from .sphere import CASE_VALUES, SphereParams, sphere_dim
from .suites import SuiteConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _eval_q(text: str):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a rational or complex number: {text!r}") from None


def _global_options(defaults: bool) -> argparse.ArgumentParser:
    # shared by the top-level parser and every verb; only the top level sets
    # real defaults so an option given before the verb is not overwritten
    p = argparse.ArgumentParser(add_help=False)
    kw = (lambda v: {"default": v}) if defaults else (lambda v: {"default": argparse.SUPPRESS})
    p.add_argument("--format", choices=("text", "json"), **kw("text"))
    p.add_argument("--seed", type=int, **kw(0))
    p.add_argument("--eval-q", type=_eval_q, **kw(None), help="numeric spot-check value for q")
    p.add_argument("--timings", action="store_true", **kw(False))
    return p


def _sphere_options(p: argparse.ArgumentParser):
    for name in ("h111", "h121", "h211", "h221"):
        p.add_argument(f"--{name}", metavar="EXPR", help="scalar expression in q (default 0)")
    p.add_argument("--case", choices=tuple(CASE_VALUES), help="use the special values of a stated case")


def build_parser() -> argparse.ArgumentParser:
    common = _global_options(defaults=False)
    parser = argparse.ArgumentParser(prog="ncgeom", parents=[_global_options(defaults=True)],
                                     description="Exact noncommutative geometry on the quantum torus and sphere.")
    verbs = parser.add_subparsers(dest="verb", required=True)

    verify = verbs.add_parser("verify", help="run a verification suite")
    suites = verify.add_subparsers(dest="suite", required=True)
    torus = suites.add_parser("torus", parents=[common])
    torus.add_argument("--params", nargs="+", default=[], metavar="NAME=EXPR",
                       help="connection parameters, e.g. r_uu=1 s_vv=q^-1")
    torus.add_argument("--samples", type=int, default=20)
    sphere = suites.add_parser("sphere", parents=[common])
    _sphere_options(sphere)
    sphere.add_argument("--samples", type=int, default=20)
    flows = suites.add_parser("flows", parents=[common])
    flows.add_argument("--order", type=int, default=8)
    flows.add_argument("--samples", type=int, default=20)
    everything = suites.add_parser("all", parents=[common])
    everything.add_argument("--samples", type=int, default=20)

    ev = verbs.add_parser("eval", parents=[common], help="evaluate an expression to normal form")
    ev.add_argument("expr")

    dim = verbs.add_parser("dim", help="differential dimension")
    dims = dim.add_subparsers(dest="space", required=True)
    dt = dims.add_parser("torus", parents=[common])
    dt.add_argument("--params", nargs="+", default=[], metavar="NAME=EXPR")
    ds = dims.add_parser("sphere", parents=[common])
    _sphere_options(ds)
    return parser


def parse_params(items: list[str]) -> ConnectionParams:
    names = ConnectionParams.names()
    values = {}
    for item in items:
        name, sep, expr = item.partition("=")
        name = name.strip()
        if not sep or name not in names:
            raise UsageError(f"bad parameter {item!r}; expected NAME=EXPR with NAME in {', '.join(names)}")
        values[name] = parse_scalar(expr)
    return ConnectionParams(**values)


def sphere_params(args) -> SphereParams:
    base = CASE_VALUES[args.case] if args.case else SphereParams()
    values = {}
    for name in ("h111", "h121", "h211", "h221"):
        text = getattr(args, name)
        values[name] = parse_scalar(text) if text is not None else getattr(base, name)
    return SphereParams(**values)


def _numeric(value):
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else str(value)
    return repr(value)


def cmd_verify(args) -> int:
    config = SuiteConfig(seed=args.seed, eval_q=args.eval_q, samples=args.samples)
    if args.suite == "torus":
        config.params = parse_params(args.params)
    elif args.suite == "sphere":
        config.h = sphere_params(args)
        config.case = args.case
    elif args.suite == "flows":
        if args.order < 1:
            raise UsageError("--order must be positive")
        config.order = args.order
    report = run_suite(args.suite, config)
    print(emit(report, args.format, args.timings))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_eval(args) -> int:
    value = eval_text(args.expr)
    out = {"input": args.expr, "value": value.render()}
    if args.eval_q is not None:
        try:
            out["numeric"] = _numeric(scalar_eval(value.scalar_value(), args.eval_q))
        except ValueError:
            raise UsageError("--eval-q needs a scalar expression") from None
    if args.format == "json":
        print(json.dumps(out, ensure_ascii=False, indent=2))
    else:
        print(out["value"])
        if "numeric" in out:
            print(f"at q = {args.eval_q}: {out['numeric']}")
    return EXIT_OK


def cmd_dim(args) -> int:
    if args.space == "torus":
        value = TorusConnection(parse_params(args.params)).dim.scalar_value()
    else:
        try:
            value = sphere_dim(sphere_params(args))
        except ZeroDivisionError:
            raise UsageError("sigma or its Vec braiding is singular at these h values") from None
    out = {"space": args.space, "dim": value.render()}
    if args.eval_q is not None:
        out["numeric"] = _numeric(scalar_eval(value, args.eval_q))
    if args.format == "json":
        print(json.dumps(out, ensure_ascii=False, indent=2))
    else:
        print(out["dim"])
        if "numeric" in out:
            print(f"at q = {args.eval_q}: {out['numeric']}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    handler = {"verify": cmd_verify, "eval": cmd_eval, "dim": cmd_dim}[args.verb]
    try:
        return handler(args)
    except (ParseError, EvalError, UsageError, PoleError) as exc:
        print(f"ncgeom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
