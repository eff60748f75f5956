"""Command-line front end.

Exit codes: 0 success / positive verdict, 1 usage or parse error,
2 negative verdict, 3 witness search hit its cap.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bialgebra import TRIANGULAR, PremiseError, classify, cobracket, cybe_c, michaelis_r
from .cohomology import (
    NotADerivationError,
    UnsupportedDegreeError,
    WitnessCapError,
    alternating_witness,
    annihilator_witness,
    solve_inner,
)
from .scalars import AlgebraConfig, DimensionError
from .suites import SUITES, run_suite
from .tensors import diag_act
from .textio import ParseError, format_any, parse, parse_element, parse_point, parse_tensor
from .witt import bracket

EXIT_OK, EXIT_USAGE, EXIT_NEGATIVE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _read(text: str) -> str:
    """``@path`` reads the argument from a file."""
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            return fh.read().strip()
    return text


def _config(args, n=None) -> AlgebraConfig:
    n = n if n is not None else args.rank
    if n is None:
        raise UsageError("--rank is required")
    return AlgebraConfig(n=n, sample_window=args.window, seed=args.seed, cap=args.cap)


def _emit(args, payload: dict, text: str):
    if args.format == "doc":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _emit_value(args, value):
    s = format_any(value)
    _emit(args, {"result": s}, s)
    return EXIT_OK


def cmd_bracket(args):
    cfg = _config(args)
    u = parse_element(_read(args.lhs), cfg.n)
    w = parse_element(_read(args.rhs), cfg.n)
    return _emit_value(args, bracket(u, w))


def cmd_act(args):
    cfg = _config(args)
    a = parse_element(_read(args.element), cfg.n)
    t = parse_tensor(_read(args.tensor), cfg.n, args.arity)
    return _emit_value(args, diag_act(a, t))


def cmd_cobracket(args):
    cfg = _config(args)
    r = parse_tensor(_read(args.r), cfg.n, 2)
    x = parse_element(_read(args.x), cfg.n)
    return _emit_value(args, cobracket(r, x))


def cmd_cybe(args):
    cfg = _config(args)
    r = parse_tensor(_read(args.r), cfg.n, 2)
    return _emit_value(args, cybe_c(r))


def cmd_classify(args):
    cfg = _config(args)
    r = parse_tensor(_read(args.r), cfg.n, 2)
    report = classify(r, args.samples, cfg)
    _emit(args, report.to_dict(), report.render_text())
    return EXIT_OK if report.verdict == TRIANGULAR else EXIT_NEGATIVE


def cmd_michaelis(args):
    cfg = _config(args)
    a = parse_element(_read(args.a), cfg.n)
    b = parse_element(_read(args.b), cfg.n)
    try:
        k = parse_point(f"[{args.k}]", 1)[0]
    except ParseError as exc:
        raise UsageError(f"bad scalar k: {args.k!r}") from exc
    try:
        r = michaelis_r(a, b, k)
    except PremiseError as exc:
        _emit(args, {"check": exc.check, "error": str(exc)}, f"premise failed: {exc}")
        return EXIT_NEGATIVE
    return _emit_value(args, r)


def cmd_verify(args):
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; known: all, {', '.join(SUITES)}")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ranks = [args.rank] if args.rank is not None else [1, 2, 3]
    results = [run_suite(name, _config(args, n), args.samples) for name in names for n in ranks]
    ok = all(r.passed for r in results)
    _emit(
        args,
        {"passed": ok, "suites": [r.to_dict() for r in results]},
        "\n".join(r.render_text() for r in results),
    )
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_witness(args):
    cfg = _config(args)
    c = parse(_read(args.tensor), cfg.n, args.arity)
    if getattr(c, "arity", 1) not in (2, 3) and c:
        raise UsageError("witness needs a 2- or 3-tensor")
    try:
        if not c:
            a, verdict = None, "zero"
        elif c.arity == 2:
            a = alternating_witness(c, cfg.cap)
            verdict = "alternating" if a is None else "witness"
        else:
            a, verdict = annihilator_witness(c, cfg.cap), "witness"
    except WitnessCapError as exc:
        _emit(args, {"cap": cfg.cap, "error": str(exc)}, f"cap exhausted: {exc}")
        return EXIT_CAP
    text = verdict if a is None else format_any(a)
    _emit(args, {"verdict": verdict, "witness": None if a is None else text}, text)
    return EXIT_OK


def cmd_solve_inner(args):
    cfg = _config(args)
    x = parse_point(args.degree, cfg.n)
    if len(args.values) != cfg.n:
        raise UsageError(f"need {cfg.n} tensor values D(d_1)..D(d_{cfg.n}), got {len(args.values)}")
    table = {i: parse_tensor(_read(v), cfg.n, 2) for i, v in enumerate(args.values)}
    try:
        w = solve_inner(table, x)
    except UnsupportedDegreeError as exc:
        raise UsageError(str(exc)) from exc
    except NotADerivationError as exc:
        _emit(args, {"error": str(exc), "index": exc.index + 1}, f"not a derivation: {exc}")
        return EXIT_NEGATIVE
    return _emit_value(args, w)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, help="rank n of the algebra")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--window", type=int, default=3, help="numerator bound for sampled coordinates")
    common.add_argument("--cap", type=int, default=8, help="witness search escalation cap")
    common.add_argument("--format", choices=("text", "doc"), default="text")
    common.add_argument("--samples", type=int, default=50)

    p = _Parser(prog="wittbialg", description="Lie bialgebras on generalized Witt algebras")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("bracket", cmd_bracket, "bracket of two elements")
    sp.add_argument("lhs")
    sp.add_argument("rhs")
    sp = add("act", cmd_act, "diagonal action of an element on a tensor")
    sp.add_argument("element")
    sp.add_argument("tensor")
    sp.add_argument("--arity", type=int, choices=(2, 3))
    sp = add("cobracket", cmd_cobracket, "Delta_r(x) = x . r")
    sp.add_argument("r")
    sp.add_argument("x")
    sp = add("cybe", cmd_cybe, "classical Yang-Baxter element c(r)")
    sp.add_argument("r")
    sp = add("classify", cmd_classify, "classify an r-matrix")
    sp.add_argument("r")
    sp = add("michaelis", cmd_michaelis, "r = a(x)b - b(x)a for [a,b] = k b")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("k")
    sp = add("verify", cmd_verify, "run a seeded property suite")
    sp.add_argument("suite", help=f"one of: all, {', '.join(SUITES)}")
    sp = add("witness", cmd_witness, "find a witness that a tensor is nonzero / not alternating")
    sp.add_argument("tensor")
    sp.add_argument("--arity", type=int, choices=(2, 3))
    sp = add("solve-inner", cmd_solve_inner, "recover w from D(d_1), ..., D(d_n)")
    sp.add_argument("--degree", required=True, help="nonzero degree x, e.g. [1,0]")
    sp.add_argument("values", nargs="+")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.samples < 1:
        print("error: --samples must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except (ParseError, DimensionError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
