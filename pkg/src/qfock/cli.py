"""Command-line front end.

Subcommands:

* ``corr``      — n-point correlation functions of the negative-level
                  modules (oracle extraction, or the assignment/literal
                  Weyl-group reductions).
* ``qdim``      — graded dimensions from the closed formulas.
* ``identity``  — run one named identity check and report it.
* ``verify``    — run the registered verification suite.
* ``dump``      — serialize registered generating functions.

All rationals are entered and printed exactly; levels and truncation
orders accept half-integers as strings like ``-3/2``.  Exit status: 0 on
success, 1 when a requested check fails, 2 on usage or parameter errors.
"""

import argparse
import json
import sys
from fractions import Fraction as F
from typing import List, Optional, Sequence, Tuple

from . import closedform as cf
from . import verify
from .qseries import (
    HalfInt,
    Param,
    QSeriesError,
    Series,
    half_str,
    parse_half,
    pochhammer_inf,
    qhyper,
    series_to_json,
    theta,
)


class UsageError(Exception):
    pass


def _parse_rational(text: str) -> F:
    try:
        return F(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError("not a rational number: %r" % text)


def _parse_point(text: str) -> Param:
    """A point is an s-value "p/q", optionally with a q-shift: "p/q:d"."""
    s, _, shift = text.partition(":")
    sval = _parse_rational(s)
    if sval == 0:
        raise UsageError("point value must be nonzero")
    if not shift:
        return Param(sval)
    try:
        d2 = parse_half(shift)
    except QSeriesError:
        raise UsageError("bad q-shift %r (use an integer or k/2)" % shift)
    return Param(sval, F(d2, 2))


def _parse_points(texts: Sequence[str]) -> List[Param]:
    return [_parse_point(t) for t in texts]


def _parse_label(text: str) -> Tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError("bad weight label %r (comma-separated integers)"
                         % text)


def _parse_order(text: str) -> HalfInt:
    try:
        return HalfInt(twice=parse_half(text))
    except QSeriesError:
        raise UsageError("bad truncation order %r" % text)


def _family_of(algebra: str, level: F) -> Tuple[str, int]:
    """Map (algebra, level) to a duality family name and rank."""
    if algebra == "a":
        if level.denominator == 1 and level < 0:
            return "-l", int(-level)
    elif algebra == "c":
        if level.denominator == 2 and level > 0:
            return "l-1/2", int(level + F(1, 2))
        if level.denominator == 1 and level < 0:
            return "-l", int(-level)
        if level.denominator == 2 and level < 0:
            return "-l-1/2", int(-level - F(1, 2))
    elif algebra == "d":
        if level.denominator == 1 and level < 0:
            return "-l", int(-level)
        if level.denominator == 2 and level < 0:
            return "-l+1/2", int(F(1, 2) - level)
    else:
        raise UsageError(
            "algebra %r has no module family here (choose a, c, or d)"
            % algebra)
    raise UsageError("level %s is not realized for algebra %s"
                     % (level, algebra))


# -- output ------------------------------------------------------------------


def _emit_series(s: Series, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(series_to_json(s), sort_keys=True) + "\n")
    elif fmt == "csv":
        out.write("q_num,z,coeff_num,coeff_den\n")
        for (q2, zk), c in s.sorted_terms():
            zcol = ";".join("%d:%s" % (v, half_str(e2)) for v, e2 in zk)
            out.write("%d,%s,%d,%d\n"
                      % (q2, zcol, c.numerator, c.denominator))
    elif fmt == "pretty":
        rows = [("q^" + half_str(q2)
                 + "".join(" z%d^%s" % (v, half_str(e2)) for v, e2 in zk),
                 str(c)) for (q2, zk), c in s.sorted_terms()]
        width = max([len(m) for m, _ in rows] + [4])
        for mono, c in rows:
            out.write("%-*s  %s\n" % (width, mono, c))
        if not rows:
            out.write("0\n")
    else:
        raise UsageError("unknown format %r" % fmt)


# -- subcommands -------------------------------------------------------------


def _cmd_corr(args, out) -> int:
    level = _parse_rational(args.level)
    fam, l = _family_of(args.algebra, level)
    lam = _parse_label(getattr(args, "lambda"))
    points = _parse_points(args.points)
    N = _parse_order(args.N)
    inst = cf.duality_instance(args.algebra, fam, l)
    if args.mode == "oracle":
        series = cf.extract_dominant(inst, lam, points, N)
    elif args.mode in ("assignment", "literal"):
        series = cf.duality_reduce(inst, lam, points, N, args.mode)
    else:
        raise UsageError("unknown mode %r" % args.mode)
    _emit_series(series, args.format, out)
    return 0


def _cmd_qdim(args, out) -> int:
    lam = _parse_label(getattr(args, "lambda"))
    N = _parse_order(args.N)
    _parse_rational(args.level)  # early usage check
    if args.algebra not in ("a", "c", "d"):
        raise UsageError("algebra must be a, c, or d")
    series = cf.qdim_closed(args.algebra, args.level, lam, N, args.form)
    _emit_series(series, args.format, out)
    return 0


def _cmd_identity(args, out) -> int:
    specs = [s for s in verify.registry() if s.name == args.name]
    if not specs:
        raise UsageError("unknown check name %r" % args.name)
    results = [verify.run_check(specs[0])]
    if args.format == "json":
        out.write(verify.report_json(results) + "\n")
    else:
        out.write(verify.report_table(results) + "\n")
    return verify.suite_exit_status(results)


def _cmd_verify(args, out) -> int:
    results = verify.run_suite(args.filter)
    if not results:
        raise UsageError("no checks match filter %r" % args.filter)
    if args.format == "json":
        out.write(verify.report_json(results) + "\n")
    else:
        out.write(verify.report_table(results) + "\n")
        npass = sum(1 for r in results if r.status == "pass")
        out.write("%d/%d checks passed\n" % (npass, len(results)))
    return verify.suite_exit_status(results)


def _kv(pairs: Sequence[str]) -> dict:
    out = {}
    for item in pairs:
        key, eq, val = item.partition("=")
        if not eq:
            raise UsageError("dump parameters are key=value, got %r" % item)
        out[key] = val
    return out


def _cmd_dump(args, out) -> int:
    kv = _kv(args.params)
    N = _parse_order(kv.pop("N", "10"))
    name = args.name
    if name == "theta":
        series = theta(_parse_point(kv.pop("t", "2/3")), N)
    elif name == "f_bo":
        tspec = kv.pop("t", "")
        pts = _parse_points([x for x in tspec.split(",") if x])
        n = kv.pop("n", None)
        if n is not None and int(n) != len(pts):
            raise UsageError("n=%s does not match %d point(s)"
                             % (n, len(pts)))
        series = cf.f_bo(pts, N)
    elif name == "pochhammer":
        series = pochhammer_inf(_parse_point(kv.pop("a", "2/3:1")), N)
    elif name == "qhyper":
        upper = _parse_points([x for x in kv.pop("upper", "").split(",") if x])
        lower = _parse_points([x for x in kv.pop("lower", "").split(",") if x])
        series = qhyper(upper, lower, _parse_point(kv.pop("arg", "1:1")), N)
    else:
        raise UsageError("unknown dump name %r (theta, f_bo, pochhammer, "
                         "qhyper)" % name)
    if kv:
        raise UsageError("unused dump parameters: %s" % ", ".join(sorted(kv)))
    _emit_series(series, args.format, out)
    return 0


# -- argument parsing --------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qfock",
        description="Exact correlation functions and graded dimensions of "
                    "negative-level Fock-space modules.")
    sub = top.add_subparsers(dest="command", required=True)

    def series_flags(p):
        p.add_argument("--N", default="10",
                       help="truncation order in q (integer or k/2)")
        p.add_argument("--format", default="pretty",
                       choices=["json", "csv", "pretty"])

    p = sub.add_parser("corr", help="n-point correlation function")
    p.add_argument("--algebra", required=True)
    p.add_argument("--level", required=True)
    p.add_argument("--lambda", default="", dest="lambda",
                   help="comma-separated weight label")
    p.add_argument("--points", nargs="*", default=[],
                   help="point s-values p/q, optional q-shift p/q:d")
    p.add_argument("--mode", default="oracle",
                   choices=["oracle", "assignment", "literal"])
    series_flags(p)

    p = sub.add_parser("qdim", help="graded dimension")
    p.add_argument("--algebra", required=True)
    p.add_argument("--level", required=True)
    p.add_argument("--lambda", default="", dest="lambda")
    p.add_argument("--form", default="weyl", choices=["weyl", "product"])
    series_flags(p)

    p = sub.add_parser("identity", help="run one named identity check")
    p.add_argument("--name", required=True)
    p.add_argument("--format", default="pretty", choices=["json", "pretty"])

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--filter", default="", help="glob on check names")
    p.add_argument("--format", default="pretty", choices=["json", "pretty"])

    p = sub.add_parser("dump", help="serialize a generating function")
    p.add_argument("name", help="theta | f_bo | pochhammer | qhyper")
    p.add_argument("params", nargs="*", help="key=value parameters")
    p.add_argument("--format", default="json",
                   choices=["json", "csv", "pretty"])
    return top


_DISPATCH = {
    "corr": _cmd_corr,
    "qdim": _cmd_qdim,
    "identity": _cmd_identity,
    "verify": _cmd_verify,
    "dump": _cmd_dump,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _DISPATCH[args.command](args, out)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except QSeriesError as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
