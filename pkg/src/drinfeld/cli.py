"""Command-line front end: ``drinfeld <command> <action> [options]``.

Results go to stdout as JSON, diagnostics to stderr.  Exit codes: 0 success,
1 domain error or failed self-test, 2 precision shortfall, 64 usage error,
65 parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from .base.fields import fq_from_order
from .base.laurent import PrecisionError, laurent_tower, parse_laurent
from .base.literal import ParseError, parse_apoly, parse_ratfunc

EXIT_OK, EXIT_FAIL, EXIT_PRECISION, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 64, 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def default_precision() -> int:
    raw = os.environ.get("DRINFELD_PRECISION", "40")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"DRINFELD_PRECISION={raw!r} is not an integer")
    if n < 1:
        raise UsageError("DRINFELD_PRECISION must be positive")
    return n


# -- argument parsing helpers -------------------------------------------------------------


def _field(args):
    try:
        return fq_from_order(args.q)
    except ValueError as exc:
        raise UsageError(str(exc))


def _split(text: str, sep: str):
    """Split at top-level separators, keeping each piece's offset for error positions."""
    out, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            out.append((text[start:i], start))
            start = i + 1
    out.append((text[start:], start))
    return out


def _parse_at(fn, piece: str, offset: int, full: str):
    try:
        return fn(piece)
    except ParseError as exc:
        raise ParseError(exc.message, full, exc.pos + offset) from None


def parse_vector(text: str, F):
    return tuple(_parse_at(lambda s: parse_ratfunc(s, F), p, o, text) for p, o in _split(text, ","))


def parse_matrix(text: str, F):
    rows = []
    for row, ro in _split(text, ";"):
        rows.append(tuple(_parse_at(lambda s: parse_ratfunc(s, F), p, ro + o, text)
                          for p, o in _split(row, ",")))
    return tuple(rows)


def _point(args):
    from .analytic import OmegaPoint
    F = _field(args)
    tw = laurent_tower(F, args.m, 1)
    z = parse_laurent(args.z, tw, 4 * args.prec + 64)
    try:
        return OmegaPoint(z)
    except ValueError as exc:
        raise ValueError(f"z = {args.z} is not in Omega: {exc}")


def _D(args):
    if args.D is None:
        return None
    parts = [int(x) for x in args.D.split(",")]
    return parts[0] if len(parts) == 1 else tuple(parts)


def _laurent_out(x) -> dict:
    return {"value": x.to_json(), "text": str(x)}


def _used_D(P):
    lat = P.last_lattice
    return None if lat is None else list(lat.D)


# -- commands ---------------------------------------------------------------------------------


def cmd_carlitz_divpoly(args):
    from .carlitz import division_poly
    F = _field(args)
    a = parse_apoly(args.a, F)
    return {"rho": str(division_poly(a))}


def cmd_carlitz_frobdeg(args):
    from .carlitz import frobenius_degrees
    F = _field(args)
    return frobenius_degrees(parse_apoly(args.ell, F), parse_apoly(args.pi, F)).to_json()


def cmd_eis_eval(args):
    from .analytic import eisenstein, eisenstein_partial
    P = _point(args)
    if args.u:
        u = parse_vector(args.u, P.tower.base)
        val = eisenstein_partial(args.k, u, P, args.prec, D=_D(args))
    else:
        val = eisenstein(args.k, P, args.prec, D=_D(args))
    return {"k": args.k, "z": args.z, "q": args.q, "N": args.prec, "D": _used_D(P), **_laurent_out(val)}


def cmd_gdelta_check(args):
    from .analytic import g_delta_identities
    P = _point(args)
    res = g_delta_identities(P, args.prec)
    return {"z": args.z, "q": args.q, "N": args.prec, "D": _used_D(P), "ok": res.ok(),
            "g_residual": res.g_residual.to_json(), "delta_residual": res.delta_residual.to_json()}


def cmd_j_eval(args):
    from .analytic import j_eval
    P = _point(args)
    j = j_eval(P, args.prec)
    return {"z": args.z, "q": args.q, "N": args.prec, "D": _used_D(P), **_laurent_out(j)}


def cmd_slope(args):
    from .analytic import slope_order
    F = _field(args)
    try:
        lo, hi = (int(x) for x in args.mrange.split(":"))
    except ValueError:
        raise UsageError(f"--mrange expects lo:hi, got {args.mrange!r}")
    if hi <= lo + 1:
        raise UsageError("--mrange needs at least three points (lo:hi is half-open)")
    u = parse_vector(args.u, F) if args.u else None
    level = parse_apoly(args.level, F) if args.level else None
    rep = slope_order(args.form, args.q, range(lo, hi), u=u, level=level, m=args.m)
    out = rep.to_json()
    out["limit"] = fmt_rational(rep.limit)
    out["stable_from"] = rep.stable_from()
    return out


def cmd_zeta_partial(args):
    from .zeta import eval_at, partial_zeta
    F = _field(args)
    Z = partial_zeta(parse_ratfunc(args.t, F), parse_ratfunc(args.f, F))
    out = {"zeta": str(Z)}
    if args.at is not None:
        out["value"] = fmt_rational(eval_at(Z, args.at, args.q))
    return out


def cmd_ord_delta(args):
    from .boundary import ord_delta
    F = _field(args)
    return {"ord": fmt_rational(ord_delta(parse_apoly(args.a, F), args.r))}


def cmd_ord_e1u(args):
    from .boundary import BoundaryDatum, ord_E1u
    F = _field(args)
    n = parse_apoly(args.n, F)
    u = parse_vector(args.u, F)
    if args.nu:
        nu = parse_matrix(args.nu, F)
    else:
        one, zero = parse_ratfunc("1", F), parse_ratfunc("0", F)
        nu = tuple(tuple(one if i == j else zero for j in range(args.r)) for i in range(args.r))
    d = BoundaryDatum(args.r, n, u, nu)
    return {"ord": fmt_rational(ord_E1u(d))}


def cmd_selftest(args):
    from . import selftest
    if not args.suite:
        raise UsageError("selftest: empty --suite selector")
    ids = []
    for name in args.suite.split(","):
        try:
            ids += selftest.suite_ids(name.strip())
        except KeyError:
            raise UsageError(f"selftest: unknown suite {name!r} (choose from all, {', '.join(selftest.SUITES)})")
    t0 = time.perf_counter()
    results = selftest.run(ids, seed=args.seed)
    for r in results:
        print(r.line(), file=sys.stderr)
    print(f"wall time {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    passed = all(r.passed for r in results)
    out = {"suite": args.suite, "seed": args.seed, "passed": passed,
           "tally": {"pass": sum(r.passed for r in results), "fail": sum(not r.passed for r in results)},
           "results": [{k: v for k, v in r.to_json().items() if k not in ("seconds", "notes")}
                       for r in results]}
    return out, (EXIT_OK if passed else EXIT_FAIL)


# -- parser ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--q", type=int, default=2, help="order of the constant field F_q")
    common.add_argument("--prec", type=int, default=None, help="target precision N (default $DRINFELD_PRECISION or 40)")
    common.add_argument("--D", default=None, help="fixed lattice degree bound D or D1,D2")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "text"), default="json")

    p = _Parser(prog="drinfeld", description="Drinfeld modules over F_q[T]")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def action_group(name, help_):
        sp = sub.add_parser(name, help=help_)
        return sp.add_subparsers(dest="action", parser_class=_Parser)

    def leaf(group, name, fn, help_=None):
        sp = group.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    g = action_group("carlitz", "Carlitz module checks")
    s = leaf(g, "divpoly", cmd_carlitz_divpoly, "the division polynomial rho_a(X)")
    s.add_argument("--a", required=True)
    s = leaf(g, "frobdeg", cmd_carlitz_frobdeg, "factor degrees of rho_ell/X over A/pi")
    s.add_argument("--ell", required=True)
    s.add_argument("--pi", required=True)

    def omega_args(sp):
        sp.add_argument("--z", required=True)
        sp.add_argument("--m", type=int, default=2, help="degree of the unramified tower")

    g = action_group("eis", "Eisenstein series")
    s = leaf(g, "eval", cmd_eis_eval)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--u", default=None, help="coset u = 'u1,u2' for E_{k,u}")
    omega_args(s)

    g = action_group("gdelta", "g and Delta identities")
    omega_args(leaf(g, "check", cmd_gdelta_check))

    g = action_group("j", "the j-invariant")
    omega_args(leaf(g, "eval", cmd_j_eval))

    s = sub.add_parser("slope", parents=[common], help="cusp slope along z_m = alpha T^m")
    s.set_defaults(func=cmd_slope)
    s.add_argument("--form", choices=("delta", "e1u", "const"), required=True)
    s.add_argument("--mrange", required=True, help="half-open range lo:hi of m")
    s.add_argument("--u", default=None)
    s.add_argument("--level", default=None, help="use the parameter 1/e_A(z/level)")
    s.add_argument("--m", type=int, default=2)

    g = action_group("zeta", "partial zeta functions")
    s = leaf(g, "partial", cmd_zeta_partial)
    s.add_argument("--t", required=True)
    s.add_argument("--f", required=True)
    s.add_argument("--at", type=int, default=None, help="evaluate at the integer s")

    g = action_group("ord", "vanishing orders at the boundary")
    s = leaf(g, "delta", cmd_ord_delta)
    s.add_argument("--a", required=True)
    s.add_argument("--r", type=int, default=2)
    s = leaf(g, "e1u", cmd_ord_e1u)
    s.add_argument("--n", required=True)
    s.add_argument("--u", required=True)
    s.add_argument("--nu", default=None, help="rows separated by ';', entries by ','")
    s.add_argument("--r", type=int, default=2)

    s = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    s.set_defaults(func=cmd_selftest)
    s.add_argument("--suite", default="all")
    return p


def _emit(obj, fmt: str):
    if fmt == "text":
        for k, v in obj.items():
            print(f"{k}: {v if not isinstance(v, (dict, list)) else json.dumps(v, separators=(',', ':'))}")
    else:
        print(json.dumps(obj, separators=(",", ":")))


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("drinfeld: missing subcommand (try --help)")
        if args.prec is None:
            args.prec = default_precision()
        result = args.func(args)
        code = EXIT_OK
        if isinstance(result, tuple):
            result, code = result
        _emit(result, args.format)
        return code
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        caret = " " * exc.pos + "^"
        print(f"parse error: {exc.message} at position {exc.pos}\n  {exc.text}\n  {caret}", file=sys.stderr)
        return EXIT_PARSE
    except PrecisionError as exc:
        ach = exc.achievable
        print(json.dumps({"error": "precision", "message": str(exc),
                          "achievable": None if ach is None else fmt_rational(ach)}), file=sys.stderr)
        return EXIT_PRECISION
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    except (ValueError, ArithmeticError, NotImplementedError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
