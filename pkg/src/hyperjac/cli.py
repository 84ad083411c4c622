"""Command-line interface.

Every subcommand is deterministic given its inputs and ``--seed``; random
curves and divisors come from :class:`random.Random` seeded with it.
Output is ``key=value`` lines, or a single JSON object with ``--json``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import curve as C
from . import divisor as D
from . import explicit3, generic, selftest, zeta
from . import poly as P
from .errors import HyperJacError
from .ff import FieldCtx, OpCount


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(add_help=False)
    ap.add_argument("--p", type=int, help="odd prime")
    ap.add_argument("--g", type=int, default=3, help="genus (default 3)")
    ap.add_argument("--f", help="coefficients f0..f_{2g+2}, e.g. [1,0,...,1]")
    ap.add_argument("--curve-file", help="file containing 'p=..; g=..; f=[..]'")
    ap.add_argument("--d1", help="divisor 'u=[..]; v=[..]; n=..'")
    ap.add_argument("--d2", help="second divisor")
    ap.add_argument("--k", type=int, default=2, help="scalar for mul")
    ap.add_argument("--n", type=int, default=1000, help="sample count for bench/selftest")
    ap.add_argument("--op", choices=["add", "double", "neg"], default="add", help="bench operation")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=1, help="threads for point counting")
    ap.add_argument("--json", action="store_true", help="emit one JSON object")
    return ap


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hyperjac", description="Genus-3 balanced divisor arithmetic.")
    sub = ap.add_subparsers(dest="cmd", required=True)
    common = _common()
    helps = {
        "precompute": "print the auxiliary polynomial V",
        "add": "add two divisors",
        "double": "double a divisor",
        "neg": "negate a divisor",
        "mul": "scalar multiple k*D",
        "order": "L-polynomial plus annihilation check",
        "lpoly": "L-polynomial by naive point counting",
        "bench": "mean op counts of the explicit formulas on random inputs",
        "selftest": "oracle-equivalence and invariant checks",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)
    return ap


def _curve(args, rng) -> C.CurveModel:
    if args.curve_file:
        with open(args.curve_file) as fh:
            return C.parse_curve(fh.read())
    if args.p is None:
        raise UsageError("--p (or --curve-file) is required")
    F = FieldCtx(args.p)
    if args.f:
        return C.new_curve(F, args.g, P.parse_int_list(args.f))
    return C.random_curve(F, args.g, rng)


def _divisor(text, c, rng) -> D.BalancedDivisor:
    if text:
        return D.parse_divisor(text, c)
    return D.random_element(c, rng)


def _ops_dict(ops: OpCount) -> dict:
    return {"I": ops.inv, "M": ops.mul, "A": ops.add}


def _fmt_num(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{float(x):.3f}"


def _binary(args, rng, out):
    c = _curve(args, rng)
    ops = OpCount()
    d1 = _divisor(args.d1, c, rng)
    out["curve"] = C.format_curve(c)
    out["D1"] = D.format_divisor(d1)
    if args.cmd == "add":
        d2 = _divisor(args.d2, c, rng)
        out["D2"] = D.format_divisor(d2)
        res = explicit3.typical_doubling(d1, c, ops) if d1 == d2 else explicit3.typical_addition(d1, d2, c, ops)
    elif args.cmd == "double":
        res = explicit3.typical_doubling(d1, c, ops)
    else:
        res = explicit3.typical_negation(d1, c, ops)
    out["result"] = D.format_divisor(res.result)
    out["path"] = "fast" if res.used_fast_path else "fallback"
    out["ops"] = _ops_dict(ops)


def _bench(args, rng, out):
    c = _curve(args, rng)
    fn = {
        "add": lambda a, b, ops: explicit3.typical_addition(a, b, c, ops),
        "double": lambda a, b, ops: explicit3.typical_doubling(a, c, ops),
        "neg": lambda a, b, ops: explicit3.typical_negation(a, c, ops),
    }[args.op]
    total, fast = OpCount(), 0
    for _ in range(args.n):
        a, b = D.random_element(c, rng), D.random_element(c, rng)
        ops = OpCount()
        fast += fn(a, b, ops).used_fast_path
        total += ops
    n = max(args.n, 1)
    out["curve"] = C.format_curve(c)
    out["op"] = args.op
    out["n"] = args.n
    out["fast_fraction"] = fast / n
    out["mean"] = {k: _fmt_num(Fraction(v, n)) for k, v in _ops_dict(total).items()}


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    rng = random.Random(args.seed)
    out: dict = {}
    status = 0
    try:
        if args.cmd == "precompute":
            c = _curve(args, rng)
            out["curve"] = C.format_curve(c)
            out["V"] = P.format_poly(c.V)
            out["normalized"] = c.normalized
        elif args.cmd in ("add", "double", "neg"):
            _binary(args, rng, out)
        elif args.cmd == "mul":
            c = _curve(args, rng)
            d = _divisor(args.d1, c, rng)
            ops = OpCount()
            out["curve"] = C.format_curve(c)
            out["D1"] = D.format_divisor(d)
            out["k"] = args.k
            out["result"] = D.format_divisor(explicit3.scalar_mul(args.k, d, c, ops))
            out["ops"] = _ops_dict(ops)
        elif args.cmd in ("lpoly", "order"):
            c = _curve(args, rng)
            L = zeta.lpolynomial(c, threads=args.threads)
            out["curve"] = C.format_curve(c)
            out["Lp"] = list(L.coeffs)
            out["order"] = L.order
            if args.cmd == "order":
                d = _divisor(args.d1, c, rng)
                out["D1"] = D.format_divisor(d)
                out["annihilated"] = generic.scalar_mul(L.order, d, c) == D.identity(c)
                out["bsgs_m"] = zeta.bsgs_annihilate(d, c, L.weil_interval())
                status = 0 if out["annihilated"] else 1
        elif args.cmd == "bench":
            _bench(args, rng, out)
        elif args.cmd == "selftest":
            results = selftest.run(args.seed, min(args.n, 200))
            out["checks"] = {name: ok for name, ok in results}
            status = 0 if all(ok for _, ok in results) else 1
    except (HyperJacError, UsageError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    _emit(args, out, stdout)
    return status


def _emit(args, out: dict, stdout):
    if args.json:
        print(json.dumps(out, sort_keys=True), file=stdout)
        return
    for key, val in out.items():
        if key == "Lp":
            print(f"Lp=[{','.join(str(a) for a in val)}]; order={out['order']}", file=stdout)
        elif key == "order":
            continue
        elif key in ("ops", "mean"):
            print(" ".join(f"{k}={v}" for k, v in val.items()), file=stdout)
        elif key == "checks":
            for name, ok in val.items():
                print(f"{'PASS' if ok else 'FAIL'} {name}", file=stdout)
        else:
            if isinstance(val, bool):
                val = str(val).lower()
            print(f"{key}={val}", file=stdout)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
