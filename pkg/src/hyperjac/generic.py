"""General balanced-divisor arithmetic for any genus ``g >= 2``.

Compose, then Reduce while ``deg u > g+1``, then Adjust the weight at
infinity.  Correctness over speed: this is the reference the explicit genus-3
formulas are checked against.

Every public function accepts an optional ``trace`` list; when given, each
phase appends ``(phase, deg u, deg v, n)`` so callers can inspect the path an
addition took.
"""

from __future__ import annotations

from . import poly as P
from .curve import CurveModel
from .divisor import BalancedDivisor, SemiReducedDivisor, ceil_half, identity
from .errors import HyperJacError, PreconditionViolated
from .ff import OpCount


def _deg(a):
    return len(a) - 1 if a else -1


def _record(trace, phase, d):
    if trace is not None:
        trace.append((phase, _deg(d.u), _deg(d.v), d.n))


def compose(d1, d2, c: CurveModel, ops: OpCount | None = None, trace=None) -> SemiReducedDivisor:
    ops = ops if ops is not None else OpCount()
    F = c.F
    u1, v1, u2, v2 = d1.u, d1.v, d2.u, d2.v
    w, c1, c2, c3 = P.xgcd3(F, u1, u2, P.add(F, v1, v2, ops), ops)
    u3 = P.mul(F, u1, u2, ops)
    if w != P.ONE:
        u3 = P.exact_div(F, u3, P.sqr(F, w, ops), ops)
    num = P.add(
        F,
        P.mul(F, c1, P.mul(F, u1, v2, ops), ops),
        P.mul(F, c2, P.mul(F, u2, v1, ops), ops),
        ops,
    )
    if c3:
        num = P.add(F, num, P.mul(F, c3, P.add(F, P.mul(F, v1, v2, ops), c.f, ops), ops), ops)
    if w != P.ONE:
        num = P.exact_div(F, num, w, ops)
    v3 = P.mod(F, num, u3, ops)
    out = SemiReducedDivisor(u3, v3, d1.n + d2.n + len(w) - 1)
    _record(trace, "compose", out)
    return out


def _flip(c: CurveModel, u1, vh, ops):
    """``u2 = (f - vh^2)/u1`` made monic and ``v2 = -vh mod u2``."""
    F = c.F
    w = P.exact_div(F, P.sub(F, c.f, P.sqr(F, vh, ops), ops), u1, ops)
    _, u2 = P.make_monic(F, w, ops)
    v2 = P.mod(F, P.neg(F, vh, ops), u2, ops)
    return u2, v2


def reduce_step(d: SemiReducedDivisor, c: CurveModel, ops: OpCount | None = None, trace=None) -> SemiReducedDivisor:
    ops = ops if ops is not None else OpCount()
    g, p = c.g, c.p
    du1 = _deg(d.u)
    if du1 <= g + 1:
        raise PreconditionViolated(f"reduce_step needs deg u > {g + 1}, got {du1}")
    u2, v2 = _flip(c, d.u, d.v, ops)
    du2 = _deg(u2)
    if _deg(d.v) == g + 1 and d.v[-1] == 1:
        delta = du1 - (g + 1)
    elif _deg(d.v) == g + 1 and d.v[-1] == p - 1:
        delta = g + 1 - du2
    else:
        delta = (du1 - du2) // 2
    out = SemiReducedDivisor(u2, v2, d.n + delta)
    _record(trace, "reduce", out)
    return out


def adjust(d: SemiReducedDivisor, c: CurveModel, ops: OpCount | None = None, trace=None) -> BalancedDivisor:
    ops = ops if ops is not None else OpCount()
    F, g = c.F, c.g
    lo, hi3 = ceil_half(g), (3 * g + 1) // 2
    u, v, n = d.u, d.v, d.n
    if _deg(u) > g + 1:
        raise PreconditionViolated(f"adjust needs deg u <= {g + 1}, got {_deg(u)}")
    for _ in range(lo + 2):
        du = _deg(u)
        if lo <= n <= hi3 - du:
            out = BalancedDivisor(u, v, n - lo)
            _record(trace, "done", out)
            return out
        # V - (V mod u) is the part of V divisible by u
        Vq = P.sub(F, c.V, P.mod(F, c.V, u, ops), ops)
        if n < lo:
            vh = P.sub(F, v, Vq, ops)
            u, v = _flip(c, u, vh, ops)
            n = n + g + 1 - _deg(u)
        else:
            vh = P.add(F, v, Vq, ops)
            u, v = _flip(c, u, vh, ops)
            n = n + du - (g + 1)
        if trace is not None:
            trace.append(("adjust", _deg(u), _deg(v), n))
    raise HyperJacError("adjust exceeded its iteration bound (internal error)")


def addition(d1, d2, c: CurveModel, ops: OpCount | None = None, trace=None) -> BalancedDivisor:
    ops = ops if ops is not None else OpCount()
    _record(trace, "input", d1)
    _record(trace, "input", d2)
    d = compose(d1, d2, c, ops, trace)
    while _deg(d.u) > c.g + 1:
        d = reduce_step(d, c, ops, trace)
    return adjust(d, c, ops, trace)


def negation(d, c: CurveModel, ops: OpCount | None = None, trace=None) -> BalancedDivisor:
    ops = ops if ops is not None else OpCount()
    F, g = c.F, c.g
    du = _deg(d.u)
    mv = P.neg(F, d.v, ops)
    if g % 2 == 0:
        return BalancedDivisor(d.u, mv, g - du - d.n)
    if d.n > 0:
        return BalancedDivisor(d.u, mv, g - du - d.n + 1)
    return adjust(SemiReducedDivisor(d.u, mv, (3 * g + 1) // 2 - du + 1), c, ops, trace)


def double(d, c: CurveModel, ops: OpCount | None = None, trace=None) -> BalancedDivisor:
    return addition(d, d, c, ops, trace)


def scalar_mul(k: int, d, c: CurveModel, ops: OpCount | None = None, add=None, neg=None) -> BalancedDivisor:
    """``k*d`` by left-to-right double-and-add.

    ``add`` / ``neg`` default to :func:`addition` / :func:`negation`; the
    explicit genus-3 module passes its own dispatchers.  Negative ``k`` is
    handled by negating first.
    """
    ops = ops if ops is not None else OpCount()
    add = add or addition
    if k < 0:
        d = (neg or negation)(d, c, ops)
        k = -k
    acc = identity(c)
    for bit in bin(k)[2:]:
        acc = add(acc, acc, c, ops)
        if bit == "1":
            acc = add(acc, d, c, ops)
    return acc
