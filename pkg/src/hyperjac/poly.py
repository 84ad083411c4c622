"""Dense univariate polynomials over F_p.

A polynomial is a tuple of ``int`` coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.  All functions return
canonical (trimmed) tuples.  The generic routines here are schoolbook
algorithms and serve as the reference path; the hand-optimized formulas live
in :mod:`hyperjac.explicit3`.

Operation counts are charged in bulk (one M per coefficient product, one A
per coefficient addition/subtraction that actually happens), which keeps the
hot loops free of per-coefficient method calls.
"""

from __future__ import annotations

import math
import re
from typing import Sequence

from .errors import DivisionByZeroPoly, InexactDivision, NotCoprime, ZeroPolynomial
from .ff import FieldCtx, OpCount

Poly = tuple  # tuple[int, ...], low-to-high

ZERO: Poly = ()
ONE: Poly = (1,)
X: Poly = (0, 1)


def _ops(ops):
    return ops if ops is not None else OpCount()


def trim(coeffs: Sequence[int]) -> Poly:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def from_list(F: FieldCtx, coeffs: Sequence[int]) -> Poly:
    p = F.p
    return trim([c % p for c in coeffs])


def degree(a: Poly):
    """Degree of ``a``; ``-math.inf`` for the zero polynomial."""
    return len(a) - 1 if a else -math.inf


def lc(a: Poly) -> int:
    return a[-1] if a else 0


def coeff(a: Poly, i: int) -> int:
    return a[i] if 0 <= i < len(a) else 0


def is_monic(a: Poly) -> bool:
    return bool(a) and a[-1] == 1


def add(F: FieldCtx, a: Poly, b: Poly, ops: OpCount | None = None) -> Poly:
    ops = _ops(ops)
    p = F.p
    if len(a) < len(b):
        a, b = b, a
    ops.add += len(b)
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def neg(F: FieldCtx, a: Poly, ops: OpCount | None = None) -> Poly:
    ops = _ops(ops)
    ops.add += len(a)
    p = F.p
    return tuple((p - c) % p for c in a)


def sub(F: FieldCtx, a: Poly, b: Poly, ops: OpCount | None = None) -> Poly:
    ops = _ops(ops)
    p = F.p
    n = max(len(a), len(b))
    ops.add += len(b)
    out = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def scale(F: FieldCtx, a: Poly, c: int, ops: OpCount | None = None) -> Poly:
    c %= F.p
    if c == 1:
        return a
    if c == 0:
        return ZERO
    ops = _ops(ops)
    ops.mul += len(a)
    p = F.p
    return tuple(x * c % p for x in a)


def mul(F: FieldCtx, a: Poly, b: Poly, ops: OpCount | None = None) -> Poly:
    """Schoolbook product."""
    if not a or not b:
        return ZERO
    ops = _ops(ops)
    la, lb = len(a), len(b)
    ops.mul += la * lb
    ops.add += (la - 1) * (lb - 1)
    out = [0] * (la + lb - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    p = F.p
    return trim([c % p for c in out])


def sqr(F: FieldCtx, a: Poly, ops: OpCount | None = None) -> Poly:
    return mul(F, a, a, ops)


def divrem(F: FieldCtx, a: Poly, b: Poly, ops: OpCount | None = None) -> tuple[Poly, Poly]:
    """Return ``(q, r)`` with ``a = q*b + r`` and ``deg r < deg b``."""
    if not b:
        raise DivisionByZeroPoly("division by the zero polynomial")
    ops = _ops(ops)
    p = F.p
    db = len(b) - 1
    if len(a) <= db:
        return ZERO, a
    lead = b[-1]
    lead_inv = 1 if lead == 1 else F.inv(lead, ops)
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        top = r[k + db] % p
        if lead_inv != 1:
            top = top * lead_inv % p
            ops.mul += 1
        q[k] = top
        if top:
            ops.mul += db
            ops.add += db
            for j in range(db):
                r[k + j] -= top * b[j]
        r[k + db] = 0
    return trim(q), trim([c % p for c in r[:db]])


def mod(F: FieldCtx, a: Poly, b: Poly, ops: OpCount | None = None) -> Poly:
    return divrem(F, a, b, ops)[1]


def exact_div(F: FieldCtx, a: Poly, b: Poly, ops: OpCount | None = None) -> Poly:
    q, r = divrem(F, a, b, ops)
    if r:
        raise InexactDivision(f"{format_poly(b)} does not divide {format_poly(a)}")
    return q


def make_monic(F: FieldCtx, a: Poly, ops: OpCount | None = None) -> tuple[int, Poly]:
    """Return ``(c, c*a)`` where ``c = lc(a)^-1``."""
    if not a:
        raise ZeroPolynomial("cannot make the zero polynomial monic")
    if a[-1] == 1:
        return 1, a
    ops = _ops(ops)
    c = F.inv(a[-1], ops)
    p = F.p
    ops.mul += len(a) - 1
    return c, tuple(x * c % p for x in a[:-1]) + (1,)


def xgcd(F: FieldCtx, a: Poly, b: Poly, ops: OpCount | None = None) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: ``(g, s, t)`` with ``g = s*a + t*b`` and ``g`` monic (or zero)."""
    ops = _ops(ops)
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = divrem(F, r0, r1, ops)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1, ops), ops)
        t0, t1 = t1, sub(F, t0, mul(F, q, t1, ops), ops)
    if not r0:
        return ZERO, ZERO, ZERO
    c, g = make_monic(F, r0, ops)
    return g, scale(F, s0, c, ops), scale(F, t0, c, ops)


def gcd(F: FieldCtx, a: Poly, b: Poly, ops: OpCount | None = None) -> Poly:
    ops = _ops(ops)
    while b:
        a, b = b, mod(F, a, b, ops)
    if not a:
        return ZERO
    return make_monic(F, a, ops)[1]


def xgcd3(F: FieldCtx, u1: Poly, u2: Poly, v12: Poly, ops: OpCount | None = None):
    """Monic ``w = gcd(u1, u2, v12)`` with ``w = c1*u1 + c2*u2 + c3*v12``.

    Two chained Euclidean passes: first ``gcd(u1, u2)``, then with ``v12``.
    """
    if not u1 and not u2 and not v12:
        raise ZeroPolynomial("xgcd3 of three zero polynomials")
    ops = _ops(ops)
    h, a1, a2 = xgcd(F, u1, u2, ops)
    if h == ONE:
        return ONE, a1, a2, ZERO
    w, b1, b2 = xgcd(F, h, v12, ops)
    if b1 == ONE:
        return w, a1, a2, b2
    return w, mul(F, b1, a1, ops), mul(F, b1, a2, ops), b2


def mod_inverse(F: FieldCtx, a: Poly, m: Poly, ops: OpCount | None = None) -> Poly:
    """Inverse of ``a`` modulo ``m``."""
    if len(m) < 2:
        raise ValueError("modulus must have degree >= 1")
    ops = _ops(ops)
    g, s, _ = xgcd(F, mod(F, a, m, ops), m, ops)
    if g != ONE:
        raise NotCoprime(f"gcd is {format_poly(g)}", gcd=g)
    return mod(F, s, m, ops)


def res_inv_cubic(F: FieldCtx, u10, u11, u12, u20, u21, u22, ops: OpCount):
    """Resultant ``r = Res(u1, u2)`` of two monic cubics and ``i = r*u1^-1 mod u2``.

    Straight-line Bezout-matrix evaluation, 15M + 12A.  Returns
    ``(r, i0, i1, i2, w0)`` with ``w0 = u12 - u22`` exposed for reuse.
    """
    mul, sub, add = F.mul, F.sub, F.add
    t1 = sub(u10, u20, ops)
    t2 = sub(u11, u21, ops)
    w0 = sub(u12, u22, ops)
    t3 = sub(t2, mul(u22, w0, ops), ops)
    t4 = sub(t1, mul(u21, w0, ops), ops)
    t5 = sub(mul(u22, t3, ops), t4, ops)
    t6 = add(mul(u20, w0, ops), mul(u21, t3, ops), ops)
    i0 = sub(mul(t4, t5, ops), mul(t3, t6, ops), ops)
    i1 = sub(mul(w0, t6, ops), mul(t2, t5, ops), ops)
    i2 = sub(mul(w0, t4, ops), mul(t2, t3, ops), ops)
    r = sub(mul(t1, i0, ops), mul(u20, add(mul(t3, i2, ops), mul(w0, i1, ops), ops), ops), ops)
    return r, i0, i1, i2, w0


def resultant_cubics(F: FieldCtx, u1: Poly, u2: Poly, ops: OpCount | None = None) -> tuple[int, Poly]:
    """``(r, i)`` with ``r = Res(u1, u2)`` and ``i = r*u1^-1 mod u2``; ``r == 0`` iff not coprime."""
    if len(u1) != 4 or len(u2) != 4 or u1[3] != 1 or u2[3] != 1:
        raise ValueError("resultant_cubics expects two monic cubics")
    ops = _ops(ops)
    r, i0, i1, i2, _ = res_inv_cubic(F, *u1[:3], *u2[:3], ops)
    return r, trim([i0, i1, i2])


def evaluate(F: FieldCtx, a: Poly, x: int) -> int:
    p = F.p
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def derivative(F: FieldCtx, a: Poly) -> Poly:
    p = F.p
    return trim([i * a[i] % p for i in range(1, len(a))])


def taylor_shift(F: FieldCtx, a: Poly, t: int) -> Poly:
    """Return ``a(x + t)``."""
    p = F.p
    out = [0] * len(a)
    for c in reversed(a):
        # out = out*(x + t) + c
        for i in range(len(out) - 1, 0, -1):
            out[i] = (out[i - 1] + t * out[i]) % p
        out[0] = (t * out[0] + c) % p
    return trim(out)


def format_poly(a: Poly) -> str:
    return "[" + ",".join(str(c) for c in a) + "]"


_LIST_RE = re.compile(r"^\s*\[\s*(.*?)\s*\]\s*$")


def parse_int_list(text: str) -> list[int]:
    """Parse ``[c0,c1,...]`` into ints; brackets are optional."""
    m = _LIST_RE.match(text)
    body = m.group(1) if m else text.strip()
    if not body:
        return []
    return [int(tok) for tok in body.split(",")]


def parse_poly(F: FieldCtx, text: str) -> Poly:
    return from_list(F, parse_int_list(text))
