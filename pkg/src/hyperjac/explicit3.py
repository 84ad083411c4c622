"""Straight-line genus-3 formulas for typical addition, doubling and negation.

Each formula is a fixed sequence of counted field operations, grouped into
steps whose costs are listed in ``*_STEP_COSTS``.  When a typical-case
requirement fails (say, non-coprime inputs or a degenerate ``s``) the formula
gives up at a single exit point and the generic algorithm produces the answer
instead.

Requirements on the curve: genus 3, ``f`` monic of degree 8 with ``f_7 = 0``
(see :func:`hyperjac.curve.normalize`).  On any other model the dispatchers
silently use the generic path.

Costs on the fast path:

=========== ============
addition    I + 79M + 127A
doubling    I + 82M + 127A
negation    I + 14M + 24A
=========== ============
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import generic
from .curve import CurveModel
from .divisor import BalancedDivisor
from .ff import OpCount
from .poly import res_inv_cubic, trim

ADDITION_STEP_COSTS = [
    (0, 15, 12), (0, 10, 30), (1, 18, 6), (0, 4, 15),
    (0, 14, 31), (0, 6, 10), (0, 9, 17), (0, 3, 6),
]
DOUBLING_STEP_COSTS = [
    (0, 15, 9), (0, 11, 24), (0, 10, 28), (1, 17, 7), (0, 4, 12),
    (0, 9, 14), (0, 6, 10), (0, 7, 17), (0, 3, 6),
]
NEGATION_STEP_COSTS = [(0, 3, 5), (1, 8, 14), (0, 3, 5)]

ADDITION_COST = (1, 79, 127)
DOUBLING_COST = (1, 82, 127)
NEGATION_COST = (1, 14, 24)


@dataclass
class TypicalResult:
    result: BalancedDivisor
    used_fast_path: bool
    step_costs: list[OpCount] = field(default_factory=list)
    # the single value handed to the field inversion; a batching driver can
    # merge these across independent calls
    inverted: int | None = None


class _Abort(Exception):
    pass


class _Meter:
    def __init__(self):
        self.ops = OpCount()
        self.steps: list[OpCount] = []
        self._last = OpCount()

    def step(self):
        self.steps.append(self.ops - self._last)
        self._last = self.ops.copy()


def eligible_curve(c: CurveModel) -> bool:
    return c.g == 3 and c.normalized


def _cubic(d):
    """Low coefficients of ``u`` (monic cubic) and ``v`` padded to length 3."""
    u, v = d.u, d.v
    return u[0], u[1], u[2], *(tuple(v) + (0, 0, 0))[:3]


def _typical_shape(d) -> bool:
    return len(d.u) == 4 and d.n == 0


def typical_addition(d1, d2, c: CurveModel, ops: OpCount | None = None) -> TypicalResult:
    ops = ops if ops is not None else OpCount()
    if not (eligible_curve(c) and _typical_shape(d1) and _typical_shape(d2)):
        return TypicalResult(generic.addition(d1, d2, c, ops), False)
    meter = _Meter()
    try:
        res, inverted = _add_formula(c, d1, d2, meter)
    except _Abort:
        ops += meter.ops
        return TypicalResult(generic.addition(d1, d2, c, ops), False, meter.steps)
    ops += meter.ops
    return TypicalResult(res, True, meter.steps, inverted)


def _add_formula(c: CurveModel, d1, d2, meter: _Meter):
    F, o = c.F, meter.ops
    M, A, S, H, D = F.mul, F.add, F.sub, F.halve, F.double

    def Q(a):
        return F.sqr(a, o)

    u10, u11, u12, v10, v11, v12 = _cubic(d1)
    u20, u21, u22, v20, v21, v22 = _cubic(d2)
    f4, f5, f6 = c.fcoeff(4), c.fcoeff(5), c.fcoeff(6)

    # 1. r = Res(u1, u2), i = r/u1 mod u2
    r, i0, i1, i2, w0 = res_inv_cubic(F, u10, u11, u12, u20, u21, u22, o)
    meter.step()

    # 2. q = r(v2 - v1)/u1 mod u2
    t1 = S(v20, v10, o)
    t2 = S(v11, v21, o)
    t3 = S(v12, v22, o)
    t4 = M(t2, i1, o)
    t5 = M(t1, i0, o)
    t6 = M(t3, i2, o)
    t7 = M(u22, t6, o)
    t8 = S(A(A(t4, t6, o), t7, o), M(A(t2, t3, o), A(i1, i2, o), o), o)
    t9 = A(u20, u22, o)
    t10 = M(A(t9, u21, o), S(t8, t6, o), o)
    t11 = M(S(t9, u21, o), A(t8, t6, o), o)
    q0 = S(t5, M(u20, t8, o), o)
    q1 = A(S(A(S(t4, t5, o), H(S(t11, t10, o), o), o), t7, o), M(S(t1, t2, o), A(i0, i1, o), o), o)
    q2 = S(A(S(S(t6, q0, o), t4, o), M(S(t1, t3, o), A(i0, i2, o), o), o), H(A(t10, t11, o), o), o)
    meter.step()

    # 3. one inversion covering r, lc(s~) and 2*vt43
    t1 = A(
        Q(A(r, q1, o)),
        M(q2, S(S(A(M(r, w0, o), M(q2, u21, o), o), M(q1, u22, o), o), q0, o), o),
        o,
    )
    t2 = D(t1, o)
    t3 = M(r, q2, o)
    if t2 == 0 or t3 == 0:
        raise _Abort
    inverted = M(t2, t3, o)
    t4 = F.inv(inverted, o)
    t5 = M(t2, t4, o)
    t6 = M(r, t5, o)
    w1 = M(t5, Q(q2), o)
    w2 = M(r, t6, o)
    w3 = Q(w2)
    w4 = M(Q(t3), t4, o)
    s0 = M(t6, q0, o)
    s1 = M(t6, q1, o)
    vt43 = M(t1, t5, o)
    meter.step()

    # 4. z = s*u1
    t6 = A(s0, s1, o)
    t1 = A(u10, u12, o)
    t2 = M(t6, A(t1, u11, o), o)
    t3 = M(S(t1, u11, o), S(s0, s1, o), o)
    t4 = M(u12, s1, o)
    z0 = M(u10, s0, o)
    z1 = S(H(S(t2, t3, o), o), t4, o)
    z2 = A(S(H(A(t2, t3, o), o), z0, o), u10, o)
    z3 = A(A(u11, s0, o), t4, o)
    z4 = A(u12, s1, o)
    meter.step()

    # 5. u4 = (s(z + 2c v1) - c^2 (f - v1^2)/u1) / u2
    u43 = S(A(z4, s1, o), u22, o)
    t0 = M(s1, z4, o)
    t1 = M(u22, u43, o)
    u42 = S(S(S(A(A(z3, t0, o), s0, o), w3, o), u21, o), t1, o)
    t2 = M(u21, u42, o)
    t3 = S(S(M(A(u21, u22, o), A(u42, u43, o), o), t1, o), t2, o)
    t4 = D(w2, o)
    t5 = M(t4, v12, o)
    t6 = M(s0, z3, o)
    t7 = S(S(M(A(s0, s1, o), A(z3, z4, o), o), t0, o), t6, o)
    u41 = S(S(A(A(A(z2, t7, o), t5, o), M(w3, u12, o), o), u20, o), t3, o)
    u40 = A(A(A(z1, M(s1, A(t5, z2, o), o), o), t6, o), M(t4, v11, o), o)
    u40 = S(u40, M(w3, S(A(f6, Q(u12), o), u11, o), o), o)
    u40 = S(S(S(u40, M(u20, u43, o), o), t2, o), M(u22, u41, o), o)
    meter.step()

    # 6. vt4 = v1 + u4 + (z mod u4)/c
    t1 = A(S(u43, z4, o), w2, o)
    vt40 = A(v10, M(w1, A(z0, M(u40, t1, o), o), o), o)
    vt41 = A(v11, M(w1, A(S(z1, u40, o), M(u41, t1, o), o), o), o)
    vt42 = A(v12, M(w1, A(S(z2, u41, o), M(u42, t1, o), o), o), o)
    meter.step()

    # 7. u5 = (vt4^2 - f)/u4 / (2 vt43)
    u52 = S(A(H(vt43, o), M(w4, S(D(vt42, o), f6, o), o), o), u43, o)
    u51 = S(S(M(w4, S(D(A(vt41, M(vt43, vt42, o), o), o), f5, o), o), M(u52, u43, o), o), u42, o)
    u50 = M(w4, S(A(Q(vt42), D(A(vt40, M(vt43, vt41, o), o), o), o), f4, o), o)
    u50 = S(S(S(u50, M(u51, u43, o), o), M(u52, u42, o), o), u41, o)
    meter.step()

    # 8. v5 = vt4 mod u5
    t1 = S(u52, vt43, o)
    v50 = A(vt40, M(t1, u50, o), o)
    v51 = A(S(vt41, u50, o), M(t1, u51, o), o)
    v52 = A(S(vt42, u51, o), M(t1, u52, o), o)
    meter.step()

    return BalancedDivisor((u50, u51, u52, 1), trim([v50, v51, v52]), 0), inverted


def typical_doubling(d, c: CurveModel, ops: OpCount | None = None) -> TypicalResult:
    ops = ops if ops is not None else OpCount()
    if not (eligible_curve(c) and _typical_shape(d)):
        return TypicalResult(generic.addition(d, d, c, ops), False)
    meter = _Meter()
    try:
        res, inverted = _dbl_formula(c, d, meter)
    except _Abort:
        ops += meter.ops
        return TypicalResult(generic.addition(d, d, c, ops), False, meter.steps)
    ops += meter.ops
    return TypicalResult(res, True, meter.steps, inverted)


def _dbl_formula(c: CurveModel, d, meter: _Meter):
    F, o = c.F, meter.ops
    M, A, S, H, D = F.mul, F.add, F.sub, F.halve, F.double

    def Q(a):
        return F.sqr(a, o)

    u10, u11, u12, v10, v11, v12 = _cubic(d)
    f3, f4, f5, f6 = c.fcoeff(3), c.fcoeff(4), c.fcoeff(5), c.fcoeff(6)

    # 1. r = Res(u1, v1), i = r/v1 mod u1
    w0 = S(v11, M(u12, v12, o), o)
    t2 = S(v10, M(u11, v12, o), o)
    t3 = S(M(u12, w0, o), t2, o)
    t4 = A(M(u10, v12, o), M(u11, w0, o), o)
    i0 = S(M(w0, t4, o), M(t2, t3, o), o)
    i1 = S(M(v11, t3, o), M(v12, t4, o), o)
    i2 = S(M(v11, w0, o), M(v12, t2, o), o)
    r = S(M(v10, i0, o), M(u10, A(M(w0, i2, o), M(v12, i1, o), o), o), o)
    meter.step()

    # 2. p = (f - v1^2)/u1 mod u1
    w1 = Q(u12)
    t2 = D(u10, o)
    t3 = F.small_scale(u11, 3, o)
    w2 = A(w1, f6, o)
    t5 = S(D(t2, o), f5, o)
    t6 = D(u12, o)
    t7 = S(t3, w2, o)
    p2 = S(A(f5, M(t6, S(t7, w1, o), o), o), t2, o)
    p1 = S(S(A(f4, M(u12, t5, o), o), Q(v12), o), M(u11, S(D(f6, o), t3, o), o), o)
    p1 = S(p1, M(w1, A(t7, t3, o), o), o)
    p0 = S(S(f3, M(u11, S(M(w1, t6, o), t5, o), o), o), M(t2, w2, o), o)
    p0 = S(S(p0, M(u12, p1, o), o), D(M(v11, v12, o), o), o)
    meter.step()

    # 3. q = r p / v1 mod u1
    t1 = M(i1, p1, o)
    t2 = M(i0, p0, o)
    t3 = M(i2, p2, o)
    t4 = M(u12, t3, o)
    t5 = S(S(S(M(A(i1, i2, o), A(p1, p2, o), o), t1, o), t3, o), t4, o)
    t6 = M(u10, t5, o)
    t7 = A(u10, u12, o)
    w3 = A(t7, u11, o)
    w4 = S(t7, u11, o)
    t10 = M(w3, A(t3, t5, o), o)
    t11 = M(w4, S(t5, t3, o), o)
    q0 = S(t2, t6, o)
    q1 = S(S(A(A(t4, M(A(i0, i1, o), A(p0, p1, o), o), o), H(S(t11, t10, o), o), o), t1, o), t2, o)
    q2 = A(A(t1, t6, o), M(A(i0, i2, o), A(p0, p2, o), o), o)
    q2 = S(S(S(q2, t2, o), t3, o), H(A(t10, t11, o), o), o)
    meter.step()

    # 4. one inversion covering 2r, lc(s~) and vt43
    t0 = D(r, o)
    t1 = Q(t0)
    t2 = Q(q2)
    t3 = A(S(t1, M(q0, q2, o), o), M(q1, S(A(D(t0, o), q1, o), M(q2, u12, o), o), o), o)
    t3 = A(t3, M(t2, u11, o), o)
    if q2 == 0 or t3 == 0:
        raise _Abort
    inverted = M(M(t0, q2, o), t3, o)
    t4 = F.inv(inverted, o)
    t5 = M(t3, t4, o)
    t6 = M(t0, t5, o)
    w5 = M(t2, t5, o)
    w6 = M(t1, t5, o)
    w7 = M(M(t1, t2, o), t4, o)
    s0 = M(t6, q0, o)
    s1 = M(t6, q1, o)
    vt43 = M(t3, t5, o)
    meter.step()

    # 5. z = s*u1
    t1 = M(w3, A(s0, s1, o), o)
    t2 = M(w4, S(s0, s1, o), o)
    t3 = M(u12, s1, o)
    z0 = M(s0, u10, o)
    z1 = S(H(S(t1, t2, o), o), t3, o)
    z2 = A(S(H(A(t1, t2, o), o), z0, o), u10, o)
    z3 = A(A(u11, s0, o), t3, o)
    z4 = A(u12, s1, o)
    meter.step()

    # 6. u4 = s^2 - (c^2 (f - v1^2)/u1 - 2 c s v1)/u1
    t1 = M(v12, w6, o)
    t2 = Q(w6)
    u43 = D(s1, o)
    u42 = S(A(D(s0, o), Q(s1), o), t2, o)
    u41 = D(A(A(M(s0, s1, o), M(u12, t2, o), o), t1, o), o)
    u40 = A(Q(s0), D(A(M(w0, w6, o), M(s1, t1, o), o), o), o)
    u40 = S(u40, M(t2, A(w2, D(S(w1, u11, o), o), o), o), o)
    meter.step()

    # 7. vt4 = v1 + u4 + (z mod u4)/c
    t1 = A(S(u43, z4, o), w6, o)
    vt40 = A(v10, M(w5, A(z0, M(u40, t1, o), o), o), o)
    vt41 = A(v11, M(w5, A(S(z1, u40, o), M(u41, t1, o), o), o), o)
    vt42 = A(v12, M(w5, A(S(z2, u41, o), M(u42, t1, o), o), o), o)
    meter.step()

    # 8. u5 = (vt4^2 - f)/u4 / (2 vt43)
    u52 = S(A(H(vt43, o), M(w7, S(vt42, H(f6, o), o), o), o), u43, o)
    u51 = S(S(A(vt42, M(w7, S(vt41, H(f5, o), o), o), o), M(u52, u43, o), o), u42, o)
    u50 = A(vt41, M(w7, A(H(S(Q(vt42), f4, o), o), vt40, o), o), o)
    u50 = S(S(S(u50, M(u51, u43, o), o), M(u52, u42, o), o), u41, o)
    meter.step()

    # 9. v5 = vt4 mod u5
    t1 = S(u52, vt43, o)
    v50 = A(vt40, M(t1, u50, o), o)
    v51 = A(S(vt41, u50, o), M(t1, u51, o), o)
    v52 = A(S(vt42, u51, o), M(t1, u52, o), o)
    meter.step()

    return BalancedDivisor((u50, u51, u52, 1), trim([v50, v51, v52]), 0), inverted


def typical_negation(d, c: CurveModel, ops: OpCount | None = None) -> TypicalResult:
    ops = ops if ops is not None else OpCount()
    if not (eligible_curve(c) and _typical_shape(d)):
        return TypicalResult(generic.negation(d, c, ops), False)
    meter = _Meter()
    try:
        res, inverted = _neg_formula(c, d, meter)
    except _Abort:
        ops += meter.ops
        return TypicalResult(generic.negation(d, c, ops), False, meter.steps)
    ops += meter.ops
    return TypicalResult(res, True, meter.steps, inverted)


def _neg_formula(c: CurveModel, d, meter: _Meter):
    F, o = c.F, meter.ops
    M, A, S, D = F.mul, F.add, F.sub, F.double
    u10, u11, u12, v10, v11, v12 = _cubic(d)
    f3, f4, f5, f6 = c.fcoeff(3), c.fcoeff(4), c.fcoeff(5), c.fcoeff(6)

    # 1. vt1 = v1 - V + (V mod u1) = -x^4 + vt12 x^2 + vt11 x + vt10
    vt12 = A(S(v12, u11, o), F.sqr(u12, o), o)
    vt11 = A(S(v11, u10, o), M(u11, u12, o), o)
    vt10 = A(v10, M(u10, u12, o), o)
    meter.step()

    # 2. u2 = (f - vt1^2)/u1 / (f6 + 2 vt12)
    t1 = D(vt12, o)
    t2 = A(f6, t1, o)
    if t2 == 0:
        raise _Abort
    t3 = F.inv(t2, o)
    u22 = S(M(t3, A(f5, D(vt11, o), o), o), u12, o)
    u21 = S(S(M(t3, S(A(f4, D(vt10, o), o), F.sqr(vt12, o), o), o), u11, o), M(u12, u22, o), o)
    u20 = S(S(M(t3, S(f3, M(t1, vt11, o), o), o), u10, o), M(u11, u22, o), o)
    u20 = S(u20, M(u12, u21, o), o)
    meter.step()

    # 3. v2 = vt1 mod u2
    v22 = A(S(vt12, F.sqr(u22, o), o), u21, o)
    v21 = A(S(vt11, M(u21, u22, o), o), u20, o)
    v20 = S(vt10, M(u20, u22, o), o)
    meter.step()

    return BalancedDivisor((u20, u21, u22, 1), trim([v20, v21, v22]), 0), t2


def add(d1, d2, c: CurveModel, ops: OpCount | None = None) -> BalancedDivisor:
    """Group law, routed to the doubling or addition formula with generic fallback."""
    if d1 == d2:
        return typical_doubling(d1, c, ops).result
    return typical_addition(d1, d2, c, ops).result


def double(d, c: CurveModel, ops: OpCount | None = None) -> BalancedDivisor:
    return typical_doubling(d, c, ops).result


def negate(d, c: CurveModel, ops: OpCount | None = None) -> BalancedDivisor:
    return typical_negation(d, c, ops).result


def scalar_mul(k: int, d, c: CurveModel, ops: OpCount | None = None) -> BalancedDivisor:
    return generic.scalar_mul(k, d, c, ops, add=add, neg=negate)
