"""Curve models ``y^2 = f(x)`` with ``f`` monic of degree ``2g+2``."""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Sequence

from . import poly as P
from .errors import BadDegree, HyperJacError, NotMonic, NotSeparable
from .ff import FieldCtx, OpCount


@dataclass(frozen=True)
class CurveModel:
    F: FieldCtx
    g: int
    f: tuple
    V: tuple
    shift: int = 0

    @property
    def p(self) -> int:
        return self.F.p

    @property
    def normalized(self) -> bool:
        return P.coeff(self.f, 2 * self.g + 1) == 0

    def fcoeff(self, i: int) -> int:
        return P.coeff(self.f, i)

    def __str__(self) -> str:
        return format_curve(self)


def precompute_V(F: FieldCtx, f: tuple, g: int, ops: OpCount | None = None) -> tuple:
    """The monic ``V`` of degree ``g+1`` with ``deg(f - V^2) <= g``.

    Solves for ``V_g, ..., V_0`` top-down; the coefficient of ``x^(g+1+i)`` in
    ``V^2`` is ``2*V_i`` plus cross terms in the already-known ``V_j``, j > i.
    """
    ops = ops if ops is not None else OpCount()
    V = [0] * (g + 2)
    V[g + 1] = 1
    for i in range(g, -1, -1):
        c = P.coeff(f, g + 1 + i)
        for j in range(i + 1, g + 1):
            c = F.sub(c, F.mul(V[j], V[g + 1 + i - j], ops), ops)
        V[i] = F.halve(c, ops)
    return P.trim(V)


def new_curve(F: FieldCtx, g: int, coeffs: Sequence[int]) -> CurveModel:
    if g < 2:
        raise BadDegree(f"genus must be at least 2, got {g}")
    if len(coeffs) != 2 * g + 3:
        raise BadDegree(f"expected {2 * g + 3} coefficients for genus {g}, got {len(coeffs)}")
    f = P.from_list(F, coeffs)
    if len(f) != 2 * g + 3 or f[-1] != 1:
        raise NotMonic(f"leading coefficient must be 1, got {coeffs[-1] % F.p}")
    if P.gcd(F, f, P.derivative(F, f)) != P.ONE:
        raise NotSeparable("f has a repeated root: gcd(f, f') != 1")
    return CurveModel(F, g, f, precompute_V(F, f, g))


def normalize(c: CurveModel) -> CurveModel:
    """Translate ``x`` so the ``x^(2g+1)`` coefficient vanishes.

    The new model is ``f(x - t)`` with ``t = f_{2g+1}/(2g+2)``; ``shift``
    accumulates ``t`` so that divisors move over with :func:`transport_divisor`.
    """
    F, g = c.F, c.g
    top = c.fcoeff(2 * g + 1)
    if top == 0:
        return c
    if (2 * g + 2) % F.p == 0:
        raise HyperJacError(f"cannot normalize: p divides {2 * g + 2}")
    t = top * pow(2 * g + 2, -1, F.p) % F.p
    f = P.taylor_shift(F, c.f, -t % F.p)
    return CurveModel(F, g, f, precompute_V(F, f, g), (c.shift + t) % F.p)


def transport_divisor(d, c_or_F, shift: int):
    """Move a divisor along ``x -> x + shift`` (``u(x) -> u(x - shift)``)."""
    F = c_or_F.F if isinstance(c_or_F, CurveModel) else c_or_F
    if shift % F.p == 0:
        return d
    back = -shift % F.p
    return replace(d, u=P.taylor_shift(F, d.u, back), v=P.taylor_shift(F, d.v, back))


def random_curve(F: FieldCtx, g: int, rng, normalized: bool = True) -> CurveModel:
    """A random separable monic model, by default with ``f_{2g+1} = 0``."""
    while True:
        coeffs = [rng.randrange(F.p) for _ in range(2 * g + 2)] + [1]
        if normalized:
            coeffs[2 * g + 1] = 0
        try:
            return new_curve(F, g, coeffs)
        except NotSeparable:
            continue


def format_curve(c: CurveModel) -> str:
    return f"p={c.p}; g={c.g}; f={P.format_poly(c.f)}"


_CURVE_RE = re.compile(r"^\s*p\s*=\s*(\d+)\s*;\s*g\s*=\s*(\d+)\s*;\s*f\s*=\s*(\[.*\])\s*$")


def parse_curve(text: str) -> CurveModel:
    m = _CURVE_RE.match(text)
    if not m:
        raise HyperJacError(f"cannot parse curve description {text!r}")
    F = FieldCtx(int(m.group(1)))
    g = int(m.group(2))
    return new_curve(F, g, P.parse_int_list(m.group(3)))
