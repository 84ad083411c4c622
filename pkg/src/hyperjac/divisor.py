"""Balanced divisor representatives ``(u, v, n)``.

A reduced triple stands for ``div[u,v] + n*P + (g - deg u - n)*Pbar - D_inf``
with ``D_inf = ceil(g/2)*P + floor(g/2)*Pbar`` supported on the two points at
infinity.  Each rational class has exactly one such triple, so class equality
is plain tuple equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import poly as P
from .curve import CurveModel
from .errors import ConjugatePair, DuplicateX, HyperJacError, InvalidDivisor, PointNotOnCurve


@dataclass(frozen=True)
class BalancedDivisor:
    u: tuple
    v: tuple
    n: int

    @property
    def deg(self) -> int:
        return len(self.u) - 1

    def __str__(self) -> str:
        return format_divisor(self)


@dataclass(frozen=True)
class SemiReducedDivisor:
    """Intermediate ``div[u,v,n]*``: weight ``2g - deg u - n`` sits on Pbar, minus ``2*D_inf``."""

    u: tuple
    v: tuple
    n: int

    @property
    def deg(self) -> int:
        return len(self.u) - 1

    def __str__(self) -> str:
        return format_divisor(self)


def ceil_half(g: int) -> int:
    return (g + 1) // 2


def identity(c: CurveModel) -> BalancedDivisor:
    return BalancedDivisor(P.ONE, P.ZERO, ceil_half(c.g))


def validate(d, c: CurveModel, kind: str | None = None) -> list[str]:
    """Return the list of violated invariants (empty when ``d`` is valid).

    ``kind`` is ``"reduced"`` or ``"semi-reduced"``; by default it follows the
    type of ``d``.
    """
    if kind is None:
        kind = "semi-reduced" if isinstance(d, SemiReducedDivisor) else "reduced"
    F, g = c.F, c.g
    problems = []
    u, v, n = d.u, d.v, d.n
    if not P.is_monic(u):
        problems.append("u is not monic")
        return problems
    du = len(u) - 1
    if any(not 0 <= x < F.p for x in u + v):
        problems.append("coefficients not reduced mod p")
    if v and v[-1] == 0:
        problems.append("v is not trimmed")
    if len(v) > du:
        problems.append(f"deg v = {len(v) - 1} is not < deg u = {du}")
    if P.mod(F, P.sub(F, c.f, P.sqr(F, v)), u):
        problems.append("u does not divide f - v^2")
    bound = g if kind == "reduced" else 2 * g
    if du > bound:
        problems.append(f"deg u = {du} exceeds {bound}")
    if not 0 <= n <= bound - du:
        problems.append(f"n = {n} outside [0, {bound - du}]")
    return problems


def is_valid(d, c: CurveModel, kind: str | None = None) -> bool:
    return not validate(d, c, kind)


def from_points(points, c: CurveModel) -> BalancedDivisor:
    """Mumford pair through distinct-x affine points, with ``n = 0``."""
    F = c.F
    pts = [(x % F.p, y % F.p) for x, y in points]
    xs = [x for x, _ in pts]
    for x, y in pts:
        if y * y % F.p != P.evaluate(F, c.f, x):
            raise PointNotOnCurve(f"({x}, {y}) is not on the curve")
    if len(set(xs)) != len(xs):
        dup = {x for x in xs if xs.count(x) > 1}
        same_y = {}
        for x, y in pts:
            if x in dup:
                if x in same_y and same_y[x] != y:
                    raise ConjugatePair(f"points over x={x} are conjugate")
                same_y[x] = y
        raise DuplicateX(f"repeated x-coordinates {sorted(dup)}")
    if len(pts) > c.g:
        raise InvalidDivisor(f"at most g={c.g} points allowed")
    u = P.ONE
    for x in xs:
        u = P.mul(F, u, (-x % F.p, 1))
    # Lagrange interpolation
    v = P.ZERO
    for i, (xi, yi) in enumerate(pts):
        num, den = P.ONE, 1
        for j, xj in enumerate(xs):
            if j != i:
                num = P.mul(F, num, (-xj % F.p, 1))
                den = den * (xi - xj) % F.p
        v = P.add(F, v, P.scale(F, num, yi * pow(den, -1, F.p)))
    return BalancedDivisor(u, v, 0)


def points_of(d, c: CurveModel) -> list[tuple[int, int]] | None:
    """Affine points of ``d`` when ``u`` splits into distinct rational roots, else ``None``."""
    F = c.F
    roots = [x for x in range(F.p) if P.evaluate(F, d.u, x) == 0] if F.p <= 5000 else None
    if roots is None or len(roots) != len(d.u) - 1:
        return None
    return [(x, P.evaluate(F, d.v, x)) for x in roots]


def random_element(c: CurveModel, rng, degree: int | None = None) -> BalancedDivisor:
    """Random class built from ``degree`` (default ``g``) random affine points.

    Samples distinct x with ``f(x)`` a square and a random sign of the root;
    falls back to fewer points only if the curve has too few.
    """
    F = c.F
    k = c.g if degree is None else degree
    while k > 0:
        xs, pts = set(), []
        for _ in range(64 * k + 64):
            x = rng.randrange(F.p)
            if x in xs:
                continue
            fx = P.evaluate(F, c.f, x)
            if not F.is_square(fx):
                continue
            y = F.sqrt(fx)
            if rng.random() < 0.5:
                y = -y % F.p
            xs.add(x)
            pts.append((x, y))
            if len(pts) == k:
                return from_points(pts, c)
        k -= 1
    return BalancedDivisor(P.ONE, P.ZERO, rng.randrange(c.g + 1))


def format_divisor(d) -> str:
    return f"u={P.format_poly(d.u)}; v={P.format_poly(d.v)}; n={d.n}"


_DIV_RE = re.compile(r"^\s*u\s*=\s*(\[.*?\])\s*;\s*v\s*=\s*(\[.*?\])\s*;\s*n\s*=\s*(-?\d+)\s*$")


def parse_divisor(text: str, c: CurveModel, check: bool = True) -> BalancedDivisor:
    m = _DIV_RE.match(text)
    if not m:
        raise HyperJacError(f"cannot parse divisor {text!r}")
    d = BalancedDivisor(P.parse_poly(c.F, m.group(1)), P.parse_poly(c.F, m.group(2)), int(m.group(3)))
    if check:
        problems = validate(d, c, "reduced")
        if problems:
            raise InvalidDivisor("; ".join(problems))
    return d
