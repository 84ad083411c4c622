"""L-polynomials by naive point counting, and BSGS in the Jacobian.

``#C(F_{p^r})`` is counted by brute force over all x in ``F_{p^r}``
(vectorized with numpy), then ``L_p(T)`` follows from Newton's identities
and the functional equation.  ``L_p(1)`` is the order of the Jacobian, which
:func:`bsgs_annihilate` and the end-to-end tests check against the group
law.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from . import explicit3, generic
from . import poly as P
from .curve import CurveModel
from .divisor import format_divisor, identity
from .errors import BudgetExceeded, HyperJacError, NotFound
from .ff import FieldCtx, OpCount

COUNT_BUDGET = 500**3
BSGS_BUDGET = 10**8
CHUNK = 1 << 18


@dataclass(frozen=True)
class ExtField:
    """``F_{p^r} = F_p[t]/(modulus)`` for ``r`` in {1, 2, 3}."""

    base: FieldCtx
    r: int
    modulus: tuple

    @classmethod
    def build(cls, F: FieldCtx, r: int) -> ExtField:
        """Use the least monic irreducible of degree ``r``.

        Candidates ``t^r + c_{r-1} t^{r-1} + ... + c_0`` are ordered by
        ``(c_{r-1}, ..., c_0)`` lexicographically.
        """
        if r not in (1, 2, 3):
            raise ValueError("extension degree must be 1, 2 or 3")
        for high_first in product(range(F.p), repeat=r):
            m = tuple(reversed(high_first)) + (1,)
            if r == 1 or not any(P.evaluate(F, m, x) == 0 for x in range(F.p)):
                return cls(F, r, m)
        raise HyperJacError("no irreducible polynomial found")  # unreachable

    @property
    def q(self) -> int:
        return self.base.p**self.r

    def elements(self, start: int, stop: int) -> np.ndarray:
        """Elements with indices in ``[start, stop)`` as an ``(r, N)`` array; index = sum a_i p^i."""
        p = self.base.p
        k = np.arange(start, stop, dtype=np.int64)
        out = np.empty((self.r, stop - start), dtype=np.int64)
        for i in range(self.r):
            out[i] = k % p
            k //= p
        return out

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p, r, m = self.base.p, self.r, self.modulus
        prod = [np.zeros(a.shape[1:], dtype=np.int64) for _ in range(2 * r - 1)]
        for i in range(r):
            for j in range(r):
                prod[i + j] += a[i] * b[j]
        prod = [c % p for c in prod]
        for k in range(2 * r - 2, r - 1, -1):
            top = prod[k]
            for i in range(r):
                if m[i]:
                    prod[k - r + i] = (prod[k - r + i] - top * m[i]) % p
        return np.stack(prod[:r])

    def pow(self, a: np.ndarray, e: int) -> np.ndarray:
        result = np.zeros_like(a)
        result[0] = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def norm(self, a: np.ndarray) -> np.ndarray:
        """Norm to F_p: determinant of multiplication by ``a``."""
        p, r = self.base.p, self.r
        if r == 1:
            return a[0] % p
        cols = [a]
        t = np.zeros_like(a)
        t[1] = 1
        for _ in range(r - 1):
            cols.append(self.mul(cols[-1], t))
        m = [[cols[j][i] for j in range(r)] for i in range(r)]
        if r == 2:
            return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % p
        det = (
            m[0][0] * ((m[1][1] * m[2][2] - m[1][2] * m[2][1]) % p)
            - m[0][1] * ((m[1][0] * m[2][2] - m[1][2] * m[2][0]) % p)
            + m[0][2] * ((m[1][0] * m[2][1] - m[1][1] * m[2][0]) % p)
        )
        return det % p

    def evaluate(self, f: tuple, x: np.ndarray) -> np.ndarray:
        acc = np.zeros_like(x)
        for c in reversed(f):
            acc = self.mul(acc, x)
            acc[0] = (acc[0] + c) % self.base.p
        return acc


def _square_table(p: int) -> np.ndarray:
    chi = -np.ones(p, dtype=np.int64)
    chi[(np.arange(1, p, dtype=np.int64) ** 2) % p] = 1
    chi[0] = 0
    return chi


def _chi_sum(K: ExtField, f: tuple, start: int, stop: int, method: str) -> int:
    p = K.base.p
    fx = K.evaluate(f, K.elements(start, stop))
    if method == "euler":
        y = K.pow(fx, (K.q - 1) // 2)
        zero = ~fx.any(axis=0)
        one = (y[0] == 1) & ~y[1:].any(axis=0)
        # y is 1 on squares, -1 on non-squares, 0 at zero
        return int(np.count_nonzero(one) - (fx.shape[1] - np.count_nonzero(one) - np.count_nonzero(zero)))
    table = _square_table(p)
    return int(table[K.norm(fx)].sum())


def count_points(c: CurveModel, r: int, method: str = "auto", threads: int = 1, chunk: int = CHUNK) -> int:
    """``#C(F_{p^r})``: both points at infinity plus ``1 + chi(f(x))`` per x.

    ``method``: ``"euler"`` uses Euler's criterion in ``F_{p^r}``; ``"table"``
    maps ``f(x)`` to F_p by the norm and looks up a table of squares.
    ``"auto"`` is the table for ``r = 1`` and Euler otherwise.
    """
    K = ExtField.build(c.F, r)
    if K.q > COUNT_BUDGET:
        raise BudgetExceeded(f"p^{r} = {K.q} exceeds the counting budget {COUNT_BUDGET}")
    if method == "auto":
        method = "table" if r == 1 else "euler"
    if method not in ("euler", "table"):
        raise ValueError(f"unknown method {method!r}")
    bounds = [(s, min(s + chunk, K.q)) for s in range(0, K.q, chunk)]
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(lambda b: _chi_sum(K, c.f, *b, method), bounds))
    else:
        parts = [_chi_sum(K, c.f, s, e, method) for s, e in bounds]
    return 2 + K.q + sum(parts)


@dataclass(frozen=True)
class LPolynomial:
    """``L_p(T) = 1 + a_1 T + ... + a_{2g} T^{2g}``, coefficients low-to-high."""

    coeffs: tuple
    p: int

    @property
    def g(self) -> int:
        return (len(self.coeffs) - 1) // 2

    def __call__(self, T: int) -> int:
        return sum(a * T**i for i, a in enumerate(self.coeffs))

    @property
    def order(self) -> int:
        return self(1)

    def satisfies_functional_equation(self) -> bool:
        g, a = self.g, self.coeffs
        return a[0] == 1 and all(a[2 * g - i] == self.p ** (g - i) * a[i] for i in range(g + 1))

    def weil_interval(self) -> tuple[int, int]:
        return weil_interval(self.p, self.g)

    def __str__(self) -> str:
        return "Lp=[" + ",".join(str(a) for a in self.coeffs) + f"]; order={self.order}"


def weil_interval(p: int, g: int) -> tuple[int, int]:
    """``[ceil((sqrt(p)-1)^(2g)), floor((sqrt(p)+1)^(2g))]``, exactly.

    ``(p + 1 - 2 sqrt(p))^g = X - Y sqrt(p)`` with integers ``X, Y >= 0``, and
    ``Y sqrt(p) = sqrt(Y^2 p)``, so both ends reduce to one ``isqrt``.
    """
    X, Y = 1, 0
    for _ in range(g):
        X, Y = X * (p + 1) + 2 * p * Y, 2 * X + (p + 1) * Y
    s = math.isqrt(Y * Y * p)
    return X - s, X + s


def lpoly_from_counts(counts: list[int], p: int) -> LPolynomial:
    """``L_p`` from ``[#C(F_p), ..., #C(F_{p^g})]`` via Newton's identities."""
    g = len(counts)
    s = [None] + [p**k + 1 - n for k, n in enumerate(counts, start=1)]
    e = [Fraction(1)]
    for k in range(1, g + 1):
        e.append(sum((-1) ** (i - 1) * e[k - i] * s[i] for i in range(1, k + 1)) / k)
    if any(x.denominator != 1 for x in e):
        raise HyperJacError(f"point counts {counts} are inconsistent (non-integral L-polynomial)")
    a = [(-1) ** k * int(e[k]) for k in range(g + 1)]
    a += [p ** (g - k) * a[k] for k in range(g - 1, -1, -1)]
    return LPolynomial(tuple(a), p)


def counts_from_lpoly(L: LPolynomial, rmax: int) -> list[int]:
    """Inverse of :func:`lpoly_from_counts`: ``#C(F_{p^r})`` for ``r = 1..rmax``."""
    p, a = L.p, L.coeffs
    e = [(-1) ** k * a[k] if k < len(a) else 0 for k in range(rmax + 1)]
    s = [None]
    for k in range(1, rmax + 1):
        acc = k * e[k] - sum((-1) ** (i - 1) * e[k - i] * s[i] for i in range(1, k))
        s.append((-1) ** (k - 1) * acc)
    return [p**k + 1 - s[k] for k in range(1, rmax + 1)]


def lpolynomial(c: CurveModel, threads: int = 1) -> LPolynomial:
    counts = [count_points(c, r, threads=threads) for r in range(1, c.g + 1)]
    return lpoly_from_counts(counts, c.p)


def _key(d) -> bytes:
    return format_divisor(d).encode()


def bsgs_annihilate(d, c: CurveModel, interval: tuple[int, int], ops: OpCount | None = None, add=None, neg=None) -> int:
    """Least ``m`` in ``[lo, hi]`` with ``m*d = 0``, in ``O(sqrt(hi - lo))`` group operations.

    Group operations default to the explicit genus-3 dispatchers (which fall
    back to the generic algorithms on other curves).  The answer is
    re-checked with an independent generic scalar multiplication.
    """
    ops = ops if ops is not None else OpCount()
    add = add or explicit3.add
    neg = neg or explicit3.negate
    lo, hi = interval
    if lo < 0 or hi < lo:
        raise ValueError(f"bad interval [{lo}, {hi}]")
    width = hi - lo
    if width > BSGS_BUDGET:
        raise BudgetExceeded(f"interval width {width} exceeds {BSGS_BUDGET}")
    e = identity(c)
    steps = math.isqrt(width) + 1
    baby = {}
    x = e
    for j in range(steps):
        baby.setdefault(_key(x), j)
        x = add(x, d, c, ops)
    # x == steps*d; giant stride is -steps*d
    stride = neg(x, c, ops)
    target = neg(generic.scalar_mul(lo, d, c, ops, add=add, neg=neg), c, ops)
    for i in range(width // steps + 1):
        j = baby.get(_key(target))
        if j is not None:
            k = i * steps + j
            if k > width:
                break
            m = lo + k
            if generic.scalar_mul(m, d, c) != e:
                raise HyperJacError("bsgs produced a non-annihilating scalar (internal error)")
            return m
        target = add(target, stride, c, ops)
    raise NotFound(f"no multiple of the order of {format_divisor(d)} in [{lo}, {hi}]")
