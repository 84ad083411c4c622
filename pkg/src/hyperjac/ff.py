"""Prime field arithmetic with I/M/A operation accounting.

Field elements are plain ``int`` residues in ``[0, p)``.  Every operation takes
an :class:`OpCount` accumulator owned by the caller and bumps the relevant
tally:

* ``inv`` -- field inversions (I)
* ``mul`` -- general products and squarings (M)
* ``add`` -- additions, subtractions, negations, doublings, halvings and
  multiplications by the small constants 2 and 3 (A)

Multiplication by 1 and addition of the constant 0 are never counted; callers
simply skip those operations.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import isprime
from sympy.ntheory import sqrt_mod

from .errors import EvenCharacteristic, NotPrime, ZeroInverse


@dataclass
class OpCount:
    inv: int = 0
    mul: int = 0
    add: int = 0

    def __add__(self, other: OpCount) -> OpCount:
        return OpCount(self.inv + other.inv, self.mul + other.mul, self.add + other.add)

    def __sub__(self, other: OpCount) -> OpCount:
        return OpCount(self.inv - other.inv, self.mul - other.mul, self.add - other.add)

    def __iadd__(self, other: OpCount) -> OpCount:
        self.inv += other.inv
        self.mul += other.mul
        self.add += other.add
        return self

    def copy(self) -> OpCount:
        return OpCount(self.inv, self.mul, self.add)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.inv, self.mul, self.add)

    def __str__(self) -> str:
        return f"I={self.inv} M={self.mul} A={self.add}"


@dataclass(frozen=True)
class FieldCtx:
    """The prime field F_p for an odd prime ``p``."""

    p: int

    def __post_init__(self):
        if self.p == 2:
            raise EvenCharacteristic("characteristic 2 is not supported")
        if self.p < 3 or not isprime(self.p):
            raise NotPrime(f"p={self.p} is not an odd prime")

    def __call__(self, x: int) -> int:
        return x % self.p

    def add(self, a: int, b: int, ops: OpCount) -> int:
        ops.add += 1
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a: int, b: int, ops: OpCount) -> int:
        ops.add += 1
        s = a - b
        return s + self.p if s < 0 else s

    def neg(self, a: int, ops: OpCount) -> int:
        ops.add += 1
        return self.p - a if a else 0

    def mul(self, a: int, b: int, ops: OpCount) -> int:
        ops.mul += 1
        return a * b % self.p

    def sqr(self, a: int, ops: OpCount) -> int:
        ops.mul += 1
        return a * a % self.p

    def inv(self, a: int, ops: OpCount) -> int:
        if a % self.p == 0:
            raise ZeroInverse()
        ops.inv += 1
        return pow(a, -1, self.p)

    def halve(self, a: int, ops: OpCount) -> int:
        ops.add += 1
        return a >> 1 if a & 1 == 0 else (a + self.p) >> 1

    def small_scale(self, a: int, c: int, ops: OpCount) -> int:
        """``c*a`` for ``c`` in {2, 3}, costed as ``c-1`` additions."""
        if c not in (2, 3):
            raise ValueError("small_scale only supports the constants 2 and 3")
        ops.add += c - 1
        return c * a % self.p

    def double(self, a: int, ops: OpCount) -> int:
        return self.small_scale(a, 2, ops)

    def batch_invert(self, values: list[int], ops: OpCount) -> list[int]:
        """Montgomery's trick: one inversion and ``3(n-1)`` multiplications."""
        n = len(values)
        if n == 0:
            return []
        for i, a in enumerate(values):
            if a % self.p == 0:
                raise ZeroInverse(f"value at index {i} is zero", index=i)
        prefix = [values[0]]
        for a in values[1:]:
            prefix.append(self.mul(prefix[-1], a, ops))
        acc = self.inv(prefix[-1], ops)
        out = [0] * n
        for i in range(n - 1, 0, -1):
            out[i] = self.mul(acc, prefix[i - 1], ops)
            acc = self.mul(acc, values[i], ops)
        out[0] = acc
        return out

    # uncounted helpers, used outside the costed formulas

    def is_square(self, a: int) -> bool:
        a %= self.p
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a: int) -> int | None:
        a %= self.p
        if a == 0:
            return 0
        return sqrt_mod(a, self.p)
