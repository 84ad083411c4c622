"""Quick oracle-equivalence and invariant checks, used by ``hyperjac selftest``."""

from __future__ import annotations

import random

from . import curve as C
from . import divisor as D
from . import explicit3, generic
from . import poly as P
from .ff import FieldCtx


def _check_precompute(rng, primes, n):
    for p in primes:
        F = FieldCtx(p)
        for _ in range(n):
            c = C.random_curve(F, 3, rng, normalized=rng.random() < 0.5)
            if len(P.sub(F, c.f, P.sqr(F, c.V))) - 1 > c.g:
                return False
            if c.normalized and P.coeff(c.V, 3) != 0:
                return False
    return True


def _check_equivalence(rng, primes, n):
    for p in primes:
        c = C.random_curve(FieldCtx(p), 3, rng)
        x = D.random_element(c, rng)
        for _ in range(n):
            y = D.random_element(c, rng)
            s = explicit3.add(x, y, c)
            if s != generic.addition(x, y, c) or not D.is_valid(s, c):
                return False
            if explicit3.double(x, c) != generic.addition(x, x, c):
                return False
            if explicit3.negate(x, c) != generic.negation(x, c):
                return False
            x = s
    return True


def _check_axioms(rng, primes, n):
    for p in primes:
        c = C.random_curve(FieldCtx(p), 3, rng)
        e = D.identity(c)
        for _ in range(n):
            a, b, x = (D.random_element(c, rng) for _ in range(3))
            for add, neg in ((generic.addition, generic.negation), (explicit3.add, explicit3.negate)):
                if add(a, b, c) != add(b, a, c):
                    return False
                if add(add(a, b, c), x, c) != add(a, add(b, x, c), c):
                    return False
                if add(a, e, c) != a or add(a, neg(a, c), c) != e or neg(neg(a, c), c) != a:
                    return False
    return True


def _check_costs(rng, n):
    c = C.random_curve(FieldCtx(65537), 3, rng)
    for _ in range(n):
        a, b = D.random_element(c, rng), D.random_element(c, rng)
        for res, steps in (
            (explicit3.typical_addition(a, b, c), explicit3.ADDITION_STEP_COSTS),
            (explicit3.typical_doubling(a, c), explicit3.DOUBLING_STEP_COSTS),
            (explicit3.typical_negation(a, c), explicit3.NEGATION_STEP_COSTS),
        ):
            if res.used_fast_path and [s.as_tuple() for s in res.step_costs] != steps:
                return False
    return True


def run(seed: int = 0, n: int = 50) -> list[tuple[str, bool]]:
    rng = random.Random(seed)
    primes = (101, 1009, 65537)
    return [
        ("precompute", _check_precompute(rng, (13, 101, 1009), n)),
        ("oracle-equivalence", _check_equivalence(rng, primes, n)),
        ("group-axioms", _check_axioms(rng, primes, max(n // 5, 1))),
        ("fast-path-costs", _check_costs(rng, n)),
    ]
