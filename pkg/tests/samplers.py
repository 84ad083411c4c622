"""Input generators shared by the explicit-formula and acceptance tests."""

from __future__ import annotations

from hyperjac import curve as C
from hyperjac import divisor as D
from hyperjac import generic as G
from hyperjac import poly as P


def curve_with_root(F, rng):
    """Normalized genus-3 curve f = (x - a) h with a known rational root ``a``."""
    while True:
        a = rng.randrange(F.p)
        h = [rng.randrange(F.p) for _ in range(6)] + [a, 1]  # h6 = a forces f7 = 0
        f = P.mul(F, (-a % F.p, 1), P.from_list(F, h))
        try:
            return C.new_curve(F, 3, list(f)), a
        except Exception:
            continue


def affine_points(c, rng, k, avoid=()):
    """``k`` random affine points with distinct x, nonzero y, x not in ``avoid``."""
    xs, pts = set(avoid), []
    while len(pts) < k:
        x = rng.randrange(c.p)
        if x in xs:
            continue
        fx = P.evaluate(c.F, c.f, x)
        if fx == 0 or not c.F.is_square(fx):
            continue
        y = c.F.sqrt(fx)
        xs.add(x)
        pts.append((x, y if rng.random() < 0.5 else -y % c.p))
    return pts


def degenerate_pairs(c, rng, root=None):
    """Adversarial operand pairs: identity, equal, shared roots, Weierstrass x, low degree, n > 0."""
    e = D.identity(c)
    out = [(e, e)]
    for _ in range(4):
        d = D.random_element(c, rng)
        out += [(d, e), (e, d), (d, d), (d, G.negation(d, c)), (G.negation(d, c), d)]
        for deg in range(3):
            for n in range(3 - deg + 1):
                low = D.random_element(c, rng, deg)
                low = D.BalancedDivisor(low.u, low.v, n)
                out += [(low, d), (d, low), (low, low), (low, e)]
        p1, p2, p3, p4, p5 = affine_points(c, rng, 5)
        conj = (p1[0], -p1[1] % c.p)
        shared = D.from_points([p1, p2, p3], c)
        out += [
            (shared, D.from_points([p1, p4, p5], c)),
            (shared, D.from_points([conj, p4, p5], c)),
            (shared, D.from_points([p1, p2, p4], c)),
            (shared, D.from_points([conj, (p2[0], -p2[1] % c.p), p4], c)),
            (shared, D.from_points([conj, (p2[0], -p2[1] % c.p), (p3[0], -p3[1] % c.p)], c)),
        ]
        if root is not None:
            w = (root, 0)
            q1, q2 = affine_points(c, rng, 2, avoid=(root,))
            weier = D.from_points([w, q1, q2], c)
            out += [
                (weier, weier),
                (weier, d),
                (weier, D.from_points([w, *affine_points(c, rng, 2, avoid=(root,))], c)),
                (D.from_points([w], c), D.from_points([w], c)),
                (D.from_points([w], c), weier),
            ]
    return out


def degenerate_singles(c, rng, root=None):
    seen = []
    for a, b in degenerate_pairs(c, rng, root):
        seen += [a, b]
    return seen
