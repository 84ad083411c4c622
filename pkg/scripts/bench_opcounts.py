"""Operation counts and timings of the explicit formulas against the generic path.

    python3 scripts/bench_opcounts.py --primes 101 65537 --n 2000
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass, field

from hyperjac import curve as C
from hyperjac import divisor as D
from hyperjac import explicit3 as E
from hyperjac import generic as G
from hyperjac.ff import FieldCtx, OpCount


@dataclass
class BenchConfig:
    primes: list[int] = field(default_factory=lambda: [101, 1009, 65537, 2**31 - 1])
    n: int = 2000
    seed: int = 0


OPS = {
    "addition": (lambda a, b, c, o: E.typical_addition(a, b, c, o), lambda a, b, c, o: G.addition(a, b, c, o)),
    "doubling": (lambda a, b, c, o: E.typical_doubling(a, c, o), lambda a, b, c, o: G.double(a, c, o)),
    "negation": (lambda a, b, c, o: E.typical_negation(a, c, o), lambda a, b, c, o: G.negation(a, c, o)),
}


def bench(cfg: BenchConfig):
    rows = []
    for p in cfg.primes:
        rng = random.Random(cfg.seed + p)
        c = C.random_curve(FieldCtx(p), 3, rng)
        inputs = [(D.random_element(c, rng), D.random_element(c, rng)) for _ in range(cfg.n)]
        for name, (fast_fn, ref_fn) in OPS.items():
            fast_ops, ref_ops, fast = OpCount(), OpCount(), 0
            t0 = time.perf_counter()
            for a, b in inputs:
                fast += fast_fn(a, b, c, fast_ops).used_fast_path
            t1 = time.perf_counter()
            for a, b in inputs:
                ref_fn(a, b, c, ref_ops)
            t2 = time.perf_counter()
            n = cfg.n
            rows.append((p, name, fast / n, fast_ops, ref_ops, (t1 - t0) / n * 1e6, (t2 - t1) / n * 1e6))
    return rows


def mean(ops: OpCount, n: int) -> str:
    return f"{ops.inv / n:.2f}I+{ops.mul / n:.1f}M+{ops.add / n:.1f}A"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=BenchConfig().primes)
    ap.add_argument("--n", type=int, default=BenchConfig.n)
    ap.add_argument("--seed", type=int, default=BenchConfig.seed)
    args = ap.parse_args()
    cfg = BenchConfig(args.primes, args.n, args.seed)
    print(f"{'p':>12} {'op':>9} {'fast':>6} {'explicit (mean)':>22} {'generic (mean)':>24} {'us/op':>7} {'us/op':>7}")
    for p, name, frac, fops, rops, tf, tr in bench(cfg):
        print(f"{p:>12} {name:>9} {frac:6.3f} {mean(fops, cfg.n):>22} {mean(rops, cfg.n):>24} {tf:7.1f} {tr:7.1f}")


if __name__ == "__main__":
    main()
