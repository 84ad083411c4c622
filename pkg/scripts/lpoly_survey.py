"""L-polynomials of random genus-3 curves, with an order check by BSGS.

    python3 scripts/lpoly_survey.py --primes 13 31 --curves 5
"""

from __future__ import annotations

import argparse
import math
import random
import time
from dataclasses import dataclass, field

from hyperjac import curve as C
from hyperjac import divisor as D
from hyperjac import explicit3 as E
from hyperjac import zeta as Z
from hyperjac.ff import FieldCtx, OpCount


@dataclass
class SurveyConfig:
    primes: list[int] = field(default_factory=lambda: [13, 31, 61])
    curves: int = 5
    seed: int = 0
    threads: int = 1


def survey(cfg: SurveyConfig):
    for p in cfg.primes:
        rng = random.Random(cfg.seed + p)
        for _ in range(cfg.curves):
            c = C.random_curve(FieldCtx(p), 3, rng)
            t0 = time.perf_counter()
            L = Z.lpolynomial(c, threads=cfg.threads)
            t1 = time.perf_counter()
            d = D.random_element(c, rng)
            ops = OpCount()
            m = Z.bsgs_annihilate(d, c, L.weil_interval(), ops)
            yield {
                "p": p,
                "f": list(c.f),
                "Lp": list(L.coeffs),
                "order": L.order,
                "a1/sqrt(p)": L.coeffs[1] / math.sqrt(p),
                "annihilated": E.scalar_mul(L.order, d, c) == D.identity(c),
                "bsgs_m": m,
                "order/m": L.order / m,
                "bsgs_ops": str(ops),
                "count_s": round(t1 - t0, 2),
            }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=SurveyConfig().primes)
    ap.add_argument("--curves", type=int, default=SurveyConfig.curves)
    ap.add_argument("--seed", type=int, default=SurveyConfig.seed)
    ap.add_argument("--threads", type=int, default=SurveyConfig.threads)
    args = ap.parse_args()
    for row in survey(SurveyConfig(args.primes, args.curves, args.seed, args.threads)):
        print("; ".join(f"{k}={v:.3f}" if isinstance(v, float) else f"{k}={v}" for k, v in row.items()))


if __name__ == "__main__":
    main()
