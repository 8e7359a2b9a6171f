#!/usr/bin/env python3
"""Random Szpiro sweep: sample in-hypothesis rank-2 modules with polynomial
coefficients of degree <= 4 over F_2 and F_3 and check the inequality
h_J <= f (q - 1) + q on every one.  Deterministic under --seed."""

import argparse
import random
import sys
import time

from drinfeld_smb import poly as P
from drinfeld_smb.conductor import szpiro_report
from drinfeld_smb.errors import HypothesisError
from drinfeld_smb.fq import FqField
from drinfeld_smb.ratfunc import RatFunc
from drinfeld_smb.skew import DrinfeldModule, TwistedPoly


def random_poly(rng: random.Random, F: FqField, max_deg: int):
    deg = rng.randint(0, max_deg)
    coeffs = [rng.randrange(F.q) for _ in range(deg + 1)]
    return P.poly(coeffs)


def sample_module(rng: random.Random, F: FqField, max_deg: int) -> DrinfeldModule:
    while True:
        a1 = random_poly(rng, F, max_deg)
        a2 = random_poly(rng, F, max_deg)
        if not a2:
            continue
        t = RatFunc.of_poly(F, P.T)
        tp = TwistedPoly.make(
            F, (t, RatFunc.of_poly(F, a1), RatFunc.of_poly(F, a2))
        )
        return DrinfeldModule(F, 2, tp)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--max-deg", type=int, default=4)
    parser.add_argument("--seed", type=int, default=20260823)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    fields = [FqField(2), FqField(3)]
    done = 0
    rejected = 0
    violations = 0
    t0 = time.perf_counter()
    while done < args.count:
        F = fields[done % 2]
        module = sample_module(rng, F, args.max_deg)
        try:
            rep = szpiro_report(module)
        except HypothesisError:
            rejected += 1
            continue
        done += 1
        if not rep.holds:
            violations += 1
            print(
                f"VIOLATION q={F.q} phi_t=({module.phi_t.coeffs[1]}, "
                f"{module.phi_t.coeffs[2]}): h_J={rep.h_J} > bound={rep.bound}"
            )
    dt = time.perf_counter() - t0
    print(
        f"{done} modules checked ({rejected} out-of-hypothesis rejected), "
        f"{violations} violations, {dt:.1f}s"
    )
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
