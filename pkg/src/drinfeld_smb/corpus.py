"""The bundled verification corpus.

Rank-2 modules over F_2 and F_3 whose coefficient valuations cover both
infinite-place cases (wild C1, including deeper m, and tame C2) and both
reduction types at a finite place (good, including fractional twists, and
bad, including twists into the stable signature), crossed with u of degree
1 and 2 and levels n = 1..3 within the enumeration budget; plus two-term
rank-3 modules at the infinite place for both cases.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .engine import DEFAULT_BUDGET
from .fq import FqField
from .ratfunc import Place
from .skew import DrinfeldModule

F2 = FqField(2)
F3 = FqField(3)

# (field, coeff strings, finite uniformizers to test at)
RANK2_MODULES = [
    (F2, ("t", "t", "1"), ((0, 1), (1, 1))),     # C1 m=1; good at (t), (t+1)
    (F2, ("t", "1", "1"), ((0, 1),)),            # C2; good at (t)
    (F2, ("t", "1", "t"), ((0, 1),)),            # C2; bad at (t)
    (F2, ("t", "t", "t^6"), ((0, 1),)),          # bad at (t) via integral twist
    (F2, ("t", "1", "1/t"), ((0, 1),)),          # good after fractional twist
    (F2, ("t", "t", "1/t^2"), ((0, 1),)),        # C1 m=2
    (F2, ("t", "0", "1"), ((0, 1),)),            # a_1 = 0, C2
    (F3, ("t", "t", "1"), ((0, 1), (1, 1))),     # C1 m=1; good
    (F3, ("t", "1", "t"), ((0, 1),)),            # C2; bad at (t)
    (F3, ("t", "1", "1"), ((0, 1),)),            # C2; good
    (F3, ("t", "t", "1/t^4"), ((0, 1),)),        # deeper C1
]

TWO_TERM_MODULES = [
    (F2, ("t", "t", "0", "1")),                  # C1 (s=1, r=3)
    (F2, ("t", "1", "0", "1")),                  # C2
]

US = {
    2: ((0, 1), (1, 1), (1, 1, 1)),
    3: ((0, 1), (1, 1), (1, 0, 1)),
}

LEVELS = (1, 2, 3)


@dataclass(frozen=True)
class CorpusCase:
    module: DrinfeldModule
    place: Place
    u: tuple[int, ...]
    n: int


def _within_budget(case: CorpusCase, budget: int) -> bool:
    q = case.module.field.q
    d = len(case.u) - 1
    return q ** (case.module.rank * case.n * d) <= budget


def rank2_cases(budget: int = DEFAULT_BUDGET):
    for F, coeffs, finite in RANK2_MODULES:
        module = DrinfeldModule.make(F, coeffs)
        places = [Place.infinite(F)] + [Place.finite(F, u) for u in finite]
        for w, u, n in itertools.product(places, US[F.q], LEVELS):
            if w.kind == "finite" and tuple(u) == w.uniformizer:
                continue
            case = CorpusCase(module, w, u, n)
            if _within_budget(case, budget):
                yield case


def two_term_cases(budget: int = DEFAULT_BUDGET):
    for F, coeffs in TWO_TERM_MODULES:
        module = DrinfeldModule.make(F, coeffs)
        w = Place.infinite(F)
        for u, n in itertools.product(US[F.q], LEVELS):
            case = CorpusCase(module, w, u, n)
            if _within_budget(case, budget):
                yield case


def all_cases(budget: int = DEFAULT_BUDGET):
    yield from rank2_cases(budget)
    yield from two_term_cases(budget)
