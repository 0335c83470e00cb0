"""Shared pytest configuration and generator helpers.

The hypothesis deadline is disabled: every example is exact rational
arithmetic and cheap on average, but the occasional worst case allocates
many small Fractions and trips the default per-example timer.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

from hypothesis import settings

from tautchern import (
    ModuliSpec,
    TautExpr,
    delta_class,
    hodge_component,
    kappa,
    psi_power_sum,
)

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


def line_bundle_character(spec: ModuliSpec, order: int) -> dict[int, TautExpr]:
    """Graded character of a line bundle with first Chern class kappa_1:
    component r is kappa_1^r / r!."""
    x = TautExpr.of(spec, order, kappa(1))
    return {r: (x ** r).scale(Fraction(1, factorial(r)))
            for r in range(1, order + 1)}


def random_graded_character(rng: random.Random, spec: ModuliSpec,
                            jmax: int) -> dict[int, TautExpr]:
    """A small random graded expression per degree, for conversion
    cross-checks.  Zero components are allowed and meaningful."""
    ch = {}
    for r in range(1, jmax + 1):
        pool = [
            (kappa(r),),
            (kappa(1),) * r,
            (delta_class(),) * r,
            (psi_power_sum(1),) * r,
        ]
        if r % 2 == 1:
            pool.append((hodge_component(r),))
        if r >= 2:
            pool.append((kappa(r - 1), delta_class()))
        items = []
        for mono in pool:
            if rng.random() < 0.5:
                items.append((mono, Fraction(rng.randint(-6, 6),
                                             rng.randint(1, 4))))
        ch[r] = TautExpr.build(spec, jmax, items)
    return ch
