"""Exact rational arithmetic helpers: Bernoulli numbers and the kappa
correction constants that show up in the curvature expansions.

Everything here is pure ``fractions.Fraction``.  No floats, anywhere.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial


class DomainError(ValueError):
    """Raised when a quantity is requested outside its mathematical domain."""


# Cache of Bernoulli numbers B_0, B_1, ... (second convention: B_1 = -1/2).
# Append-only and guarded so concurrent test workers cannot corrupt it.
_bern: list[Fraction] = [Fraction(1)]
_bern_lock = threading.Lock()


def bernoulli(k: int) -> Fraction:
    """Bernoulli number B_k with B_1 = -1/2.

    Computed from the defining recurrence

        sum_{i=0}^{n} C(n+1, i) * B_i = 0   for n >= 1,

    solved for B_n.  Values are memoized.
    """
    if k < 0:
        raise DomainError(f"Bernoulli numbers need k >= 0, got {k}")
    with _bern_lock:
        while len(_bern) <= k:
            n = len(_bern)
            acc = Fraction(0)
            for i, b in enumerate(_bern):
                acc += comb(n + 1, i) * b
            _bern.append(-acc / (n + 1))
        return _bern[k]


def kappa_correction(m: int) -> Fraction:
    """Correction constant attached to kappa_m in the corrected pushforward
    expansion of the relative dualizing sheaf:

        sum_{h=1}^{floor((m-1)/2)} B_{2h} / ((2h)! * (m-2h)!)

    Defined for m >= 3.  Equals 1/(2*(m-1)!) - 1/m! in closed form; the
    test suite checks the sum against that identity and against a series
    product oracle.
    """
    if m < 3:
        raise DomainError(f"kappa correction is defined for m >= 3, got {m}")
    total = Fraction(0)
    for h in range(1, (m - 1) // 2 + 1):
        total += bernoulli(2 * h) / (factorial(2 * h) * factorial(m - 2 * h))
    return total


def format_rational(q: Fraction) -> str:
    """Render a Fraction as ``p`` or ``p/q`` with no superfluous sign."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
