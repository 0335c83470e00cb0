"""Truncated bivariate formal power series over exact rationals, with an
optional quotient by the relation D1*D2 = 0, used to re-derive and check
every series identity behind the curvature expansions.

The checks:

* the tensor character of the node structure sheaf times the inverse
  dual Todd factor equals D1*D2 times the node correction series;
* the reciprocal Todd series t/(e^t - 1) reproduces the Bernoulli
  expansion, giving an inversion-based oracle for Bernoulli numbers;
* the marked-point product [(D-psi)/(e^(D-psi)-1)]*(e^psi - 1) in the
  quotient ring, compared against closed forms with either tail sign.

The minus-tail closed form (the normalization the main cotangent
expansion is written in) does not match the exact product; the plus-tail
form does.  check_marked_point computes both so the discrepancy is
machine-checkable rather than asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Mapping

from .rationals import DomainError, bernoulli, kappa_correction


@dataclass(frozen=True, slots=True)
class BiSeries:
    """Coefficients of D1^i D2^j for i+j <= order; exact and immutable.

    With cross_zero set, every mixed monomial (i >= 1 and j >= 1) is
    dropped at each arithmetic step, implementing the quotient by
    D1*D2 = 0.
    """

    order: int
    cross_zero: bool = False
    coeffs: tuple[tuple[tuple[int, int], Fraction], ...] = ()

    @staticmethod
    def build(order: int, data: Mapping[tuple[int, int], Fraction | int],
              cross_zero: bool = False) -> "BiSeries":
        if order < 0:
            raise DomainError(f"series order must be >= 0, got {order}")
        acc: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in data.items():
            if i < 0 or j < 0:
                raise DomainError(f"negative exponent pair ({i},{j})")
            if i + j > order:
                continue
            if cross_zero and i >= 1 and j >= 1:
                continue
            q = Fraction(c)
            if q == 0:
                continue
            acc[(i, j)] = acc.get((i, j), Fraction(0)) + q
        coeffs = tuple(sorted((k, v) for k, v in acc.items() if v != 0))
        return BiSeries(order, cross_zero, coeffs)

    @staticmethod
    def zero(order: int, cross_zero: bool = False) -> "BiSeries":
        return BiSeries.build(order, {}, cross_zero)

    @staticmethod
    def one(order: int, cross_zero: bool = False) -> "BiSeries":
        return BiSeries.build(order, {(0, 0): 1}, cross_zero)

    @staticmethod
    def variable(order: int, index: int, cross_zero: bool = False) -> "BiSeries":
        if index not in (1, 2):
            raise DomainError(f"variable index must be 1 or 2, got {index}")
        key = (1, 0) if index == 1 else (0, 1)
        return BiSeries.build(order, {key: 1}, cross_zero)

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.coeffs)

    def coeff(self, i: int, j: int) -> Fraction:
        for key, c in self.coeffs:
            if key == (i, j):
                return c
        return Fraction(0)

    def _check_compatible(self, other: "BiSeries") -> None:
        if self.order != other.order or self.cross_zero != other.cross_zero:
            raise DomainError("series have different orders or quotient flags")

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._check_compatible(other)
        data = self.as_dict()
        for key, c in other.coeffs:
            data[key] = data.get(key, Fraction(0)) + c
        return BiSeries.build(self.order, data, self.cross_zero)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + other.scale(-1)

    def scale(self, q: Fraction | int) -> "BiSeries":
        q = Fraction(q)
        return BiSeries.build(self.order,
                              {key: c * q for key, c in self.coeffs},
                              self.cross_zero)

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        self._check_compatible(other)
        data: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.coeffs:
            for (i2, j2), c2 in other.coeffs:
                i, j = i1 + i2, j1 + j2
                if i + j > self.order:
                    continue
                if self.cross_zero and i >= 1 and j >= 1:
                    continue
                key = (i, j)
                data[key] = data.get(key, Fraction(0)) + c1 * c2
        return BiSeries.build(self.order, data, self.cross_zero)

    def inverse(self) -> "BiSeries":
        """Multiplicative inverse; requires a unit (nonzero) constant term."""
        c0 = self.coeff(0, 0)
        if c0 == 0:
            raise DomainError("cannot invert a series with zero constant term")
        a = self.as_dict()
        b: dict[tuple[int, int], Fraction] = {(0, 0): 1 / c0}
        for t in range(1, self.order + 1):
            for i in range(t + 1):
                j = t - i
                if self.cross_zero and i >= 1 and j >= 1:
                    continue
                s = Fraction(0)
                for (k, l), ak in a.items():
                    if (k, l) == (0, 0) or k > i or l > j:
                        continue
                    bk = b.get((i - k, j - l))
                    if bk is not None:
                        s += ak * bk
                if s != 0:
                    b[(i, j)] = -s / c0
        return BiSeries.build(self.order, b, self.cross_zero)

    def divide(self, other: "BiSeries") -> "BiSeries":
        return self * other.inverse()

    def exp(self) -> "BiSeries":
        """Exponential of a series with zero constant term."""
        if self.coeff(0, 0) != 0:
            raise DomainError("exp needs a series with zero constant term")
        total = BiSeries.one(self.order, self.cross_zero)
        power = BiSeries.one(self.order, self.cross_zero)
        for k in range(1, self.order + 1):
            power = (power * self).scale(Fraction(1, k))
            total = total + power
        return total


def one_minus_exp_neg(order: int, index: int,
                      cross_zero: bool = False) -> BiSeries:
    """1 - e^(-D) in the chosen variable."""
    data = {}
    for k in range(1, order + 1):
        key = (k, 0) if index == 1 else (0, k)
        data[key] = Fraction((-1) ** (k + 1), factorial(k))
    return BiSeries.build(order, data, cross_zero)


def structure_sheaf_pair_ch(order: int) -> BiSeries:
    """(1 - e^(-D1)) * (1 - e^(-D2)): the node structure sheaf character."""
    if order < 2:
        raise DomainError(f"the product starts at degree 2; need order >= 2, got {order}")
    return one_minus_exp_neg(order, 1) * one_minus_exp_neg(order, 2)


def _sum_power_series(order: int, fn) -> BiSeries:
    """Series in s = D1 + D2 with coefficient fn(k) on s^k."""
    data: dict[tuple[int, int], Fraction] = {}
    for k in range(order + 1):
        c = fn(k)
        if c == 0:
            continue
        for i in range(k + 1):
            key = (i, k - i)
            data[key] = data.get(key, Fraction(0)) + c * comb(k, i)
    return BiSeries.build(order, data)


def todd_dual_inverse_pair(order: int) -> BiSeries:
    """[D1 D2/(D1+D2)] * (1 - e^(-D1-D2)) / [(1-e^(-D1))(1-e^(-D2))].

    The printed quotient has a removable singularity along D1+D2 = 0, so
    it is computed as a product of three unit-constant factors:
    (1-e^(-s))/s at s = D1+D2, times D1/(1-e^(-D1)), times
    D2/(1-e^(-D2)).
    """
    f = _sum_power_series(order, lambda k: Fraction((-1) ** k, factorial(k + 1)))

    def unit_todd(index: int) -> BiSeries:
        data = {}
        for k in range(order + 1):
            key = (k, 0) if index == 1 else (0, k)
            data[key] = Fraction((-1) ** k, factorial(k + 1))
        return BiSeries.build(order, data).inverse()

    return f * unit_todd(1) * unit_todd(2)


def node_correction_series(order: int) -> BiSeries:
    """sum_(j>=1) (-1)^(j-1) (D1+D2)^(j-1) / j!."""
    return _sum_power_series(order,
                             lambda k: Fraction((-1) ** k, factorial(k + 1)))


def check_node_correction(order: int, inject_fault: bool = False) -> bool:
    """Does ch of the node sheaf times the inverse dual Todd factor equal
    D1*D2 times the node correction series, up to the given order?

    inject_fault flips one sign in the correction series; the check must
    then fail, which guards the harness against vacuity.
    """
    if order < 4:
        raise DomainError(f"the node correction check needs order >= 4, got {order}")
    lhs = structure_sheaf_pair_ch(order) * todd_dual_inverse_pair(order)
    theta = node_correction_series(order)
    if inject_fault:
        data = theta.as_dict()
        data[(1, 0)] = -data[(1, 0)]
        theta = BiSeries.build(order, data)
    d1 = BiSeries.variable(order, 1)
    d2 = BiSeries.variable(order, 2)
    return lhs == d1 * d2 * theta


def todd_reciprocal(order: int) -> BiSeries:
    """t/(e^t - 1) as a univariate series in the first variable."""
    expm1_over_t = BiSeries.build(
        order, {(k, 0): Fraction(1, factorial(k + 1)) for k in range(order + 1)})
    return expm1_over_t.inverse()


def check_todd_bernoulli(order: int) -> bool:
    """t/(e^t-1) against 1 - t/2 + sum B_2j t^2j/(2j)! with recurrence values."""
    if order < 2:
        raise DomainError(f"the Bernoulli expansion check needs order >= 2, got {order}")
    data: dict[tuple[int, int], Fraction] = {(0, 0): Fraction(1),
                                             (1, 0): Fraction(-1, 2)}
    j = 1
    while 2 * j <= order:
        data[(2 * j, 0)] = bernoulli(2 * j) / factorial(2 * j)
        j += 1
    return todd_reciprocal(order) == BiSeries.build(order, data)


def bernoulli_by_series(k: int) -> Fraction:
    """Bernoulli number read off the inverted series; independent of the
    recurrence implementation."""
    if k < 0:
        raise DomainError(f"Bernoulli numbers need k >= 0, got {k}")
    return todd_reciprocal(k).coeff(k, 0) * factorial(k)


def kappa_correction_series_table(m_max: int,
                                  use_expm1: bool = True) -> dict[int, Fraction]:
    """Correction constants read from the generating product.

    The product is (sum_(h>=1) B_2h t^2h/(2h)!) * (e^t - 1); the -1 is
    forced by the summation bound floor((m-1)/2) in the defining sum
    (every term must absorb at least one factor from the exponential).
    With use_expm1 False the bare exponential is used instead; that
    variant disagrees at even m (already at m = 4) and exists only to
    document the difference.
    """
    if m_max < 3:
        raise DomainError(f"correction constants start at m = 3, got {m_max}")
    bern = {}
    h = 1
    while 2 * h <= m_max:
        bern[(2 * h, 0)] = bernoulli(2 * h) / factorial(2 * h)
        h += 1
    start = 1 if use_expm1 else 0
    expo = {(k, 0): Fraction(1, factorial(k)) for k in range(start, m_max + 1)}
    product = BiSeries.build(m_max, bern) * BiSeries.build(m_max, expo)
    return {m: product.coeff(m, 0) for m in range(3, m_max + 1)}


def marked_point_product(order: int) -> BiSeries:
    """[(D1-D2)/(e^(D1-D2)-1)] * (e^(D2)-1) in the quotient D1*D2 = 0.

    D1 plays the boundary divisor class, D2 the cotangent class at the
    marked point.  Computed honestly: powers of D1 - D2 in the quotient
    ring, the unit series (e^U - 1)/U inverted, then the product.
    """
    if order < 1:
        raise DomainError(f"the marked point product needs order >= 1, got {order}")
    u = (BiSeries.variable(order, 1, cross_zero=True)
         - BiSeries.variable(order, 2, cross_zero=True))
    unit = BiSeries.zero(order, cross_zero=True)
    power = BiSeries.one(order, cross_zero=True)
    for k in range(order + 1):
        unit = unit + power.scale(Fraction(1, factorial(k + 1)))
        power = power * u
    expm1 = BiSeries.build(order,
                           {(0, j): Fraction(1, factorial(j))
                            for j in range(1, order + 1)},
                           cross_zero=True)
    return unit.inverse() * expm1


def marked_point_reference(order: int, tail_sign: int = -1) -> BiSeries:
    """Closed form for the marked point product, as a series in D2 alone:

        sum_(j>=1) psi^j/j!  +  (1/2) sum_(t>=1) psi^(t+1)/t!
                              +  tail_sign * sum_(m>=3) a_m psi^m

    with a_m the kappa correction constant.  tail_sign -1 is the
    normalization the main cotangent expansion uses; tail_sign +1 is the
    sign under which the closed form equals the exact product.
    """
    if tail_sign not in (-1, 1):
        raise DomainError(f"tail sign must be -1 or +1, got {tail_sign}")
    data: dict[tuple[int, int], Fraction] = {}
    for m in range(1, order + 1):
        c = Fraction(1, factorial(m))
        if m >= 2:
            c += Fraction(1, 2 * factorial(m - 1))
        if m >= 3:
            c += tail_sign * kappa_correction(m)
        data[(0, m)] = c
    return BiSeries.build(order, data, cross_zero=True)


def check_marked_point(order: int, tail_sign: int = -1) -> bool:
    """Does the exact marked point product match the closed form with the
    given tail sign, up to the given order?"""
    if order < 3:
        raise DomainError(f"the marked point check needs order >= 3, got {order}")
    return marked_point_product(order) == marked_point_reference(order, tail_sign)


def marked_point_table(order: int) -> list[tuple[int, Fraction, Fraction, Fraction]]:
    """Per-degree comparison: (m, exact product, minus-tail, plus-tail)."""
    product = marked_point_product(order)
    minus = marked_point_reference(order, -1)
    plus = marked_point_reference(order, 1)
    return [(m, product.coeff(0, m), minus.coeff(0, m), plus.coeff(0, m))
            for m in range(1, order + 1)]
