"""Graded free commutative algebra over the tautological generator alphabet.

Generators are small frozen records (kind + integer/label arguments).  A
monomial is a sorted tuple of generators; an expression is a canonical
sorted tuple of (monomial, coefficient) pairs attached to a moduli
specification and a truncation order.  All coefficients are exact
Fractions, and everything is immutable after construction.

Boundary pushforward symbols always carry a *symmetrized* argument: the
key (a, b) with a >= b stands for the monomial symmetric polynomial
m_(a,b) in the two cotangent classes at the node.  For separating atoms
the pair (h, A) is stored as the canonical representative of the
identification (h, A) ~ (g-h, complement of A).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .rationals import DomainError

# Generator kind tags.  These double as the "gen" names in JSON output.
KAPPA = "kappa"
KAPPATILDE = "kappa_tilde"
PSIPOW = "psi_power_sum"
PSI = "psi"
CHE = "hodge_ch"
DELTA = "delta"
BIRR = "irr_push"
BSEPA = "sep_push_sum"
BSEP = "sep_push"

# Canonical storage order (fixed once, golden tests depend on it).
_CANON_ORDER = {
    KAPPA: 0,
    KAPPATILDE: 1,
    PSIPOW: 2,
    PSI: 3,
    CHE: 4,
    DELTA: 5,
    BIRR: 6,
    BSEPA: 7,
    BSEP: 8,
}

# Order used when printing: lambda (= hodge_ch with k = 1) reads better
# before the psi and delta terms, matching the usual 13*lambda + psi - 2*delta.
_DISPLAY_ORDER = {
    KAPPA: 0,
    KAPPATILDE: 1,
    CHE: 2,
    PSIPOW: 3,
    PSI: 4,
    DELTA: 5,
    BIRR: 6,
    BSEPA: 7,
    BSEP: 8,
}


@dataclass(frozen=True, slots=True)
class Gen:
    """One tautological generator symbol."""

    kind: str
    args: tuple = ()

    @property
    def degree(self) -> int:
        k = self.kind
        if k in (KAPPA, KAPPATILDE, PSIPOW, CHE):
            return self.args[0]
        if k in (PSI, DELTA):
            return 1
        if k in (BIRR, BSEPA):
            return self.args[0] + self.args[1] + 1
        if k == BSEP:
            return self.args[2] + self.args[3] + 1
        raise DomainError(f"unknown generator kind {k!r}")

    def sort_key(self):
        return (_CANON_ORDER[self.kind], self.args)

    def display_key(self):
        return (_DISPLAY_ORDER[self.kind], self.args)


def kappa(m: int) -> Gen:
    """kappa_m, the pushforward of c_1(omega(D))^(m+1); degree m >= 1."""
    if m < 1:
        raise DomainError(f"kappa index must be >= 1, got {m}")
    return Gen(KAPPA, (m,))


def kappa_tilde(m: int) -> Gen:
    """kappa~_m, the variant without the marked-point twist; degree m >= 1."""
    if m < 1:
        raise DomainError(f"kappa~ index must be >= 1, got {m}")
    return Gen(KAPPATILDE, (m,))


def psi_power_sum(m: int) -> Gen:
    """The aggregate sum of psi_p^m over all markings; degree m >= 1."""
    if m < 1:
        raise DomainError(f"psi power sum index must be >= 1, got {m}")
    return Gen(PSIPOW, (m,))


def marked_psi(label: str) -> Gen:
    """psi at one named marking (concrete mode)."""
    return Gen(PSI, (label,))


def hodge_component(k: int) -> Gen:
    """ch_k of the Hodge bundle, k odd; k = 1 is lambda.

    Even positive components vanish identically, so only odd indices are
    representable.
    """
    if k < 1 or k % 2 == 0:
        raise DomainError(f"hodge ch index must be odd and >= 1, got {k}")
    return Gen(CHE, (k,))


def delta_class() -> Gen:
    """The total boundary class."""
    return Gen(DELTA)


def irr_push(a: int, b: int) -> Gen:
    """Pushforward along the irreducible boundary map of m_(a,b)(psi_q1, psi_q2).

    The key is sorted since only the symmetrization of the argument is
    well defined (the double cover swaps the two branches at the node).
    """
    if a < 0 or b < 0:
        raise DomainError(f"irr pushforward exponents must be >= 0, got ({a},{b})")
    return Gen(BIRR, (max(a, b), min(a, b)))


def sep_push_sum(a: int, b: int) -> Gen:
    """Aggregate of m_(a,b) pushforwards over every ordered stable splitting.

    Summing over ordered (h, A) absorbs the side swap, so the atom is
    symmetric in (a, b) by construction and the key is stored sorted.
    """
    if a < 0 or b < 0:
        raise DomainError(f"sep pushforward exponents must be >= 0, got ({a},{b})")
    return Gen(BSEPA, (max(a, b), min(a, b)))


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"p{i}" for i in range(1, n + 1))


@dataclass(frozen=True, slots=True)
class ModuliSpec:
    """The pair (genus, marking labels), plus the generic/concrete switch.

    Concrete mode names every boundary divisor individually and caps
    classes at the dimension 3g-3+n; generic mode works with the
    aggregate boundary symbols and no dimension cap.
    """

    genus: int
    labels: tuple[str, ...] = ()
    concrete: bool = False

    def __post_init__(self):
        if self.genus < 0:
            raise DomainError(f"genus must be >= 0, got {self.genus}")
        labels = tuple(self.labels)
        if len(set(labels)) != len(labels):
            raise DomainError(f"marking labels must be distinct, got {labels}")
        object.__setattr__(self, "labels", labels)
        if self.n <= 2 - 2 * self.genus:
            raise DomainError(
                f"unstable specification: stability requires n > 2 - 2*g, "
                f"got g={self.genus}, n={self.n}"
            )

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def dimension(self) -> int:
        return 3 * self.genus - 3 + self.n

    def _indices(self, labels: Iterable[str]) -> tuple[int, ...]:
        pos = {p: i for i, p in enumerate(self.labels)}
        try:
            idx = tuple(sorted(pos[p] for p in labels))
        except KeyError as exc:
            raise DomainError(f"unknown marking label {exc.args[0]!r}") from None
        if len(set(idx)) != len(idx):
            raise DomainError("repeated marking label in subset")
        return idx

    def _subset(self, indices: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in sorted(indices))

    def splitting_is_stable(self, h: int, labels: Iterable[str]) -> bool:
        """Both sides of the separating splitting (h, A) must be stable."""
        if h < 0 or h > self.genus:
            return False
        size = len(self._indices(labels))
        return (2 * h - 1 + size > 0) and (2 * (self.genus - h) - 1 + (self.n - size) > 0)

    def ordered_splittings(self) -> list[tuple[int, tuple[str, ...]]]:
        """Every ordered stable pair (h, A), in a fixed deterministic order."""
        out = []
        for h in range(self.genus + 1):
            for size in range(self.n + 1):
                for idx in itertools.combinations(range(self.n), size):
                    a_side = 2 * h - 1 + size
                    b_side = 2 * (self.genus - h) - 1 + (self.n - size)
                    if a_side > 0 and b_side > 0:
                        out.append((h, self._subset(idx)))
        return out

    def mirror_splitting(self, h: int, labels: Iterable[str]) -> tuple[int, tuple[str, ...]]:
        idx = set(self._indices(labels))
        comp = tuple(i for i in range(self.n) if i not in idx)
        return (self.genus - h, self._subset(comp))

    def canonical_splitting(self, h: int, labels: Iterable[str]) -> tuple[int, tuple[str, ...]]:
        """The smaller of (h, A) and its mirror under a fixed total order."""
        a = (h, self._subset(self._indices(labels)))
        b = self.mirror_splitting(h, labels)

        def key(side):
            hh, lab = side
            return (hh, len(lab), self._indices(lab))

        return a if key(a) <= key(b) else b

    def splitting_classes(self) -> list[tuple[int, tuple[str, ...], int]]:
        """Canonical separating divisor representatives with multiplicities.

        The multiplicity counts ordered splittings in the class: 2 for a
        divisor whose mirror differs, 1 for the self-mirror middle case
        (even genus, no markings).
        """
        counts: dict[tuple[int, tuple[str, ...]], int] = {}
        for h, lab in self.ordered_splittings():
            rep = self.canonical_splitting(h, lab)
            counts[rep] = counts.get(rep, 0) + 1
        return [(h, lab, counts[(h, lab)]) for (h, lab) in sorted(
            counts, key=lambda side: (side[0], len(side[1]), self._indices(side[1])))]

    def boundary_divisors(self) -> list[tuple]:
        """Canonical list of boundary divisors: ("irr",) then ("sep", h, A)."""
        out: list[tuple] = []
        if self.genus >= 1:
            out.append(("irr",))
        for h, lab, _mult in self.splitting_classes():
            out.append(("sep", h, lab))
        return out

    def boundary_count(self) -> int:
        return len(self.boundary_divisors())

    def sep_push(self, h: int, labels: Iterable[str], a: int, b: int) -> Gen:
        """One separating pushforward atom xi_{h,A}_*(m_(a,b)(psi_r1, psi_r2)).

        Stored on the canonical side of the (h, A) ~ (g-h, A^c)
        identification, with the symmetric argument key sorted.
        """
        if a < 0 or b < 0:
            raise DomainError(f"sep pushforward exponents must be >= 0, got ({a},{b})")
        if not self.splitting_is_stable(h, labels):
            raise DomainError(
                f"splitting (h={h}, A={tuple(labels)}) is not stable on "
                f"(g={self.genus}, n={self.n})"
            )
        ch, clab = self.canonical_splitting(h, labels)
        return Gen(BSEP, (ch, clab, max(a, b), min(a, b)))


Monomial = tuple[Gen, ...]


def monomial(*gens: Gen) -> Monomial:
    return tuple(sorted(gens, key=Gen.sort_key))


def monomial_degree(mono: Monomial) -> int:
    return sum(g.degree for g in mono)


def _validate_gen(gen: Gen, spec: ModuliSpec) -> None:
    if gen.kind == PSI:
        if not spec.concrete:
            raise DomainError("psi at a named marking requires a concrete specification")
        if gen.args[0] not in spec.labels:
            raise DomainError(f"unknown marking label {gen.args[0]!r}")
    elif gen.kind == BSEP:
        if not spec.concrete:
            raise DomainError("individual sep pushforward atoms require a concrete specification")
        h, lab, a, b = gen.args
        if a < b:
            raise DomainError(f"sep atom key must be sorted, got ({a},{b})")
        if (h, lab) != spec.canonical_splitting(h, lab):
            raise DomainError(f"sep atom side (h={h}, A={lab}) is not canonical")
        if not spec.splitting_is_stable(h, lab):
            raise DomainError(f"sep atom splitting (h={h}, A={lab}) is not stable")
    elif gen.kind in (BIRR, BSEPA):
        if gen.args[0] < gen.args[1]:
            raise DomainError(f"pushforward key must be sorted, got {gen.args}")


def _monomial_vanishes(mono: Monomial, spec: ModuliSpec) -> bool:
    for g in mono:
        if g.kind == PSIPOW and spec.n == 0:
            return True
        if g.kind == BIRR and spec.genus == 0:
            return True
    return False


@dataclass(frozen=True, slots=True)
class TautExpr:
    """Canonical graded expression: sorted (monomial, coefficient) pairs."""

    spec: ModuliSpec
    order: int
    terms: tuple[tuple[Monomial, Fraction], ...] = ()

    @staticmethod
    def build(spec: ModuliSpec, order: int,
              items: Iterable[tuple[Iterable[Gen], Fraction | int]]) -> "TautExpr":
        """Canonicalize raw (generators, coefficient) pairs into an expression.

        Zero coefficients, terms above the truncation order, terms above
        the dimension (concrete mode only), and monomials that vanish
        identically (psi sums with no markings, irreducible atoms in
        genus 0) are all dropped.
        """
        if order < 0:
            raise DomainError(f"truncation order must be >= 0, got {order}")
        cap = order
        if spec.concrete:
            cap = min(cap, spec.dimension)
        acc: dict[Monomial, Fraction] = {}
        for gens, coeff in items:
            q = Fraction(coeff)
            if q == 0:
                continue
            mono = monomial(*gens)
            for g in mono:
                _validate_gen(g, spec)
            if monomial_degree(mono) > cap:
                continue
            if _monomial_vanishes(mono, spec):
                continue
            acc[mono] = acc.get(mono, Fraction(0)) + q
        terms = tuple(sorted(
            ((m, c) for m, c in acc.items() if c != 0),
            key=lambda mc: (monomial_degree(mc[0]), tuple(g.sort_key() for g in mc[0])),
        ))
        return TautExpr(spec, order, terms)

    @staticmethod
    def zero(spec: ModuliSpec, order: int) -> "TautExpr":
        return TautExpr.build(spec, order, [])

    @staticmethod
    def one(spec: ModuliSpec, order: int) -> "TautExpr":
        return TautExpr.build(spec, order, [((), Fraction(1))])

    @staticmethod
    def of(spec: ModuliSpec, order: int, gens: Gen | Iterable[Gen],
           coeff: Fraction | int = 1) -> "TautExpr":
        if isinstance(gens, Gen):
            gens = (gens,)
        return TautExpr.build(spec, order, [(tuple(gens), coeff)])

    def _check_compatible(self, other: "TautExpr") -> None:
        if self.spec != other.spec:
            raise DomainError("expressions live on different moduli specifications")
        if self.order != other.order:
            raise DomainError(
                f"expressions have different truncation orders "
                f"({self.order} vs {other.order})"
            )

    def __add__(self, other: "TautExpr") -> "TautExpr":
        self._check_compatible(other)
        return TautExpr.build(self.spec, self.order,
                              list(self.terms) + list(other.terms))

    def __sub__(self, other: "TautExpr") -> "TautExpr":
        return self + (-other)

    def __neg__(self) -> "TautExpr":
        return self.scale(-1)

    def scale(self, q: Fraction | int) -> "TautExpr":
        q = Fraction(q)
        return TautExpr.build(self.spec, self.order,
                              [(m, c * q) for m, c in self.terms])

    def __mul__(self, other: "TautExpr") -> "TautExpr":
        self._check_compatible(other)
        items = []
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                items.append((m1 + m2, c1 * c2))
        return TautExpr.build(self.spec, self.order, items)

    def __pow__(self, k: int) -> "TautExpr":
        if k < 0:
            raise DomainError(f"expression powers must be >= 0, got {k}")
        out = TautExpr.one(self.spec, self.order)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> list[int]:
        return sorted({monomial_degree(m) for m, _ in self.terms})

    def component(self, d: int) -> "TautExpr":
        return TautExpr.build(self.spec, self.order,
                              [(m, c) for m, c in self.terms
                               if monomial_degree(m) == d])

    def coefficient(self, gens: Gen | Iterable[Gen]) -> Fraction:
        if isinstance(gens, Gen):
            gens = (gens,)
        target = monomial(*gens)
        for m, c in self.terms:
            if m == target:
                return c
        return Fraction(0)

    def map_generators(self, fn, spec: ModuliSpec | None = None,
                       order: int | None = None) -> "TautExpr":
        """Rebuild the expression with every generator sent through fn.

        fn returns a TautExpr on the target spec/order; products of
        images replace products of generators.  This is the engine under
        both substitution and concrete expansion.
        """
        tspec = spec if spec is not None else self.spec
        torder = order if order is not None else self.order
        out = TautExpr.zero(tspec, torder)
        for m, c in self.terms:
            piece = TautExpr.build(tspec, torder, [((), c)])
            for g in m:
                piece = piece * fn(g)
            out = out + piece
        return out

    def substitute(self, rules: Mapping[Gen, "TautExpr"]) -> "TautExpr":
        """Replace generators by expressions of the same degree everywhere."""
        for src, img in rules.items():
            self._check_compatible(img)
            for m, _ in img.terms:
                if monomial_degree(m) != src.degree:
                    raise DomainError(
                        f"substitution for {src.kind}{src.args} is not "
                        f"homogeneous of degree {src.degree}"
                    )

        def fn(g: Gen) -> "TautExpr":
            if g in rules:
                return rules[g]
            return TautExpr.of(self.spec, self.order, g)

        return self.map_generators(fn)


def expr_equal(e1: TautExpr, e2: TautExpr) -> bool:
    """Equality of canonical forms; no rewriting is implied."""
    return e1 == e2


def delta_as_atoms(spec: ModuliSpec, order: int) -> TautExpr:
    """The total boundary class in concrete atoms.

    Half the irreducible pushforward of 1 plus half the ordered sum of
    separating pushforwards of 1; merging mirror pairs leaves coefficient
    1 on each two-sided divisor and 1/2 on a self-mirror one.
    """
    if not spec.concrete:
        raise DomainError("concrete boundary expansion needs a concrete specification")
    items: list[tuple[tuple[Gen, ...], Fraction]] = []
    if spec.genus >= 1:
        items.append(((irr_push(0, 0),), Fraction(1, 2)))
    for h, lab, mult in spec.splitting_classes():
        items.append(((spec.sep_push(h, lab, 0, 0),), Fraction(mult, 2)))
    return TautExpr.build(spec, order, items)


def expand_concrete(e: TautExpr) -> TautExpr:
    """Expand aggregate generators into per-divisor atoms on a concrete spec.

    psi power sums become sums over the named markings, delta becomes the
    concrete boundary expression, and each aggregate sep pushforward
    becomes the multiplicity-weighted sum of its canonical atoms.
    Classes above the dimension are dropped by the concrete truncation.
    """
    cspec = replace(e.spec, concrete=True)
    order = e.order

    def fn(g: Gen) -> TautExpr:
        if g.kind == PSIPOW:
            m = g.args[0]
            return TautExpr.build(cspec, order,
                                  [((marked_psi(p),) * m, Fraction(1))
                                   for p in cspec.labels])
        if g.kind == DELTA:
            return delta_as_atoms(cspec, order)
        if g.kind == BSEPA:
            a, b = g.args
            return TautExpr.build(cspec, order,
                                  [((cspec.sep_push(h, lab, a, b),), Fraction(mult))
                                   for h, lab, mult in cspec.splitting_classes()])
        return TautExpr.of(cspec, order, g)

    return e.map_generators(fn, spec=cspec, order=order)
