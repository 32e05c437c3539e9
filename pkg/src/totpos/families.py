"""Parametric families of biquadratic fields with closed-form indecomposables.

Three one-parameter families are provided.  For each member field the
fundamental units of the quadratic subfields, a complete system of
representatives of the indecomposable totally positive integers modulo
totally positive units, and the count formula are all given in closed form.
``verify_family`` checks the closed forms against the generic cone pipeline.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .biquadstruct import cones_from_generators, kubota_delta, kubota_square_test
from .contfrac import fundamental_unit
from .exactalg import BiquadElem, BiquadField, QuadElem, Rat, is_squarefree
from .indecenum import (
    IndecResult,
    _UnitSteps,
    equivalent_mod_units,
    indecomposables,
    reduce_by_units,
)

FAMILY_LABELS = ("1", "2", "3")

_HALF = Rat(1, 2)


@dataclass(frozen=True)
class Family:
    """A member field of one of the parametric families.

    ``eps`` holds the three quadratic fundamental units in field order
    (for the radicands ``field.p``, ``field.q``, ``field.r``); all three
    are totally positive with norm one.  ``indec`` lists exactly one
    representative per class of indecomposable totally positive integers
    modulo totally positive units, and ``iota`` is its length.
    """

    label: str
    n: int
    field: BiquadField
    eps: tuple[QuadElem, QuadElem, QuadElem]
    indec: tuple[BiquadElem, ...]
    iota: int
    mu: BiquadElem | None = None

    def embedded_units(self) -> tuple[BiquadElem, BiquadElem, BiquadElem]:
        return tuple(self.field.from_quad(e) for e in self.eps)

    def kubota_deltas(self) -> tuple[int, int, int]:
        return tuple(kubota_delta(e) for e in self.eps)

    def kubota_accepted(self) -> list[tuple[int, int, int]]:
        """Exponent patterns in {0,1}^3 whose unit product is a square."""
        out = []
        for a in range(2):
            for b in range(2):
                for c in range(2):
                    if kubota_square_test(self.field, (a, b, c), self.eps):
                        out.append((a, b, c))
        return out


def _sf(k: int, what: str) -> int:
    if not is_squarefree(k):
        raise ValueError(f"{what} = {k} is not squarefree")
    return k


def family(label: str, n: int) -> Family:
    """Build the family member with the given label ("1", "2" or "3")."""
    label = str(label)
    if label == "1":
        return _family1(n)
    if label == "2":
        return _family2(n)
    if label == "3":
        return _family3(n)
    raise ValueError(f"unknown family label {label!r}; expected one of {FAMILY_LABELS}")


def _family1(n: int) -> Family:
    """Fields Q(sqrt((2n-1)(2n+1)), sqrt((2n-1)(2n+3))) for n >= 6."""
    if n < 6:
        raise ValueError("family 1 requires n >= 6")
    a, b, c = 2 * n - 1, 2 * n + 1, 2 * n + 3
    for k in (a, b, c):
        _sf(k, "factor")
    F = BiquadField(a * b, a * c)
    assert (F.p, F.q, F.r) == (a * b, a * c, b * c) and F.ftype == 2

    eps_p = QuadElem(F.p, 2 * n, 1)
    eps_q = QuadElem(F.q, Rat(2 * n + 1, 2), _HALF)
    eps_r = QuadElem(F.r, 2 * n + 2, 1)
    Ep, Eq, Er = (F.from_quad(e) for e in (eps_p, eps_q, eps_r))
    Ep_i, Eq_i, Er_i = Ep.inverse(), Eq.inverse(), Er.inverse()
    one = F.one()
    mu = BiquadElem(F, 2 * n + 3, 1, 1, 1, 2)
    assert (mu - one) * (mu - one) == Ep * Er

    items = [one, _HALF * (Ep_i + Er), mu]
    step = mu - one
    base_a, base_b = one + Ep, _HALF * (one + Ep * Er) + Ep
    for t in range(3, 2 * n - 1):
        items.append(base_a + t * step)
        items.append(base_b + t * step)
    base_c, base_d = one + Eq_i, _HALF * (one + Ep * Er) + Eq_i
    for t in range(4, 2 * n):
        items.append(base_c + t * step)
        items.append(base_d + t * step)
    base_e, step_e = _HALF * (Er_i + Ep), mu - 2 * one
    for t in range(2, 2 * n):
        items.append(base_e + t * step_e)

    fam = Family("1", n, F, (eps_p, eps_q, eps_r), tuple(items), 10 * n - 15, mu)
    _validate(fam)
    return fam


def _family2(n: int) -> Family:
    """Fields Q(sqrt(4n^2-1), sqrt((4n-3)(4n+1))) for n >= 9."""
    if n < 9:
        raise ValueError("family 2 requires n >= 9")
    p = _sf(2 * n - 1, "factor") * _sf(2 * n + 1, "factor")
    q = _sf(4 * n - 3, "factor") * _sf(4 * n + 1, "factor")
    if gcd(p, q) != 1:
        raise ValueError(f"parameters collide: gcd({p}, {q}) != 1")
    eps_q = QuadElem(q, Rat(4 * n - 1, 2), _HALF)
    eps_r = QuadElem(p * q, 8 * n * n - 2 * n - 2, 1)
    return _family23(n, "2", p, q, eps_q, eps_r, 4 * n - 1)


def _family3(n: int) -> Family:
    """Fields Q(sqrt(4n^2-1), sqrt((4n-1)(4n+3))) for n >= 2."""
    if n < 2:
        raise ValueError("family 3 requires n >= 2")
    p = _sf(2 * n - 1, "factor") * _sf(2 * n + 1, "factor")
    q = _sf(4 * n - 1, "factor") * _sf(4 * n + 3, "factor")
    if gcd(p, q) != 1:
        raise ValueError(f"parameters collide: gcd({p}, {q}) != 1")
    eps_q = QuadElem(q, Rat(4 * n + 1, 2), _HALF)
    eps_r = QuadElem(p * q, 8 * n * n + 2 * n - 2, 1)
    return _family23(n, "3", p, q, eps_q, eps_r, 4 * n)


def _family23(n, label, p, q, eps_q, eps_r, iota) -> Family:
    F = BiquadField(p, q)
    assert (F.p, F.q, F.r) == (p, q, p * q) and F.ftype == 2
    eps_p = QuadElem(p, 2 * n, 1)
    Ep, Eq, Er = (F.from_quad(e) for e in (eps_p, eps_q, eps_r))
    Ep_i, Eq_i = Ep.inverse(), Eq.inverse()
    one = F.one()

    items = [one]
    if label == "2":
        base_a, step_a = _HALF * (Ep_i + Er), Eq - Ep_i
        for t in range(0, 2 * n - 1):
            items.append(base_a + t * step_a)
        base_b, step_b = Ep_i - Eq, Ep * Eq - one
        for t in range(1, 2 * n):
            items.append(base_b + t * step_b)
    else:
        items.append(_HALF * (Ep_i + Er))
        base_a, step_a = _HALF * (Ep + Er), Ep - Eq_i
        for t in range(0, 2 * n - 1):
            items.append(base_a + t * step_a)
        base_b, step_b = Eq_i - Ep, Ep * Eq - one
        for t in range(1, 2 * n):
            items.append(base_b + t * step_b)

    fam = Family(label, n, F, (eps_p, eps_q, eps_r), tuple(items), iota)
    _validate(fam)
    return fam


def _validate(fam: Family) -> None:
    assert len(fam.indec) == fam.iota
    for e, d in zip(fam.eps, (fam.field.p, fam.field.q, fam.field.r)):
        assert e.d == d and e.norm() == 1 and e.is_totally_positive()
    for x in fam.indec:
        assert x.is_integral() and x.is_totally_positive()


@dataclass(frozen=True)
class FamilyReport:
    family: Family
    result: IndecResult
    units_match: bool
    counts_match: bool
    classes_match: bool

    @property
    def ok(self) -> bool:
        return self.units_match and self.counts_match and self.classes_match

    def describe(self) -> str:
        F = self.family.field
        status = "ok" if self.ok else "MISMATCH"
        return (
            f"family {self.family.label} n={self.family.n} "
            f"(p,q,r)=({F.p},{F.q},{F.r}): closed form {self.family.iota}, "
            f"pipeline {self.result.iota} [{status}]"
        )


def verify_family(label: str, n: int, jobs: int = 1, budget: int | None = None) -> FamilyReport:
    """Check the closed-form class list against the generic enumeration.

    Matching is up to multiplication by totally positive units and must be
    a bijection: every closed-form element is equivalent to exactly one
    pipeline representative and no representative is hit twice.
    """
    fam = family(label, n)
    units_match = all(
        fundamental_unit(d) == e
        for d, e in zip((fam.field.p, fam.field.q, fam.field.r), fam.eps)
    )
    result = indecomposables(fam.field, jobs=jobs, budget=budget)

    counts_match = result.iota == fam.iota
    steps = _UnitSteps(result.info)
    used: set[int] = set()
    classes_match = counts_match
    for x in fam.indec:
        rx = reduce_by_units(x, steps)
        hits = [i for i, rep in enumerate(result.reps) if equivalent_mod_units(rx, rep)]
        if len(hits) != 1 or hits[0] in used:
            classes_match = False
            break
        used.add(hits[0])
    return FamilyReport(fam, result, units_match, counts_match, classes_match)


def family_cone_contents(n: int) -> tuple[int, ...]:
    """Parallelepiped point counts of the six cones of a family-1 field.

    The cones are built over the subfield units (eps_p, eps_q, eps_r),
    which generate the totally positive units here; the counts equal the
    absolute cone determinants, in lexicographic order of the generator
    permutations: (2n+1, 2(2n+2), 4n, 4n+4, 4n, 2n+1).
    """
    fam = _family1(n)
    cones = cones_from_generators(fam.field, fam.embedded_units())
    return tuple(abs(c.det) for c in cones)
