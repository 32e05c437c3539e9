"""Census of totally real multiquadratic fields ordered by discriminant,
plus the per-field summary rows (indecomposable counts and the exact
log-ratio column).

A totally real multiquadratic field of degree 2^n corresponds to a rank-n
group of coprime squarefree integers; its discriminant is the product of
the discriminants of the quadratic subfields.  For the biquadratic case the
group is described by a triple of pairwise coprime squarefree integers
(g1, g2, g3), at most one of them 1, with quadratic radicands
(g1*g2, g1*g3, g2*g3).
"""
from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .biquadstruct import has_extra_units
from .exactalg import BiquadField
from .indecenum import indecomposables
from .quadindec import iota_quad


def squarefree_numbers(limit: int) -> list[int]:
    """All squarefree integers in [1, limit], by sieve."""
    if limit < 1:
        return []
    free = bytearray([1]) * (limit + 1)
    free[0] = 0
    k = 2
    while k * k <= limit:
        free[k * k::k * k] = bytearray(len(free[k * k::k * k]))
        k += 1
    return [i for i in range(1, limit + 1) if free[i]]


def quad_field_disc(d: int) -> int:
    """Discriminant of the quadratic field with squarefree radicand d."""
    return d if d % 4 == 1 else 4 * d


def count_quadratic(max_disc: int) -> int:
    """Number of real quadratic fields with discriminant <= max_disc."""
    return sum(1 for d in squarefree_numbers(max_disc)
               if d > 1 and quad_field_disc(d) <= max_disc)


def _two_power_exponent(radicands: tuple[int, int, int]) -> int:
    """Exponent e with disc = (2^e * g1*g2*g3)^2, from radicand residues."""
    odd = [m % 4 for m in radicands if m % 2]
    if len(odd) == 1:               # two even radicands, one odd
        return 3 if odd[0] == 3 else 2
    return 2 if odd.count(3) == 2 else 0


def biquadratic_fields(max_disc: int) -> list[BiquadField]:
    """All totally real biquadratic fields with discriminant <= max_disc,
    sorted by (discriminant, p, q)."""
    root = isqrt(max_disc)
    sf = squarefree_numbers(root)
    fields = []
    for i, g1 in enumerate(sf):
        if g1 * (g1 + 1) * (g1 + 2) > root:
            break
        for j, g2 in enumerate(sf[i + 1:], start=i + 1):
            if g1 * g2 * g2 > root:
                break
            if gcd(g1, g2) != 1:
                continue
            for g3 in sf[j + 1:]:
                rad = g1 * g2 * g3
                if rad > root:
                    break
                if gcd(g1, g3) != 1 or gcd(g2, g3) != 1:
                    continue
                radicands = (g1 * g2, g1 * g3, g2 * g3)
                if (rad << _two_power_exponent(radicands)) > root:
                    continue
                F = BiquadField(radicands[0], radicands[1])
                assert F.disc <= max_disc
                fields.append(F)
    fields.sort(key=lambda F: (F.disc, F.p, F.q))
    triples = [(F.p, F.q, F.r) for F in fields]
    assert len(set(triples)) == len(triples)
    return fields


def brute_biquadratic_fields(max_disc: int) -> list[tuple[int, int, int]]:
    """Independent enumeration from radicand pairs; returns sorted
    (p, q, r) triples.  Quadratic in the radicand bound, for cross-checks."""
    bound = isqrt(max_disc)
    sf = [d for d in squarefree_numbers(bound) if d > 1]
    seen = {}
    for i, m1 in enumerate(sf):
        for m2 in sf[i + 1:]:
            F = BiquadField(m1, m2)
            if F.disc <= max_disc:
                seen[(F.p, F.q, F.r)] = F.disc
    return sorted(seen, key=lambda t: (seen[t], t[0], t[1]))


# ---------------------------------------------------------------------------
# arbitrary 2-power degree


def integer_root(x: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative integer."""
    if x < 0 or k < 1:
        raise ValueError("integer_root needs x >= 0 and k >= 1")
    if x == 0:
        return 0
    r = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def _sf_product(a: int, b: int) -> int:
    """Product in the group of squarefree integers."""
    g = gcd(a, b)
    return (a // g) * (b // g)


@lru_cache(maxsize=None)
def _squarefree_cached(limit: int) -> tuple[int, ...]:
    return tuple(squarefree_numbers(limit))


def multiquadratic_groups(rank: int, max_disc: int) -> list[tuple[int, ...]]:
    """Rank-`rank` groups of squarefree radicands whose field has
    discriminant <= max_disc.  Each group is reported as the sorted tuple
    of its nontrivial elements (the 2^rank - 1 quadratic radicands).

    Generators are chosen greedily minimal: each generator is the smallest
    element outside the current span, so every new coset element is at
    least as large as the generator.  Every group has exactly one such
    generating sequence, which also gives sharp search bounds (all
    still-missing elements are >= the next generator).
    """
    if rank < 1:
        raise ValueError("rank must be >= 1")
    if rank == 1:
        return [(d,) for d in squarefree_numbers(max_disc)
                if d > 1 and quad_field_disc(d) <= max_disc]

    total = (1 << rank) - 1
    found: set[tuple[int, ...]] = set()

    def extend(elements: tuple[int, ...], disc: int, last: int):
        if len(elements) == total:
            found.add(tuple(sorted(elements)))
            return
        missing = total - len(elements)
        b_max = integer_root(max_disc // disc, missing)
        for b in _squarefree_cached(b_max):
            if b <= last or b in elements:
                continue
            new = [b] + [_sf_product(b, g) for g in elements]
            if any(m < b for m in new):
                continue
            ndisc = disc
            for m in new:
                ndisc *= quad_field_disc(m)
            if ndisc * b ** (missing - len(new)) <= max_disc:
                extend(elements + tuple(new), ndisc, b)

    extend((), 1, 1)
    return sorted(found, key=lambda g: (_group_disc(g), g))


def _group_disc(elements: tuple[int, ...]) -> int:
    disc = 1
    for m in elements:
        disc *= quad_field_disc(m)
    return disc


def count_multiquadratic(rank: int, max_disc: int) -> int:
    return len(multiquadratic_groups(rank, max_disc))


# ---------------------------------------------------------------------------
# growth of the biquadratic count


@dataclass(frozen=True)
class GrowthReport:
    exponents: tuple[int, ...]
    counts: tuple[int, ...]
    within_factor_3: bool

    def describe(self) -> str:
        cells = ", ".join(f"10^{k}: {c}" for k, c in zip(self.exponents, self.counts))
        verdict = "bounded" if self.within_factor_3 else "UNBOUNDED"
        return f"counts ({cells}); normalised ratio variation {verdict}"


def growth_check(exponents: tuple[int, ...] = (4, 5, 6)) -> GrowthReport:
    """Count biquadratic fields at X = 10^k and test that the normalised
    rate count / (sqrt(X) * (log X)^2) varies by less than a factor of 3.

    The pairwise comparison is exact: with X = 10^k the squared ratio of
    normalised rates is c_a^2 k_b^4 10^{k_b} / (c_b^2 k_a^4 10^{k_a}),
    compared against 9 in both directions.
    """
    counts = tuple(len(biquadratic_fields(10 ** k)) for k in exponents)
    ok = True
    for ka, ca in zip(exponents, counts):
        for kb, cb in zip(exponents, counts):
            if ca ** 2 * kb ** 4 * 10 ** kb >= 9 * cb ** 2 * ka ** 4 * 10 ** ka:
                ok = False
    return GrowthReport(tuple(exponents), counts, ok)


# ---------------------------------------------------------------------------
# per-field summary rows


def log_ratio_string(count: int, modulus: int, places: int = 4) -> str:
    """ln(count)/ln(modulus) correctly rounded (half-up) to `places`
    decimals, computed by integer comparisons only.

    The rounded value is d/10^places with
    d = max { j >= 0 : modulus^(2j-1) <= count^(2 * 10^places) }.
    """
    if count < 1 or modulus < 2:
        raise ValueError("need count >= 1 and modulus >= 2")
    if count >= modulus:
        raise ValueError("ratio must lie in [0, 1)")
    scale = 10 ** places
    target = count ** (2 * scale)
    lo, hi = 0, scale
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if modulus ** (2 * mid - 1) <= target:
            lo = mid
        else:
            hi = mid - 1
    return f"0.{lo:0{places}d}"


@dataclass(frozen=True)
class TableRow:
    p: int
    q: int
    r: int
    disc: int
    iota_p: int
    iota_q: int
    iota_r: int
    iota: int
    ratio: str
    extra_units: bool

    def describe(self) -> str:
        star = "*" if self.extra_units else " "
        return (f"({self.p:3d},{self.q:4d},{self.r:4d}){star} "
                f"{self.iota_p:3d} {self.iota_q:3d} {self.iota_r:3d} "
                f"{self.iota:5d}  {self.ratio}")


def table_row(m1: int, m2: int, jobs: int = 1,
              budget: int | None = None) -> TableRow:
    """Summary row for the field generated by sqrt(m1), sqrt(m2):
    subfield and field indecomposable class counts, the log-ratio of the
    field count to (4 * radical)^2, and the extra-units flag."""
    F = BiquadField(m1, m2)
    result = indecomposables(F, jobs=jobs, budget=budget)
    radical = F.p * F.q // gcd(F.p, F.q)
    return TableRow(
        p=F.p, q=F.q, r=F.r, disc=F.disc,
        iota_p=iota_quad(F.p), iota_q=iota_quad(F.q), iota_r=iota_quad(F.r),
        iota=result.iota,
        ratio=log_ratio_string(result.iota, (4 * radical) ** 2),
        extra_units=has_extra_units(result.info),
    )


def _table_row_job(args) -> TableRow:
    m1, m2, budget = args
    return table_row(m1, m2, budget=budget)


def table_rows(max_disc: int, jobs: int = 1,
               budget: int | None = None) -> list[TableRow]:
    """Summary rows for every biquadratic field with disc <= max_disc."""
    fields = biquadratic_fields(max_disc)
    tasks = [(F.p, F.q, budget) for F in fields]
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(jobs) as pool:
            rows = pool.map(_table_row_job, tasks)
    else:
        rows = [_table_row_job(t) for t in tasks]
    return rows
