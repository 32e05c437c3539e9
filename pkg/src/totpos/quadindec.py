"""Indecomposable totally positive integers in real quadratic fields.

An integral alpha >> 0 is indecomposable when it is not a sum of two
totally positive integers.  The complete list modulo totally positive
units consists of the semiconvergents alpha_{i,l} = alpha_i + l*alpha_{i+1}
of the expansion of -omega', taken at odd i (one period when the period
length s is even, two periods when s is odd).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .contfrac import (PeriodicCF, cf_expand, minus_omega_conj, omega,
                       totally_positive_fundamental_unit, _floor_t_xi)
from .exactalg import QuadElem, Rat


def quad_indecomposable_items(d: int) -> list[tuple[int, int, QuadElem]]:
    """[(i, l, alpha_{i,l})] — one representative per orbit, odd i."""
    cf = cf_expand(d)
    top = cf.s - 1 if cf.s % 2 == 0 else 2 * cf.s - 1  # odd i < top
    items: list[tuple[int, int, QuadElem]] = []
    for i in range(-1, top, 2):
        for l in range(cf.partial_quotient(i + 2)):
            items.append((i, l, cf.semiconvergent(i, l)))
    return items


def quad_indecomposables(d: int) -> list[QuadElem]:
    return [e for _, _, e in quad_indecomposable_items(d)]


def iota_quad(d: int) -> int:
    """Number of indecomposable classes modulo totally positive units."""
    cf = cf_expand(d)
    top = cf.s - 1 if cf.s % 2 == 0 else 2 * cf.s - 1
    return sum(cf.partial_quotient(i + 2) for i in range(-1, top, 2))


# ---------------------------------------------------------------------------
# witness search (decomposability test)


def _floor_affine_sqrt(a: Rat, b: Rat, s: int, c: Rat) -> int:
    """floor((a + s*sqrt(b)) / c) for rationals with b >= 0, c > 0, s = +-1."""

    def le_value(k: int) -> bool:  # k <= (a + s*sqrt(b)) / c ?
        u = k * c - a
        if s > 0:
            return u <= 0 or u * u <= b
        return u <= 0 and u * u >= b

    approx = Fraction(isqrt(b.numerator * b.denominator), b.denominator)
    k = int((a + s * approx) / c)
    while le_value(k + 1):
        k += 1
    while not le_value(k):
        k -= 1
    return k


def _gauss_reduced_basis(alpha: QuadElem) -> tuple[QuadElem, QuadElem, Rat, Rat, Rat]:
    """Lagrange-Gauss reduce {1, omega} for the quadratic form
    Q(beta) = (s1(beta)/s1(alpha))^2 + (s2(beta)/s2(alpha))^2 = Tr(beta^2/alpha^2),
    which is an exact rational form.  Returns (v1, v2, g11, g12, g22)."""
    inv2 = (alpha * alpha).inverse()

    def gram(u: QuadElem, v: QuadElem) -> Rat:
        return (u * v * inv2).trace()

    v1 = QuadElem(alpha.d, 1, 0)
    v2 = omega(alpha.d)
    if gram(v1, v1) > gram(v2, v2):
        v1, v2 = v2, v1
    while True:
        m = round(gram(v1, v2) / gram(v1, v1))
        if m:
            v2 = v2 - m * v1
        if gram(v2, v2) >= gram(v1, v1):
            return v1, v2, gram(v1, v1), gram(v1, v2), gram(v2, v2)
        v1, v2 = v2, v1


def decomposition_witness_quad(alpha: QuadElem) -> tuple[QuadElem, QuadElem] | None:
    """An integral beta with 0 << beta << alpha (both strict in each
    embedding), returned as the pair (beta, alpha - beta); None when alpha
    is indecomposable.  Enumerates the lattice points of the rectangle
    (0, s1(alpha)) x (0, s2(alpha)) through a Gauss-reduced basis, so the
    cost scales with N(alpha)/sqrt(d), not with the trace."""
    if not alpha.is_integral():
        raise ValueError("alpha must be integral")
    if not alpha.is_totally_positive():
        raise ValueError("alpha must be totally positive")
    one = QuadElem(alpha.d, 1, 0)
    rest = alpha - one
    if rest.is_totally_positive():
        return one, rest
    v1, v2, g11, g12, g22 = _gauss_reduced_basis(alpha)
    det = g11 * g22 - g12 * g12
    two = Fraction(2)
    c2_hi = _floor_affine_sqrt(Fraction(0), two * g11 / det, 1, Fraction(1))
    for c2 in range(-c2_hi, c2_hi + 1):
        disc = two * g11 - c2 * c2 * det
        if disc < 0:
            continue
        lo = -_floor_affine_sqrt(g12 * c2, disc, 1, g11)   # ceil((-g12 c2 - sqrt)/g11)
        hi = _floor_affine_sqrt(-g12 * c2, disc, 1, g11)
        base = c2 * v2
        for c1 in range(lo, hi + 1):
            beta = c1 * v1 + base
            if beta.x == 0 and beta.y == 0:
                continue
            if not beta.is_totally_positive():
                continue
            rem = alpha - beta
            if rem.is_totally_positive():
                return beta, rem
    return None


def is_indecomposable_quad(alpha: QuadElem) -> bool:
    return decomposition_witness_quad(alpha) is None


# ---------------------------------------------------------------------------
# orbits modulo totally positive units


def unit_orbit_rep_quad(alpha: QuadElem) -> QuadElem:
    """Canonical orbit representative: minimal trace, ties by (x, y)."""
    eps = totally_positive_fundamental_unit(alpha.d)
    steps = (eps, eps.inverse())
    improved = True
    while improved:
        improved = False
        for s in steps:
            cand = alpha * s
            if cand.trace() < alpha.trace():
                alpha = cand
                improved = True
                break
    for s in steps:
        cand = alpha * s
        if cand.trace() == alpha.trace() and (cand.x, cand.y) < (alpha.x, alpha.y):
            alpha = cand
    return alpha


def equivalent_mod_units_quad(a: QuadElem, b: QuadElem) -> bool:
    """Same orbit under multiplication by totally positive units?"""
    if a.norm() != b.norm():
        return False
    u = a / b
    return u.is_integral() and u.norm() == 1 and u.is_totally_positive()


# ---------------------------------------------------------------------------
# windowed brute-force comparison


@dataclass
class QuadBruteReport:
    d: int
    trace_cap: Rat
    iota: int
    window_size: int
    window_indecomposables: int
    reps_in_window: int
    reps_all_indecomposable: bool
    window_reduces_into_list: bool
    reps_pairwise_inequivalent: bool

    @property
    def ok(self) -> bool:
        return (self.reps_all_indecomposable and self.window_reduces_into_list
                and self.reps_pairwise_inequivalent)


def _totpos_omega_coords(da: int, db: int, d: int) -> bool:
    """Integer-only total positivity of da + db*omega (nonzero assumed)."""
    if d % 4 == 1:
        t = 2 * da + db  # trace
        return t > 0 and t * t > db * db * d
    return da > 0 and da * da > db * db * d


def _small_embedding_window(d: int, trace_cap: Rat) -> list[tuple[int, int]]:
    """omega-coordinates of every totally positive integral alpha with
    Tr(alpha) <= trace_cap and min embedding <= 1.  (Every indecomposable
    except 1 has min embedding < 1, and decomposition witnesses can be
    assumed indecomposable, so verdicts inside the window are exact.)"""
    cap = Fraction(trace_cap)
    gap_sq = d if d % 4 == 1 else 4 * d  # (omega - omega')^2
    out: set[tuple[int, int]] = set()
    b = 0
    while Fraction(b * b * gap_sq) <= (cap + 1) ** 2:
        # the one integer a with 0 < a + b*conj(omega) <= 1
        da, db = (_floor_t_xi(b, d) + 1 if b else 1), b
        trace = 2 * da + db if d % 4 == 1 else 2 * da
        if trace <= cap and _totpos_omega_coords(da, db, d):
            out.add((da, db))
            # the conjugate covers the case "first embedding <= 1"
            out.add((da + db, -db) if d % 4 == 1 else (da, -db))
        b += 1

    def trace_of(t):
        return 2 * t[0] + t[1] if d % 4 == 1 else 2 * t[0]

    return sorted(out, key=lambda t: (trace_of(t), t))


def windowed_brute_check(d: int, trace_cap=None) -> QuadBruteReport:
    """Exhaustive comparison of the semiconvergent list against brute force
    inside a trace window (full equality whenever the window covers every
    representative; the cap is clamped for fields with huge units, where
    each representative is still verified indecomposable directly)."""
    reps = quad_indecomposables(d)
    max_rep_trace = max(e.trace() for e in reps)
    if trace_cap is None:
        cap = min(max_rep_trace, Fraction(4000))
    else:
        cap = Fraction(trace_cap)
    window = _small_embedding_window(d, cap)

    def trace_of(t):
        return 2 * t[0] + t[1] if d % 4 == 1 else 2 * t[0]

    indecs: list[tuple[int, int]] = []
    for ia, (xa, ya) in enumerate(window):
        ta = trace_of((xa, ya))
        found = False
        for xb, yb in window:
            if 2 * trace_of((xb, yb)) > ta:
                break
            if (xa, ya) == (xb, yb):
                continue
            if _totpos_omega_coords(xa - xb, ya - yb, d):
                found = True
                break
        if not found:
            indecs.append((xa, ya))

    def canon_key(e: QuadElem) -> tuple[Rat, Rat]:
        r = unit_orbit_rep_quad(e)
        return (r.x, r.y)

    brute_canon = {canon_key(QuadElem.from_omega(d, a, b)) for a, b in indecs}
    listed_canon = {canon_key(e) for e in reps}
    reduces = brute_canon <= listed_canon
    reps_ok = all(is_indecomposable_quad(e) for e in reps)
    pairwise = len(listed_canon) == len(reps)
    in_window = [e for e in reps if e.trace() <= cap]
    exact_cover = all(canon_key(e) in brute_canon for e in in_window)
    return QuadBruteReport(
        d=d, trace_cap=cap, iota=len(reps), window_size=len(window),
        window_indecomposables=len(indecs), reps_in_window=len(in_window),
        reps_all_indecomposable=reps_ok,
        window_reduces_into_list=reduces and exact_cover,
        reps_pairwise_inequivalent=pairwise)
