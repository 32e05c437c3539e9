"""Periodic continued fractions of quadratic irrationals.

For a squarefree d >= 2 put omega = sqrt(d) when d = 2, 3 (mod 4) and
omega = (1 + sqrt(d))/2 when d = 1 (mod 4).  The expansions computed here
are those of -omega' (the negated conjugate), which are purely periodic
after the first partial quotient:  -omega' = [u0; bar(u1, ..., us)].
All arithmetic runs on the integer (P, Q) recurrence.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .exactalg import QuadElem, is_squarefree, sign_quad


@dataclass(frozen=True)
class PeriodicCF:
    """Expansion -omega' = [u0; bar(period)] together with convergent data."""

    d: int
    u0: int
    period: tuple[int, ...]

    @property
    def s(self) -> int:
        """Period length."""
        return len(self.period)

    def partial_quotient(self, k: int) -> int:
        """u_k with the periodic continuation for k > s."""
        if k < 0:
            raise IndexError("partial quotients start at k = 0")
        if k == 0:
            return self.u0
        return self.period[(k - 1) % self.s]

    def convergent(self, i: int) -> tuple[int, int]:
        """(numerator s_i, denominator t_i); i = -1 gives the formal (1, 0)."""
        if i < -1:
            raise IndexError("convergents start at i = -1")
        return self._convergent_row(i)

    def _convergent_row(self, i: int) -> tuple[int, int]:
        rows = self.__dict__.setdefault("_rows", [(1, 0), (self.u0, 1)])
        while len(rows) < i + 2:
            k = len(rows) - 1  # next index to fill
            u = self.partial_quotient(k)
            s1, t1 = rows[-1]
            s2, t2 = rows[-2]
            rows.append((u * s1 + s2, u * t1 + t2))
        return rows[i + 1]

    def alpha(self, i: int) -> QuadElem:
        """alpha_i = s_i + t_i * omega."""
        s, t = self.convergent(i)
        return QuadElem.from_omega(self.d, s, t)

    def semiconvergent(self, i: int, l: int) -> QuadElem:
        """alpha_{i,l} = alpha_i + l * alpha_{i+1}."""
        if l < 0:
            raise ValueError("l must be >= 0")
        return self.alpha(i) + l * self.alpha(i + 1)

    def semiconvergent_pair(self, i: int, l: int) -> tuple[int, int]:
        s1, t1 = self.convergent(i)
        s2, t2 = self.convergent(i + 1)
        return s1 + l * s2, t1 + l * t2


def omega(d: int) -> QuadElem:
    return QuadElem.from_omega(d, 0, 1)


def minus_omega_conj(d: int) -> QuadElem:
    """-omega', the expanded irrational: sqrt(d) resp. (-1+sqrt(d))/2."""
    return -omega(d).conj()


@lru_cache(maxsize=None)
def cf_expand(d: int) -> PeriodicCF:
    """Continued fraction of -omega' via the (P, Q) integer recurrence."""
    if d < 2 or not is_squarefree(d):
        raise ValueError(f"radicand must be squarefree >= 2, got {d}")
    if d % 4 == 1:
        p, q = -1, 2
    else:
        p, q = 0, 1
    rt = isqrt(d)
    quotients: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    k = 0
    while True:
        if k >= 1:
            if (p, q) in seen:
                start = seen[(p, q)]
                if start != 1:
                    raise AssertionError(f"pre-period {start} != 1 for d={d}")
                return PeriodicCF(d, quotients[0], tuple(quotients[1:]))
            seen[(p, q)] = k
        u = (p + rt) // q
        quotients.append(u)
        p = u * q - p
        q = (d - p * p) // q
        k += 1


def fundamental_unit(d: int) -> QuadElem:
    """The fundamental unit > 1 of Q(sqrt(d)), as alpha_{s-1}; norm (-1)^s."""
    cf = cf_expand(d)
    eps = cf.alpha(cf.s - 1)
    n = eps.norm()
    if abs(n) != 1 or not eps.is_integral():
        raise AssertionError(f"alpha_(s-1) is not a unit for d={d}")
    if n != (-1) ** cf.s:
        raise AssertionError(f"unit norm disagrees with period parity for d={d}")
    return eps


def totally_positive_fundamental_unit(d: int) -> QuadElem:
    """Generator > 1 of the totally positive units modulo +-1."""
    eps = fundamental_unit(d)
    return eps if eps.norm() == 1 else eps * eps


def odd_partial_quotient_max(d: int) -> int:
    """Max of u_k over odd k through one (doubled, when s is odd) period."""
    cf = cf_expand(d)
    if cf.s % 2:
        return max(cf.period)
    return max(cf.period[0::2])


# ---------------------------------------------------------------------------
# one-sided best approximations (second kind) to -omega'


def _floor_t_xi(t: int, d: int) -> int:
    """floor(t * (-omega')) for t >= 1."""
    if d % 4 == 1:
        return (isqrt(t * t * d) - t) // 2
    return isqrt(t * t * d)


def _err_cmp(a: tuple[int, int], b: tuple[int, int], d: int, upper: bool) -> int:
    """Compare |x - t*xi| for two fractions on the same side of xi = -omega'."""
    (x1, t1), (x2, t2) = a, b
    # upper side: err = x - t*xi > 0; lower side: err = t*xi - x > 0
    sgn = 1 if upper else -1
    xi = minus_omega_conj(d)
    diff = sgn * ((x1 - x2) - (t1 - t2) * xi)
    return sign_quad(diff.x, diff.y, diff.d)


def best_one_sided_approximations(d: int, t_max: int, upper: bool) -> list[tuple[int, int]]:
    """Semiconvergent one-sided best approximations with denominator <= t_max.

    Upper side uses odd i >= -1 (skipping the formal (i, l) = (-1, 0)),
    lower side even i >= 0, each with 0 <= l < u_{i+2}.
    """
    cf = cf_expand(d)
    out: list[tuple[int, int]] = []
    i = -1 if upper else 0
    while True:
        s2, t2 = cf.convergent(i + 1)
        s1, t1 = cf.convergent(i)
        if t1 > t_max:
            break
        for l in range(cf.partial_quotient(i + 2)):
            if upper and i == -1 and l == 0:
                continue
            x, t = s1 + l * s2, t1 + l * t2
            if t > t_max:
                break
            if t >= 1:
                out.append((x, t))
        i += 2
    return sorted(out, key=lambda f: f[1])


def brute_one_sided_approximations(d: int, t_max: int, upper: bool) -> list[tuple[int, int]]:
    """Record-scan oracle for the one-sided best approximations of 2nd kind:
    keep x/t whenever |x - t*xi| beats every smaller denominator."""
    out: list[tuple[int, int]] = []
    best: tuple[int, int] | None = None
    for t in range(1, t_max + 1):
        f = _floor_t_xi(t, d)
        x = f + 1 if upper else f
        if best is None or _err_cmp((x, t), best, d, upper) < 0:
            best = (x, t)
            out.append((x, t))
    return out
