"""Exact arithmetic in real quadratic and biquadratic number fields.

Square roots never become floats here: they are handled symbolically or
through certified integer enclosures built on :func:`math.isqrt`.  Every
predicate (sign, comparison, integrality, ...) is decided by integer
arithmetic alone.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Sequence

Rat = Fraction

_SIGNS = ((1, 1, 1), (-1, 1, -1), (1, -1, -1), (-1, -1, 1))
# Row j gives the images of (sqrt(p), sqrt(q), sqrt(r)) under the j-th real
# embedding; the identity is row 0 and row 3 fixes sqrt(r).


# ---------------------------------------------------------------------------
# small integer helpers


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of n >= 1 by trial division."""
    if n < 1:
        raise ValueError("factorize wants n >= 1")
    out: list[tuple[int, int]] = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    return all(e == 1 for _, e in factorize(n))


def squarefree_part(n: int) -> int:
    """The squarefree d with n = d * (square); sign is preserved."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    s = -1 if n < 0 else 1
    d = 1
    for p, e in factorize(abs(n)):
        if e % 2:
            d *= p
    return s * d


@lru_cache(maxsize=None)
def _sqrt_lo(n: int, prec: int) -> int:
    """Largest integer lo with lo <= sqrt(n) * 2**prec."""
    return isqrt(n << (2 * prec))


def sqrt_enclosure(n: int, prec: int) -> tuple[int, int]:
    """Integers (lo, hi) with lo <= sqrt(n)*2**prec <= hi and hi - lo <= 1."""
    lo = _sqrt_lo(n, prec)
    if lo * lo == n << (2 * prec):
        return lo, lo
    return lo, lo + 1


def sign_sqrt_comb(terms: Sequence[tuple[Rat | int, int]]) -> int:
    """Exact sign of sum(c * sqrt(n) for c, n in terms).

    The radicands must be positive and pairwise distinct squarefree numbers
    (1 is allowed for the rational part); then the value is zero only when
    every coefficient is zero, and interval refinement terminates.
    """
    coefs = [Fraction(c) for c, _ in terms]
    if all(c == 0 for c in coefs):
        return 0
    den = 1
    for c in coefs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [(int(c * den), n) for c, n in zip(coefs, (n for _, n in terms))]
    prec = 32
    while prec <= 1 << 20:
        lo_total = 0
        hi_total = 0
        for c, n in ints:
            if c == 0:
                continue
            lo, hi = sqrt_enclosure(n, prec)
            if c > 0:
                lo_total += c * lo
                hi_total += c * hi
            else:
                lo_total += c * hi
                hi_total += c * lo
        if lo_total > 0:
            return 1
        if hi_total < 0:
            return -1
        prec *= 2
    raise ArithmeticError("sign refinement did not terminate; dependent radicands?")


def sign_quad(x: Rat | int, y: Rat | int, d: int) -> int:
    """Exact sign of x + y*sqrt(d) for non-square d >= 2."""
    x = Fraction(x)
    y = Fraction(y)
    if y == 0:
        return (x > 0) - (x < 0)
    if x == 0:
        return (y > 0) - (y < 0)
    if x > 0 and y > 0:
        return 1
    if x < 0 and y < 0:
        return -1
    # opposite signs: compare x^2 with y^2 d (equality impossible, d non-square)
    if x * x > y * y * d:
        return 1 if x > 0 else -1
    return 1 if y > 0 else -1


# ---------------------------------------------------------------------------
# real quadratic fields


class QuadElem:
    """An element x + y*sqrt(d) of a real quadratic field, x and y rational."""

    __slots__ = ("d", "x", "y")

    def __init__(self, d: int, x: Rat | int, y: Rat | int):
        if d < 2 or not is_squarefree(d):
            raise ValueError(f"radicand must be squarefree >= 2, got {d}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("QuadElem is immutable")

    @classmethod
    def from_omega(cls, d: int, a: Rat | int, b: Rat | int) -> "QuadElem":
        """a + b*omega where omega = sqrt(d) or (1+sqrt(d))/2 as d mod 4 dictates."""
        a, b = Fraction(a), Fraction(b)
        if d % 4 == 1:
            return cls(d, a + b / 2, b / 2)
        return cls(d, a, b)

    def omega_coords(self) -> tuple[Rat, Rat]:
        if self.d % 4 == 1:
            return self.x - self.y, 2 * self.y
        return self.x, self.y

    def _check(self, other: "QuadElem"):
        if self.d != other.d:
            raise ValueError("mixed radicands")

    def __add__(self, other):
        if isinstance(other, QuadElem):
            self._check(other)
            return QuadElem(self.d, self.x + other.x, self.y + other.y)
        return QuadElem(self.d, self.x + Fraction(other), self.y)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(self.d, -self.x, -self.y)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadElem) else QuadElem(self.d, -Fraction(other), 0))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QuadElem):
            self._check(other)
            return QuadElem(
                self.d,
                self.x * other.x + self.y * other.y * self.d,
                self.x * other.y + self.y * other.x,
            )
        return QuadElem(self.d, self.x * Fraction(other), self.y * Fraction(other))

    __rmul__ = __mul__

    def conj(self) -> "QuadElem":
        return QuadElem(self.d, self.x, -self.y)

    def trace(self) -> Rat:
        return 2 * self.x

    def norm(self) -> Rat:
        return self.x * self.x - self.y * self.y * self.d

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero element")
        return QuadElem(self.d, self.x / n, -self.y / n)

    def __truediv__(self, other):
        if isinstance(other, QuadElem):
            return self * other.inverse()
        return QuadElem(self.d, self.x / Fraction(other), self.y / Fraction(other))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = QuadElem(self.d, 1, 0)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def sign(self) -> int:
        return sign_quad(self.x, self.y, self.d)

    def signs(self) -> tuple[int, int]:
        return self.sign(), self.conj().sign()

    def is_totally_positive(self) -> bool:
        return self.sign() > 0 and self.conj().sign() > 0

    def is_integral(self) -> bool:
        if self.d % 4 == 1:
            return (2 * self.x).denominator == 1 and (2 * self.y).denominator == 1 \
                and (self.x - self.y).denominator == 1
        return self.x.denominator == 1 and self.y.denominator == 1

    def is_unit(self) -> bool:
        return self.is_integral() and abs(self.norm()) == 1

    def enclosure(self, prec: int, conjugate: bool = False) -> tuple[Rat, Rat]:
        """Rational lo <= embedding <= hi with hi - lo <= |y| / 2**prec."""
        y = -self.y if conjugate else self.y
        lo, hi = sqrt_enclosure(self.d, prec)
        scale = Fraction(1, 1 << prec)
        if y >= 0:
            return self.x + y * lo * scale, self.x + y * hi * scale
        return self.x + y * hi * scale, self.x + y * lo * scale

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            return self.d == other.d and self.x == other.x and self.y == other.y
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __hash__(self):
        return hash((self.d, self.x, self.y))

    def __repr__(self):
        return f"QuadElem({self.d}, {self.x}, {self.y})"

    def __str__(self):
        return fmt_sqrt_comb([(self.x, 1), (self.y, self.d)])


# ---------------------------------------------------------------------------
# biquadratic fields Q(sqrt(p), sqrt(q))


class BiquadField:
    """A totally real biquadratic field, normalised as (p, q, r).

    The three quadratic subfields have radicands p, q, r with r the
    "product" radicand.  Normalisation: p = r mod 4, p < r, and q is the
    radicand congruent to 1 mod 4 whenever one exists (p < q < r when all
    three are 1 mod 4).
    """

    __slots__ = ("p", "q", "r", "ftype", "cpq", "cpr", "cqr", "disc",
                 "_basis_inv", "_basis_coords")

    def __init__(self, m1: int, m2: int):
        for m in (m1, m2):
            if m < 2 or not is_squarefree(m):
                raise ValueError(f"radicand must be squarefree >= 2, got {m}")
        if m1 == m2:
            raise ValueError("radicands must generate a quartic field")
        g = gcd(m1, m2)
        m3 = m1 * m2 // (g * g)
        if m3 == 1 or m3 == m1 or m3 == m2:
            raise ValueError(f"({m1}, {m2}) does not generate a quartic field")
        rads = sorted({m1, m2, m3})
        evens = [m for m in rads if m % 2 == 0]
        odds = [m for m in rads if m % 2]
        if len(evens) == 2:
            p, r = evens
            q = odds[0]
            ftype = 1 if q % 4 == 3 else 2
        else:
            res1 = [m for m in rads if m % 4 == 1]
            if len(res1) == 1:
                q = res1[0]
                p, r = sorted(m for m in rads if m != q)
                ftype = 2
            else:
                p, q, r = rads
                ftype = 3 if gcd(p, q) % 4 == 1 else 4
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "ftype", ftype)
        object.__setattr__(self, "cpq", gcd(p, q))
        object.__setattr__(self, "cpr", gcd(p, r))
        object.__setattr__(self, "cqr", gcd(q, r))
        rad = p * q // gcd(p, q)
        rexp = {1: 3, 2: 2, 3: 0, 4: 0}[ftype]
        object.__setattr__(self, "disc", ((1 << rexp) * rad) ** 2)
        object.__setattr__(self, "_basis_inv", None)
        object.__setattr__(self, "_basis_coords", None)

    def __setattr__(self, *a):
        raise AttributeError("BiquadField is immutable")

    def __eq__(self, other):
        return isinstance(other, BiquadField) and (self.p, self.q) == (other.p, other.q)

    def __hash__(self):
        return hash((self.p, self.q, self.r))

    def __repr__(self):
        return f"BiquadField({self.p}, {self.q})  # r={self.r}, type {self.ftype}"

    # -- elements ----------------------------------------------------------

    def elem(self, x: Rat | int, y: Rat | int = 0, z: Rat | int = 0,
             w: Rat | int = 0) -> "BiquadElem":
        """Element x + y sqrt(p) + z sqrt(q) + w sqrt(r)."""
        fx, fy, fz, fw = Fraction(x), Fraction(y), Fraction(z), Fraction(w)
        den = 1
        for f in (fx, fy, fz, fw):
            den = den * f.denominator // gcd(den, f.denominator)
        return BiquadElem(self, int(fx * den), int(fy * den), int(fz * den),
                          int(fw * den), den)

    def one(self) -> "BiquadElem":
        return BiquadElem(self, 1, 0, 0, 0, 1)

    def zero(self) -> "BiquadElem":
        return BiquadElem(self, 0, 0, 0, 0, 1)

    def sqrt_p(self) -> "BiquadElem":
        return BiquadElem(self, 0, 1, 0, 0, 1)

    def sqrt_q(self) -> "BiquadElem":
        return BiquadElem(self, 0, 0, 1, 0, 1)

    def sqrt_r(self) -> "BiquadElem":
        return BiquadElem(self, 0, 0, 0, 1, 1)

    def from_quad(self, e: QuadElem) -> "BiquadElem":
        """Embed an element of a quadratic subfield."""
        if e.d == self.p:
            return self.elem(e.x, e.y, 0, 0)
        if e.d == self.q:
            return self.elem(e.x, 0, e.y, 0)
        if e.d == self.r:
            return self.elem(e.x, 0, 0, e.y)
        raise ValueError(f"sqrt({e.d}) is not in this field")

    def integral_basis(self) -> tuple["BiquadElem", ...]:
        if self.ftype == 1:
            vecs = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0),
                    (0, Fraction(1, 2), 0, Fraction(1, 2))]
        elif self.ftype == 2:
            vecs = [(1, 0, 0, 0), (0, 1, 0, 0),
                    (Fraction(1, 2), 0, Fraction(1, 2), 0),
                    (0, Fraction(1, 2), 0, Fraction(1, 2))]
        elif self.ftype == 3:
            vecs = [(1, 0, 0, 0),
                    (Fraction(1, 2), Fraction(1, 2), 0, 0),
                    (Fraction(1, 2), 0, Fraction(1, 2), 0),
                    (Fraction(1, 4), Fraction(1, 4), Fraction(1, 4), Fraction(1, 4))]
        else:
            vecs = [(1, 0, 0, 0),
                    (Fraction(1, 2), Fraction(1, 2), 0, 0),
                    (Fraction(1, 2), 0, Fraction(1, 2), 0),
                    (Fraction(1, 4), Fraction(-1, 4), Fraction(1, 4), Fraction(1, 4))]
        return tuple(self.elem(*v) for v in vecs)

    def _inv_matrix(self) -> tuple[tuple[Rat, ...], ...]:
        inv = self._basis_inv
        if inv is None:
            cols = [(e.as_fractions()) for e in self.integral_basis()]
            mat = [[cols[j][i] for j in range(4)] for i in range(4)]
            inv = _invert4(mat)
            object.__setattr__(self, "_basis_inv", inv)
        return inv

    def basis_coords(self, e: "BiquadElem") -> tuple[Rat, Rat, Rat, Rat]:
        """Coordinates of e over the integral basis (rational in general)."""
        inv = self._inv_matrix()
        v = e.as_fractions()
        return tuple(sum(inv[i][j] * v[j] for j in range(4)) for i in range(4))  # type: ignore

    def subfield_radicands(self) -> tuple[int, int, int]:
        return self.p, self.q, self.r


def _invert4(m: list[list[Rat]]) -> tuple[tuple[Rat, ...], ...]:
    n = 4
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        d = a[col][col]
        a[col] = [v / d for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


class BiquadElem:
    """(a + b sqrt(p) + c sqrt(q) + d sqrt(r)) / den with integer a, b, c, d."""

    __slots__ = ("field", "a", "b", "c", "d", "den")

    def __init__(self, field: BiquadField, a: int, b: int, c: int, d: int, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            a, b, c, d, den = -a, -b, -c, -d, -den
        g = gcd(gcd(abs(a), abs(b)), gcd(gcd(abs(c), abs(d)), den))
        if g > 1:
            a, b, c, d, den = a // g, b // g, c // g, d // g, den // g
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("BiquadElem is immutable")

    def as_fractions(self) -> tuple[Rat, Rat, Rat, Rat]:
        n = self.den
        return (Fraction(self.a, n), Fraction(self.b, n),
                Fraction(self.c, n), Fraction(self.d, n))

    def coords_scaled(self, scale: int = 4) -> tuple[int, int, int, int]:
        """(scale*x, scale*y, scale*z, scale*w) as ints; raises if not exact."""
        if scale % self.den:
            raise ValueError(f"denominator {self.den} does not divide {scale}")
        m = scale // self.den
        return self.a * m, self.b * m, self.c * m, self.d * m

    def _check(self, other: "BiquadElem"):
        if self.field is not other.field and self.field != other.field:
            raise ValueError("elements of different fields")

    def __add__(self, other):
        if isinstance(other, BiquadElem):
            self._check(other)
            n1, n2 = self.den, other.den
            return BiquadElem(self.field,
                              self.a * n2 + other.a * n1,
                              self.b * n2 + other.b * n1,
                              self.c * n2 + other.c * n1,
                              self.d * n2 + other.d * n1,
                              n1 * n2)
        f = Fraction(other)
        return BiquadElem(self.field,
                          self.a * f.denominator + f.numerator * self.den,
                          self.b * f.denominator, self.c * f.denominator,
                          self.d * f.denominator, self.den * f.denominator)

    __radd__ = __add__

    def __neg__(self):
        return BiquadElem(self.field, -self.a, -self.b, -self.c, -self.d, self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, BiquadElem) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, BiquadElem):
            self._check(other)
            F = self.field
            a1, b1, c1, d1 = self.a, self.b, self.c, self.d
            a2, b2, c2, d2 = other.a, other.b, other.c, other.d
            p, q, r = F.p, F.q, F.r
            a = a1 * a2 + p * b1 * b2 + q * c1 * c2 + r * d1 * d2
            b = a1 * b2 + b1 * a2 + F.cqr * (c1 * d2 + d1 * c2)
            c = a1 * c2 + c1 * a2 + F.cpr * (b1 * d2 + d1 * b2)
            d = a1 * d2 + d1 * a2 + F.cpq * (b1 * c2 + c1 * b2)
            return BiquadElem(F, a, b, c, d, self.den * other.den)
        f = Fraction(other)
        return BiquadElem(self.field, self.a * f.numerator, self.b * f.numerator,
                          self.c * f.numerator, self.d * f.numerator,
                          self.den * f.denominator)

    __rmul__ = __mul__

    def galois(self, j: int) -> "BiquadElem":
        """Image under the j-th real embedding, j = 0..3 (0 is the identity)."""
        sp, sq, sr = _SIGNS[j]
        return BiquadElem(self.field, self.a, sp * self.b, sq * self.c,
                          sr * self.d, self.den)

    def conjugates(self) -> tuple["BiquadElem", ...]:
        return tuple(self.galois(j) for j in range(4))

    def trace(self) -> Rat:
        return Fraction(4 * self.a, self.den)

    def norm(self) -> Rat:
        F = self.field
        a, b, c, d = self.a, self.b, self.c, self.d
        u = a * a + F.q * c * c - F.p * b * b - F.r * d * d
        v = 2 * (a * c - F.cpr * b * d)
        return Fraction(u * u - v * v * F.q, self.den ** 4)

    def inverse(self) -> "BiquadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero element")
        prod = self.galois(1) * self.galois(2) * self.galois(3)
        return prod * (1 / n)

    def __truediv__(self, other):
        if isinstance(other, BiquadElem):
            return self * other.inverse()
        return self * (1 / Fraction(other))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def sign(self) -> int:
        F = self.field
        return sign_sqrt_comb([(self.a, 1), (self.b, F.p), (self.c, F.q),
                               (self.d, F.r)])

    def signs(self) -> tuple[int, int, int, int]:
        F = self.field
        out = []
        for sp, sq, sr in _SIGNS:
            out.append(sign_sqrt_comb([(self.a, 1), (sp * self.b, F.p),
                                       (sq * self.c, F.q), (sr * self.d, F.r)]))
        return tuple(out)  # type: ignore

    def is_totally_positive(self) -> bool:
        return all(s > 0 for s in self.signs())

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def is_rational(self) -> bool:
        return self.b == 0 and self.c == 0 and self.d == 0

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.field.basis_coords(self))

    def is_unit(self) -> bool:
        return self.is_integral() and abs(self.norm()) == 1

    def enclosure(self, j: int, prec: int) -> tuple[Rat, Rat]:
        """Rational bounds lo <= sigma_j(self) <= hi, width ~ 2**-prec."""
        F = self.field
        sp, sq, sr = _SIGNS[j]
        lo = Fraction(self.a)
        hi = Fraction(self.a)
        scale = Fraction(1, 1 << prec)
        for coef, rad in ((sp * self.b, F.p), (sq * self.c, F.q), (sr * self.d, F.r)):
            if coef == 0:
                continue
            slo, shi = sqrt_enclosure(rad, prec)
            if coef > 0:
                lo += coef * slo * scale
                hi += coef * shi * scale
            else:
                lo += coef * shi * scale
                hi += coef * slo * scale
        return lo / self.den, hi / self.den

    def compare(self, other: "BiquadElem", j: int) -> int:
        """Sign of sigma_j(self - other)."""
        return (self - other).galois(j).sign()

    def strictly_dominates(self, other: "BiquadElem") -> bool:
        """True when sigma_j(self) > sigma_j(other) for all four embeddings."""
        diff = self - other
        return all(s > 0 for s in diff.signs())

    def __eq__(self, other):
        if isinstance(other, BiquadElem):
            return (self.field == other.field and self.a == other.a
                    and self.b == other.b and self.c == other.c
                    and self.d == other.d and self.den == other.den)
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return (self.b == 0 and self.c == 0 and self.d == 0
                    and self.a == f.numerator and self.den == f.denominator)
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d, self.den))

    def __repr__(self):
        return f"BiquadElem[{self.field.p},{self.field.q},{self.field.r}]({self})"

    def __str__(self):
        F = self.field
        x, y, z, w = self.as_fractions()
        return fmt_sqrt_comb([(x, 1), (y, F.p), (z, F.q), (w, F.r)])


def fmt_sqrt_comb(terms: Iterable[tuple[Rat, int]]) -> str:
    """Human-readable form of sum(c*sqrt(n)), e.g. '(7+5*sqrt(5))/2'."""
    terms = [(Fraction(c), n) for c, n in terms if c != 0]
    if not terms:
        return "0"
    den = 1
    for c, _ in terms:
        den = den * c.denominator // gcd(den, c.denominator)
    parts = []
    for c, n in terms:
        k = int(c * den)
        if n == 1:
            parts.append(f"{k:+d}")
        elif abs(k) == 1:
            parts.append(("+" if k > 0 else "-") + f"sqrt({n})")
        else:
            parts.append(f"{k:+d}*sqrt({n})")
    s = "".join(parts)
    if s.startswith("+"):
        s = s[1:]
    if den == 1:
        return s
    if len(terms) == 1 and not s.startswith("-"):
        return f"{s}/{den}"
    return f"({s})/{den}"
