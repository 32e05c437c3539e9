"""Unit groups and cone structure of totally real biquadratic fields.

The totally positive unit group is found constructively: subfield
fundamental units are combined, exact square roots are recognised by
interval refinement pinned to quarter-integer coordinates and verified by
squaring, and the resulting exponent lattice is put in Hermite normal
form.  Cones over permutations of the generators then tile the totally
positive octant, and each translated cone parallelepiped is enumerated
through a diagonal (Smith-type) form of its coordinate matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import ceil, floor, isqrt

from .contfrac import fundamental_unit
from .exactalg import (BiquadElem, BiquadField, QuadElem, Rat,
                       squarefree_part, sqrt_enclosure, _SIGNS)


def classify_field(m1: int, m2: int) -> BiquadField:
    """Normalise two radicands into the canonical (p, q, r) field."""
    return BiquadField(m1, m2)


# ---------------------------------------------------------------------------
# Kubota-style square testing


def kubota_delta(eps: QuadElem) -> int:
    """Squarefree part of Tr(eps) + 2 for an integral norm +1 unit."""
    if not isinstance(eps, QuadElem):
        raise ValueError("kubota_delta works on quadratic elements; pass the "
                         "subfield unit, not its embedding")
    if not eps.is_integral() or eps.norm() != 1:
        raise ValueError("kubota_delta needs an integral unit of norm +1")
    return squarefree_part(int(eps.trace()) + 2)


def kubota_square_test(field: BiquadField, exponents: tuple[int, int, int],
                       units: tuple[QuadElem, ...] | None = None) -> bool:
    """Is eps_p^a * eps_q^b * eps_r^c a square in the field?  Decided by
    squarefree parts alone; the units carrying odd exponents must have
    norm +1 (use the recognition route otherwise)."""
    if units is None:
        units = tuple(fundamental_unit(d) for d in field.subfield_radicands())
    prod = 1
    for e, u in zip(exponents, units):
        if e % 2:
            prod *= kubota_delta(u)
    return squarefree_part(prod) in {1, field.p, field.q, field.r}


# ---------------------------------------------------------------------------
# exact square roots in the field


def _sqrt_scaled_lo(f: Rat, prec: int) -> int:
    n, d = f.numerator, f.denominator
    return isqrt((n << (2 * prec)) * d) // d


def sqrt_in_field(pi: BiquadElem) -> BiquadElem | None:
    """The square root of pi inside its own field, certified, or None.

    A root, if any, is integral over Z (it solves x^2 - pi), so its
    coordinates over (1, sqrt p, sqrt q, sqrt r) are quarter-integers;
    interval refinement pins those and squaring verifies them exactly.
    """
    F = pi.field
    if pi.is_zero():
        return F.zero()
    if any(s <= 0 for s in pi.signs()):
        return None
    prec = 32
    while prec <= 1 << 16:
        enc = []
        for j in range(4):
            lo, hi = pi.enclosure(j, prec + 4)
            if lo <= 0:
                enc = None
                break
            enc.append((_sqrt_scaled_lo(lo, prec), _sqrt_scaled_lo(hi, prec) + 2))
        if enc is not None:
            candidates = _root_candidates(F, enc, prec)
            if candidates is not None:
                for X, Y, Z, W in candidates:
                    beta = BiquadElem(F, X, Y, Z, W, 4)
                    if beta * beta == pi:
                        if not beta.is_integral():
                            raise AssertionError("root of integral element not integral")
                        return beta if beta.sign() > 0 else -beta
                return None
        prec *= 2
    raise ArithmeticError("square root recognition did not stabilise")


def _int_window(lo: int, hi: int, dlo: int, dhi: int) -> tuple[int, int]:
    """Integer window for k with k * s in [lo, hi] for some s in the
    positive enclosure [dlo, dhi] (all at a common scale)."""
    ends = (Fraction(lo, dhi), Fraction(lo, dlo), Fraction(hi, dhi), Fraction(hi, dlo))
    return ceil(min(ends)), floor(max(ends))


def _root_candidates(F: BiquadField, enc, prec: int):
    """Quarter-coordinate tuples compatible with the sqrt enclosures over
    the eight embedding sign patterns, or None while still too coarse."""
    divs = (None, sqrt_enclosure(F.p, prec), sqrt_enclosure(F.q, prec),
            sqrt_enclosure(F.r, prec))
    out: set[tuple[int, int, int, int]] = set()
    total = 0
    for pat in product((1, -1), repeat=3):
        signs = (1,) + pat
        wins = []
        for col in range(4):
            lo = hi = 0
            for j in range(4):
                c = signs[j] * (_SIGNS[j][col - 1] if col else 1)
                ejlo, ejhi = enc[j]
                lo += c * ejlo if c > 0 else c * ejhi
                hi += c * ejhi if c > 0 else c * ejlo
            if col == 0:
                wins.append((-((-lo) >> prec), hi >> prec))
            else:
                wins.append(_int_window(lo, hi, *divs[col]))
        count = 1
        for wlo, whi in wins:
            count *= max(0, whi - wlo + 1)
        total += count
        if total > 256:
            return None
        if count:
            out.update(product(*(range(wlo, whi + 1) for wlo, whi in wins)))
    return out


# ---------------------------------------------------------------------------
# small exact integer linear algebra (row-vector convention throughout)


def vec_mat(v, M):
    return [sum(v[t] * M[t][j] for t in range(len(M))) for j in range(len(M[0]))]


def mat_det(M) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    n = len(M)
    a = [list(row) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def mat_adjugate(M):
    """Adjugate: M @ adj = adj @ M = det(M) * I."""
    n = len(M)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[M[r][c] for c in range(n) if c != i]
                     for r in range(n) if r != j]
            adj[i][j] = (-1) ** (i + j) * mat_det(minor)
    return adj


def hnf_rows(rows, n: int):
    """Hermite normal form of the full-rank lattice spanned by integer
    rows: upper-triangular basis, positive diagonal, entries above each
    pivot reduced into [0, pivot)."""
    work = [list(r) for r in rows if any(r)]
    basis: list[list[int]] = []
    for col in range(n):
        piv = None
        rest = []
        for r in work:
            if r[col] == 0:
                rest.append(r)
            elif piv is None:
                piv = r
            else:
                while r[col]:
                    t = piv[col] // r[col]
                    for j in range(n):
                        piv[j] -= t * r[j]
                    piv, r = r, piv
                rest.append(r)
        if piv is None:
            raise ValueError("rows do not span a full-rank lattice")
        if piv[col] < 0:
            piv = [-x for x in piv]
        basis.append(piv)
        work = rest
    for i in range(n - 1, -1, -1):
        for k in range(i):
            t = basis[k][i] // basis[i][i]
            if t:
                for j in range(n):
                    basis[k][j] -= t * basis[i][j]
    return [tuple(r) for r in basis]


def diagonal_form(M):
    """Unimodular transforms (U, V, D) with U @ M @ V = D diagonal.

    Plain diagonalisation by alternating row and column reductions; the
    divisibility chain of the full Smith form is not needed here.
    """
    n, m = len(M), len(M[0])
    A = [list(r) for r in M]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(m)] for i in range(m)]
    for k in range(min(n, m)):
        while True:
            best = None
            for i in range(k, n):
                for j in range(k, m):
                    if A[i][j] and (best is None
                                    or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            bi, bj = best
            if bi != k:
                A[k], A[bi] = A[bi], A[k]
                U[k], U[bi] = U[bi], U[k]
            if bj != k:
                for row in A:
                    row[k], row[bj] = row[bj], row[k]
                for row in V:
                    row[k], row[bj] = row[bj], row[k]
            dirty = False
            for i in range(k + 1, n):
                t = A[i][k] // A[k][k]
                if t:
                    for j in range(m):
                        A[i][j] -= t * A[k][j]
                    for j in range(n):
                        U[i][j] -= t * U[k][j]
                if A[i][k]:
                    dirty = True
            for j in range(k + 1, m):
                t = A[k][j] // A[k][k]
                if t:
                    for i in range(n):
                        A[i][j] -= t * A[i][k]
                    for i in range(m):
                        V[i][j] -= t * V[i][k]
                if A[k][j]:
                    dirty = True
            if not dirty:
                break
        if A[k][k] < 0:
            for j in range(m):
                A[k][j] = -A[k][j]
            for j in range(n):
                U[k][j] = -U[k][j]
    return U, V, A


# ---------------------------------------------------------------------------
# the totally positive unit group


@dataclass(frozen=True)
class UnitGroupInfo:
    """Generators and indices for the unit group of a biquadratic field.

    ``gens`` is a basis of the full unit group modulo torsion, normalised
    to exceed 1 in the identity embedding.  ``totpos_gens`` is a basis of
    the totally positive units, size-reduced for enumeration;
    ``totpos_exponents`` records the Hermite-form exponent rows (over
    ``gens``) of the same lattice, not of the reduced basis itself.
    """
    field: BiquadField
    subfield_units: tuple[QuadElem, QuadElem, QuadElem]
    eps: tuple[BiquadElem, BiquadElem, BiquadElem]
    square_classes: tuple[tuple[int, int, int], ...]
    square_roots: dict
    gens: tuple[BiquadElem, BiquadElem, BiquadElem]
    gen_exponents: tuple[tuple[int, int, int], ...]   # g_i^2 = prod eps^row
    sign_vectors: tuple[tuple[int, int, int, int], ...]
    totpos_gens: tuple[BiquadElem, BiquadElem, BiquadElem]
    totpos_exponents: tuple[tuple[int, int, int], ...]  # over gens
    index_totpos: int       # [units : totally positive units]
    index_squares: int      # [totally positive units : squares of units]

    def describe(self) -> str:
        F = self.field
        lines = [f"field Q(sqrt {F.p}, sqrt {F.q})  radicands ({F.p}, {F.q}, "
                 f"{F.r})  type {F.ftype}  disc {F.disc}"]
        for name, g in zip("pqr", self.eps):
            lines.append(f"  eps_{name} = {g}")
        for i, g in enumerate(self.gens):
            lines.append(f"  unit generator g{i + 1} = {g}")
        for i, g in enumerate(self.totpos_gens):
            lines.append(f"  totally positive generator t{i + 1} = {g}")
        lines.append(f"  [units : totally positive] = {self.index_totpos}")
        lines.append(f"  [totally positive : unit squares] = {self.index_squares}")
        return "\n".join(lines)


def _f2_span_size(vectors) -> int:
    basis: list[int] = []
    for v in vectors:
        x = 0
        for b in v:
            x = (x << 1) | (b & 1)
        for bb in basis:
            x = min(x, x ^ bb)
        if x:
            basis.append(x)
    return 1 << len(basis)


def _f2_kernel(vectors):
    """Basis of { a in F2^n : sum a_i * vectors_i = 0 over F2 }."""
    n = len(vectors)
    pivots: dict[int, int] = {}     # leading bit -> row (vector | indicator)
    kernel = []
    for i, v in enumerate(vectors):
        x = 0
        for b in v:
            x = (x << 1) | (b & 1)
        cur = (x << n) | (1 << (n - 1 - i))
        while cur >> n:
            lead = 1 << (cur.bit_length() - 1)
            if lead in pivots:
                cur ^= pivots[lead]
            else:
                pivots[lead] = cur
                break
        else:
            kernel.append(tuple((cur >> (n - 1 - j)) & 1 for j in range(n)))
    return kernel


def totally_positive_units(field: BiquadField) -> UnitGroupInfo:
    """Compute the unit group modulo torsion and its totally positive
    subgroup, with both subgroup indices."""
    eps_quad = tuple(fundamental_unit(d) for d in field.subfield_radicands())
    eps = tuple(field.from_quad(u) for u in eps_quad)

    square_classes = []
    square_roots = {}
    for a in product((0, 1), repeat=3):
        if a == (0, 0, 0):
            continue
        pi = field.one()
        for e, u in zip(a, eps):
            if e:
                pi = pi * u
        root = sqrt_in_field(pi)
        if root is not None:
            square_classes.append(a)
            square_roots[a] = root
    classes = {(0, 0, 0), *square_classes}
    for x in classes:
        for y in classes:
            if tuple((a + b) % 2 for a, b in zip(x, y)) not in classes:
                raise AssertionError("square classes do not form a subgroup")

    rows = [[2 if i == j else 0 for j in range(3)] for i in range(3)]
    rows += [list(a) for a in square_classes]
    H = hnf_rows(rows, 3)

    gens = []
    for h in H:
        par = tuple(x % 2 for x in h)
        g = field.one()
        for i in range(3):
            e = (h[i] - par[i]) // 2
            if e:
                g = g * eps[i] ** e
        if par != (0, 0, 0):
            g = g * square_roots[par]
        if (g - field.one()).sign() < 0:       # normalise to sigma_1 > 1
            g = g.inverse()
        gens.append(g)

    sign_vectors = tuple(tuple(0 if s > 0 else 1 for s in g.signs())
                         for g in gens)
    span = _f2_span_size(sign_vectors)
    index_totpos = 2 * span
    index_squares = 8 // span
    if index_totpos * index_squares != 16:
        raise AssertionError("index product invariant violated")

    krows = [list(k) for k in _f2_kernel(sign_vectors)]
    krows += [[2 if i == j else 0 for j in range(3)] for i in range(3)]
    KH = hnf_rows(krows, 3)
    if mat_det(KH) != span:
        raise AssertionError("totally positive lattice index mismatch")
    totpos_gens = []
    for row in KH:
        t = field.one()
        for i in range(3):
            if row[i]:
                t = t * gens[i] ** row[i]
        if not t.is_totally_positive():
            raise AssertionError("kernel lattice produced a unit with a "
                                 "negative embedding")
        totpos_gens.append(t)
    totpos_gens = list(_reduce_unit_basis(totpos_gens))

    return UnitGroupInfo(
        field=field,
        subfield_units=eps_quad,
        eps=eps,
        square_classes=tuple(square_classes),
        square_roots=square_roots,
        gens=tuple(gens),
        gen_exponents=tuple(tuple(h) for h in H),
        sign_vectors=sign_vectors,
        totpos_gens=tuple(totpos_gens),
        totpos_exponents=tuple(tuple(r) for r in KH),
        index_totpos=index_totpos,
        index_squares=index_squares,
    )


def _reduce_unit_basis(gens):
    """Shrink a basis of the totally positive unit lattice by elementary
    moves t_i <- t_i * t_j^(+-1) while they lower Tr(t) + Tr(t^-1).

    The weight is sum_j (sigma_j + 1/sigma_j), a convex proxy for the
    length of the logarithmic embedding vector; it is a positive integer
    for an integral unit, so the strictly decreasing greedy pass
    terminates.  Canonical-form exponent bases can be astronomically
    unbalanced, and the cone determinants (hence the enumeration work)
    scale with the element sizes.
    """
    g = list(gens)
    w = [int(x.trace() + x.inverse().trace()) for x in g]
    changed = True
    while changed:
        changed = False
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                for tj in (g[j], g[j].inverse()):
                    cand = g[i] * tj
                    cw = int(cand.trace() + cand.inverse().trace())
                    if cw < w[i]:
                        g[i], w[i] = cand, cw
                        changed = True
    order = sorted(range(3), key=lambda i: (w[i], g[i].coords_scaled(4)))
    return tuple(g[i] for i in order)


def has_extra_units(info: UnitGroupInfo) -> bool:
    """Whether the totally positive units exceed the lattice generated by
    the totally positive powers of the three subfield fundamental units.

    Compared via covolumes in fundamental-unit exponent coordinates: the
    full unit group is spanned by rows H/2 (covolume det(H)/8), the totally
    positive units by KH * H/2, and the positivized subfield units by
    diag(e) with e_i = 2 exactly when the subfield unit has norm -1.
    """
    cov_totpos = Rat(mat_det([list(r) for r in info.totpos_exponents])
                     * mat_det([list(r) for r in info.gen_exponents]), 8)
    cov_subfield = 1
    for e in info.subfield_units:
        cov_subfield *= 1 if e.norm() == 1 else 2
    return cov_totpos != cov_subfield


# ---------------------------------------------------------------------------
# cones over the totally positive generators


@dataclass(frozen=True)
class Cone:
    """One simplicial cone of the decomposition: the shifted basis
    (x^-1, 1, y, y*z) for a permutation (x, y, z) of the generators."""
    perm: tuple[int, int, int]
    basis: tuple[BiquadElem, BiquadElem, BiquadElem, BiquadElem]
    matrix: tuple[tuple[int, ...], ...]     # rows: integral-basis coordinates
    det: int


class DegenerateCone(Exception):
    """A permutation's four cone vectors are linearly dependent."""


def cone_decomposition(info: UnitGroupInfo) -> list[Cone]:
    """Six shifted cones covering the totally positive elements up to the
    action of the totally positive units.

    Any basis of the totally positive unit lattice may serve as the
    generator triple; the canonical one occasionally puts some (x^-1, 1,
    y, y*z) quadruple in a proper subspace, so small unimodular changes of
    basis are tried in a fixed order until all six cones are simplicial.
    """
    for gens in _generator_bases(info.totpos_gens):
        try:
            return cones_from_generators(info.field, gens)
        except DegenerateCone:
            continue
    raise AssertionError("no nondegenerate generator basis found")


def _generator_bases(gens, max_states: int = 400):
    """Bases of the unit lattice reachable from `gens` by elementary
    unimodular moves t_i <- t_i * t_j^(+-1), in breadth-first order."""
    queue = [tuple(gens)]
    yielded = 0
    while queue and yielded < max_states:
        state = queue.pop(0)
        yield state
        yielded += 1
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                for tj in (state[j], state[j].inverse()):
                    nxt = list(state)
                    nxt[i] = state[i] * tj
                    queue.append(tuple(nxt))


def cones_from_generators(F: BiquadField, gens) -> list[Cone]:
    """Shifted cones over an explicit triple of totally positive units."""
    cones = []
    for perm in permutations(range(3)):
        x, y, z = (gens[i] for i in perm)
        basis = (x.inverse(), F.one(), y, y * z)
        rows = []
        for b in basis:
            coords = F.basis_coords(b)
            if any(c.denominator != 1 for c in coords):
                raise AssertionError("cone basis element not integral")
            rows.append(tuple(int(c) for c in coords))
        det = mat_det(rows)
        if det == 0:
            raise DegenerateCone(f"permutation {perm}")
        cones.append(Cone(perm=perm, basis=basis, matrix=tuple(rows), det=det))
    return cones


def parallelepiped_points(cone: Cone):
    """Integral points of the half-open parallelepiped spanned by the cone
    basis: one point per residue class of Z^4 modulo the basis row
    lattice, |det| in total, as integral-basis coordinate tuples (the
    zero corner included)."""
    M = [list(r) for r in cone.matrix]
    det = cone.det
    n = abs(det)
    adj = mat_adjugate(M)
    if det < 0:
        adj = [[-x for x in row] for row in adj]
    _, V, D = diagonal_form(M)
    dd = [abs(D[i][i]) for i in range(4)]
    if dd[0] * dd[1] * dd[2] * dd[3] != n:
        raise AssertionError("diagonal form does not match the determinant")
    vadj = mat_adjugate(V)
    detv = mat_det(V)
    if detv not in (1, -1):
        raise AssertionError("column transform not unimodular")
    if detv < 0:
        vadj = [[-x for x in row] for row in vadj]
    for y in product(*(range(d) for d in dd)):
        x = vec_mat(list(y), vadj)
        t = [v % n for v in vec_mat(x, adj)]
        pt = vec_mat(t, M)
        coords = []
        for v in pt:
            quo, rem = divmod(v, n)
            if rem:
                raise AssertionError("parallelepiped reduction not integral")
            coords.append(quo)
        yield tuple(coords)
