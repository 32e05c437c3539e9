"""Enumeration of indecomposable totally positive integers in totally real
biquadratic fields.

The production route collects candidate elements from the six cone
parallelepipeds in fixed-size blocks, screens out elements certainly
dominated by a totally positive unit, sieves the rest by increasing trace
against unit translates of the orbit representatives found so far, and
settles every surviving class by an exhaustive witness scan against unit
translates of all classes.  All verdicts are exact: numpy only prefilters
with scaled integer enclosures, and every ambiguous row falls back to
exact arithmetic.

An independent oracle enumerates every totally positive integer with
bounded trace and an embedding at most 1 straight from coordinate grids
and sieves decomposability by increasing trace; it shares no searching
logic with the cone route.
"""
from __future__ import annotations

import multiprocessing
from bisect import bisect_right
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, gcd, isqrt

import numpy as np

from .biquadstruct import (Cone, UnitGroupInfo, cone_decomposition,
                           diagonal_form, mat_adjugate, mat_det,
                           parallelepiped_points, totally_positive_units)
from .exactalg import _SIGNS, BiquadElem, BiquadField, sqrt_enclosure


class BudgetExceeded(RuntimeError):
    """An enumeration grew past the user-supplied work budget."""


# ---------------------------------------------------------------------------
# scaled integer embedding bounds (prefilters only, never a final verdict)


def _auto_prec(max_coord: int, field: BiquadField, start: int = 40) -> int:
    prec = start
    while prec > 4:
        scale = isqrt(field.r << (2 * prec)) + 1
        if 8 * (max_coord + 1) * scale < 1 << 62:
            return prec
        prec -= 4
    raise ArithmeticError("coordinates too large for scaled prefilters")


def _sqrt_tables(field: BiquadField, prec: int):
    """(slo, shi) of shape (4, 4): for embedding j and coordinate c of
    (1, sqrt p, sqrt q, sqrt r), signed scaled enclosures at 2^prec."""
    encs = [(1 << prec, 1 << prec)]
    for rad in (field.p, field.q, field.r):
        encs.append(sqrt_enclosure(rad, prec))
    slo = [[0] * 4 for _ in range(4)]
    shi = [[0] * 4 for _ in range(4)]
    for j in range(4):
        for c in range(4):
            s = 1 if c == 0 else _SIGNS[j][c - 1]
            lo, hi = encs[c]
            slo[j][c], shi[j][c] = (lo, hi) if s > 0 else (-hi, -lo)
    return (np.array(slo, dtype=np.int64), np.array(shi, dtype=np.int64))


def _embed_bounds(Q: np.ndarray, slo: np.ndarray, shi: np.ndarray):
    """Lower/upper int64 bounds of 4 * sigma_j * 2^prec for quarter
    coordinate rows Q; shapes (n, 4) -> two (n, 4) arrays (column j)."""
    Qpos = np.maximum(Q, 0)
    Qneg = np.minimum(Q, 0)
    lo = Qpos @ slo.T + Qneg @ shi.T
    hi = Qpos @ shi.T + Qneg @ slo.T
    return lo, hi


def _quarter_matrix(field: BiquadField) -> np.ndarray:
    """Rows: quarter coordinates of the integral basis (int64, 4 x 4)."""
    rows = [b.coords_scaled(4) for b in field.integral_basis()]
    return np.array(rows, dtype=np.int64)


def _elem_from_coords(field: BiquadField, coords) -> BiquadElem:
    acc = field.zero()
    for c, b in zip(coords, field.integral_basis()):
        if c:
            acc = acc + int(c) * b
    return acc


def _integrality_mask_data(field: BiquadField):
    """(adj, det) over the quarter-coordinate row lattice of the integral
    basis: a quarter vector v is integral iff v @ adj == 0 mod det."""
    B4 = [list(map(int, r)) for r in _quarter_matrix(field)]
    det = mat_det(B4)
    adj = mat_adjugate(B4)
    if det < 0:
        det = -det
        adj = [[-x for x in row] for row in adj]
    return np.array(adj, dtype=np.int64), det


# ---------------------------------------------------------------------------
# unit translates by breadth-first search over the exponent lattice


class _UnitSteps:
    """Cached one-step multipliers over the totally positive generators."""

    def __init__(self, info: UnitGroupInfo):
        self.info = info
        gens = info.totpos_gens
        invs = tuple(g.inverse() for g in gens)
        self.steps = {}
        for dm in product((-1, 0, 1), repeat=3):
            if dm == (0, 0, 0):
                continue
            e = info.field.one()
            for g, gi, d in zip(gens, invs, dm):
                if d == 1:
                    e = e * g
                elif d == -1:
                    e = e * gi
            self.steps[dm] = e
        bound = Fraction(1)
        for g in gens + invs:
            for j in range(4):
                hi = g.enclosure(j, 16)[1]
                if hi > bound:
                    bound = hi
        self.step_bound = bound      # >= every embedding of every step


def unit_translates(info: UnitGroupInfo, steps: _UnitSteps,
                    seed: BiquadElem, trace_cap, budget: int | None = None):
    """All unit translates u * seed (u totally positive) with trace at most
    trace_cap.  The walk uses an inflated trace threshold so that integer
    rounding along segments cannot disconnect the target region."""
    inflate = (4 * steps.step_bound) ** 3
    thr = Fraction(trace_cap) * inflate
    out = []
    seen = {(0, 0, 0)}
    queue = deque([((0, 0, 0), seed)])
    while queue:
        m, e = queue.popleft()
        if e.trace() <= trace_cap:
            out.append(e)
        for dm, se in steps.steps.items():
            m2 = (m[0] + dm[0], m[1] + dm[1], m[2] + dm[2])
            if m2 in seen:
                continue
            e2 = e * se
            if e2.trace() <= thr:
                seen.add(m2)
                queue.append((m2, e2))
                if budget is not None and len(seen) > budget:
                    raise BudgetExceeded("unit translate region exceeds budget")
    return out


def reduce_by_units(alpha: BiquadElem, steps: _UnitSteps) -> BiquadElem:
    """Translate alpha by totally positive units to a locally trace-minimal
    point, breaking trace ties by lexicographic quarter coordinates."""
    cur = alpha
    key = (cur.trace(), cur.coords_scaled(4))
    while True:
        best = None
        for se in steps.steps.values():
            cand = cur * se
            ck = (cand.trace(), cand.coords_scaled(4))
            if ck < key and (best is None or ck < best[0]):
                best = (ck, cand)
        if best is None:
            return cur
        key, cur = best


def equivalent_mod_units(a: BiquadElem, b: BiquadElem) -> bool:
    """Do two totally positive integral elements generate the same orbit
    under multiplication by totally positive units?"""
    if a == b:
        return True
    if a.norm() != b.norm():
        return False
    ratio = a / b
    if any(c.denominator != 1 for c in a.field.basis_coords(ratio)):
        return False
    return ratio.norm() == 1


# ---------------------------------------------------------------------------
# the cone pipeline


@dataclass
class IndecResult:
    field: BiquadField
    info: UnitGroupInfo
    reps: tuple[BiquadElem, ...]
    iota: int
    candidate_count: int
    class_count_screened: int
    pool_size: int

    def traces(self):
        return tuple(int(r.trace()) for r in self.reps)


def _ppd_blocks(cone: Cone, block: int = 1 << 19):
    """Yield the parallelepiped points of a cone as int64 coordinate
    blocks of at most `block` rows, never materialising the whole
    parallelepiped.  Falls back to the pure bignum generator when the
    int64 bounds of the vectorised route cannot be certified."""
    M = [list(r) for r in cone.matrix]
    n = abs(cone.det)
    adj = mat_adjugate(M)
    if cone.det < 0:
        adj = [[-x for x in row] for row in adj]
    _, V, D = diagonal_form(M)
    dd = [abs(D[i][i]) for i in range(4)]
    if dd[0] * dd[1] * dd[2] * dd[3] != n:
        raise AssertionError("diagonal form does not match the determinant")
    vadj = mat_adjugate(V)
    if mat_det(V) < 0:
        vadj = [[-x for x in row] for row in vadj]
    # certified magnitude bounds for every numpy stage
    xmax = [sum((dd[t] - 1) * abs(vadj[t][c]) for t in range(4))
            for c in range(4)]
    tmax = [sum(xmax[t] * abs(adj[t][c]) for t in range(4)) for c in range(4)]
    pmax = [sum((n - 1) * abs(M[t][c]) for t in range(4)) for c in range(4)]
    if max(xmax + tmax + pmax) >= 1 << 62:
        buf: list = []
        for pt in parallelepiped_points(cone):
            buf.append(pt)
            if len(buf) == block:
                yield np.array(buf, dtype=np.int64)
                buf = []
        if buf:
            yield np.array(buf, dtype=np.int64)
        return
    MA = np.array(M, dtype=np.int64)
    AA = np.array(adj, dtype=np.int64)
    VA = np.array(vadj, dtype=np.int64)
    d1, d2, d3 = dd[1], dd[2], dd[3]
    for start in range(0, n, block):
        idx = np.arange(start, min(start + block, n), dtype=np.int64)
        y3 = idx % d3
        t = idx // d3
        y2 = t % d2
        t = t // d2
        Y = np.stack([t // d1, t % d1, y2, y3], axis=1)
        X = Y @ VA
        T = (X @ AA) % n
        P = T @ MA
        quo, rem = np.divmod(P, n)
        if rem.any():
            raise AssertionError("parallelepiped reduction not integral")
        yield quo


def _coordinate_bound(cones) -> int:
    """Bound on any integral-basis coordinate of any parallelepiped point:
    the points are convex combinations of the cone basis rows."""
    bound = 1
    for cone in cones:
        for c in range(4):
            bound = max(bound, sum(abs(cone.matrix[i][c]) for i in range(4)))
    return bound


def _trace_bound(cones) -> int:
    """Bound on the trace of any parallelepiped point."""
    bound = 4
    for cone in cones:
        bound = max(bound, sum(int(b.trace()) for b in cone.basis))
    return bound


def _norm256_rows(field: BiquadField, Q: np.ndarray) -> np.ndarray:
    """256 * norm for quarter coordinate rows, as exact python integers
    (object dtype): with U = a^2 + p b^2 - q c^2 - r d^2 and s = pq/gcd(p,q)
    the norm satisfies 256 N = U^2 - 4p (ab)^2 - 4qr (cd)^2 + 8abcd s."""
    a = Q[:, 0].astype(object)
    b = Q[:, 1].astype(object)
    c = Q[:, 2].astype(object)
    d = Q[:, 3].astype(object)
    s = field.p * field.q // gcd(field.p, field.q)
    U = a * a + field.p * b * b - field.q * c * c - field.r * d * d
    return (U * U - 4 * field.p * (a * b) ** 2
            - 4 * field.q * field.r * (c * d) ** 2 + 8 * a * b * c * d * s)


def _screen_block(Q, uhi, slo, shi) -> np.ndarray:
    """Alive-mask dropping candidates certainly strictly dominated by a
    totally positive unit (such a candidate splits off that unit).  Only
    certain kills: survivors form a superset of the indecomposables."""
    clo, _ = _embed_bounds(Q, slo, shi)
    alive = np.ones(len(Q), dtype=bool)
    for u0 in range(0, len(uhi), 32):
        ublock = uhi[u0:u0 + 32]
        idx = np.flatnonzero(alive)
        if idx.size == 0:
            break
        for c0 in range(0, idx.size, 65536):
            sel = idx[c0:c0 + 65536]
            dominated = (ublock[None, :, :] < clo[sel][:, None, :]).all(axis=2)
            alive[sel[dominated.any(axis=1)]] = False
    return alive


def _orbit_sieve(field: BiquadField, info: UnitGroupInfo, steps: _UnitSteps,
                 C: np.ndarray, Q: np.ndarray, slo, shi,
                 unit_pool, budget: int | None = None):
    """Provisional orbit representatives from trace-sorted keeper rows.

    A row certainly strictly dominated by a unit or by a unit translate of
    an earlier representative splits off that element, so it is dropped.
    Each survivor is reduced and merged into its orbit; new orbits feed
    their own unit translates back into the kill pool.  Only certain kills
    happen here, making the output a superset of the indecomposable orbits
    that the exact verdict pass settles afterwards."""
    max_trace = int(Q[-1, 0])
    seed = np.array([u.coords_scaled(4) for u in unit_pool], dtype=np.int64)
    pool_parts = [_embed_bounds(seed, slo, shi)[1]]
    phi = pool_parts[0]
    reps: list[BiquadElem] = []
    by_norm: dict[int, list[int]] = {}
    for start in range(0, len(Q), 2048):
        blo, _ = _embed_bounds(Q[start:start + 2048], slo, shi)
        killed = np.zeros(len(blo), dtype=bool)
        for p0 in range(0, len(phi), 8192):
            idx = np.flatnonzero(~killed)
            if idx.size == 0:
                break
            chunk = phi[p0:p0 + 8192]
            dom = (chunk[None, :, :] < blo[idx][:, None, :]).all(axis=2)
            killed[idx[dom.any(axis=1)]] = True
        fresh: list[np.ndarray] = []
        for i in np.flatnonzero(~killed):
            if fresh and any((f < blo[i][None, :]).all(axis=1).any()
                             for f in fresh):
                continue
            red = reduce_by_units(_elem_from_coords(field, C[start + i]),
                                  steps)
            group = by_norm.setdefault(int(red.norm()), [])
            if any(equivalent_mod_units(red, reps[k]) for k in group):
                continue
            group.append(len(reps))
            reps.append(red)
            if red != field.one():
                tr = unit_translates(info, steps, red, max_trace, budget)
                TQ = np.array([t.coords_scaled(4) for t in tr],
                              dtype=np.int64)
                fresh.append(_embed_bounds(TQ, slo, shi)[1])
        if fresh:
            pool_parts.extend(fresh)
            phi = np.concatenate(pool_parts)
    return reps


def indecomposables(field: BiquadField, jobs: int = 1,
                    budget: int | None = None) -> IndecResult:
    """All indecomposable totally positive integers of the field up to
    multiplication by totally positive units, as sorted orbit
    representatives."""
    info = totally_positive_units(field)
    steps = _UnitSteps(info)
    cones = cone_decomposition(info)

    B4 = _quarter_matrix(field)
    prec = _auto_prec(max(4 * _coordinate_bound(cones),
                          _trace_bound(cones)), field)
    slo, shi = _sqrt_tables(field, prec)

    unit_pool = unit_translates(info, steps, field.one(), _trace_bound(cones),
                                budget)
    UQ = np.array([u.coords_scaled(4) for u in unit_pool], dtype=np.int64)
    _, uhi = _embed_bounds(UQ, slo, shi)

    candidate_count = 1
    one_row = np.array([[int(c) for c in
                         field.basis_coords(field.one())]], dtype=np.int64)
    kept = [one_row]
    kept_total = 1
    for cone in cones:
        for coords in _ppd_blocks(cone):
            nz = coords[coords.any(axis=1)]
            candidate_count += len(nz)
            if budget is not None and candidate_count > budget:
                raise BudgetExceeded("candidate count exceeds budget")
            alive = _screen_block(nz @ B4, uhi, slo, shi)
            rows = nz[alive]
            if not len(rows):
                continue
            W = _norm256_rows(field, rows @ B4)
            if (W % 256).any():
                raise AssertionError("candidate with non-integral norm")
            # indecomposables obey the norm bound
            rows = rows[W <= 256 * field.disc]
            if len(rows):
                kept.append(rows)
                kept_total += len(rows)
                if budget is not None and kept_total > budget:
                    raise BudgetExceeded("screened candidates exceed budget")

    C = np.unique(np.concatenate(kept), axis=0)
    Q = C @ B4
    order = np.lexsort((C[:, 3], C[:, 2], C[:, 1], C[:, 0], Q[:, 0]))
    classes = _orbit_sieve(field, info, steps, C[order], Q[order], slo, shi,
                           unit_pool, budget)
    class_count = len(classes)

    # witness pool: unit translates of every class and of 1
    rep_tmax = max(int(e.trace()) for e in classes)
    pool: list[BiquadElem] = []
    seen_pool = set()
    for seed in classes + [field.one()]:
        for e in unit_translates(info, steps, seed, rep_tmax, budget):
            k = e.coords_scaled(4)
            if k not in seen_pool:
                seen_pool.add(k)
                pool.append(e)

    PQ = np.array([e.coords_scaled(4) for e in pool], dtype=np.int64)
    pool_prec = _auto_prec(int(np.abs(PQ).max()), field)
    pslo, pshi = _sqrt_tables(field, pool_prec)
    plo, phi = _embed_bounds(PQ, pslo, pshi)

    reps = []
    for alpha in classes:
        aq = np.array([alpha.coords_scaled(4)], dtype=np.int64)
        alo, ahi = _embed_bounds(aq, pslo, pshi)
        # beta strictly below alpha in all embeddings makes alpha split
        certain = (phi < alo[0][None, :]).all(axis=1)
        if certain.any():
            continue
        refuted = (plo >= ahi[0][None, :]).any(axis=1)
        decomposable = False
        for i in np.flatnonzero(~refuted):
            diff = alpha - pool[i]
            if not diff.is_zero() and diff.is_totally_positive():
                decomposable = True
                break
        if not decomposable:
            reps.append(alpha)

    reps.sort(key=lambda e: (e.trace(), e.coords_scaled(4)))
    return IndecResult(field=field, info=info, reps=tuple(reps),
                       iota=len(reps), candidate_count=candidate_count,
                       class_count_screened=class_count,
                       pool_size=len(pool))


# ---------------------------------------------------------------------------
# window enumeration shared by the oracle and the direct witness search


def _window_pass(field: BiquadField, trace_cap: int, jstar: int):
    """Totally positive integral elements with trace <= trace_cap whose
    embedding jstar lies in (0, 1], as quarter coordinate tuples."""
    T = trace_cap
    adj, adet = _integrality_mask_data(field)
    prec = _auto_prec(4 * T + 4, field)
    slo, shi = _sqrt_tables(field, prec)
    scale_one = 4 << prec            # scaled value of sigma == 1
    found: set[tuple[int, int, int, int]] = set()
    ybound = T // isqrt(field.p) + 1
    zbound = T // isqrt(field.q) + 1
    wbound = T // isqrt(field.r) + 1
    zz, ww = np.meshgrid(np.arange(-zbound, zbound + 1, dtype=np.int64),
                         np.arange(-wbound, wbound + 1, dtype=np.int64),
                         indexing="ij")
    zz = zz.ravel()
    ww = ww.ravel()
    sp, sq, sr = _SIGNS[jstar]
    # identity-embedding bounds of -(sq Z sqrt q + sr W sqrt r), reused for
    # every Y; the Y term adds on separately since contributions of
    # disjoint coordinates are additive
    zw = np.zeros((len(zz), 4), dtype=np.int64)
    zw[:, 2] = -sq * zz
    zw[:, 3] = -sr * ww
    zwlo, zwhi = _embed_bounds(zw, slo, shi)
    yrow = np.zeros((1, 4), dtype=np.int64)
    one = field.one()
    for Y in range(-ybound, ybound + 1):
        yrow[0, 1] = -sp * Y
        ylo, yhi = _embed_bounds(yrow, slo, shi)
        # sigma_jstar(alpha) in (0, 1] <=> X in (S, S + 4] with S the
        # enclosed sum; conservative integer window for X
        mlo0 = zwlo[:, 0] + int(ylo[0, 0])
        mhi0 = zwhi[:, 0] + int(yhi[0, 0])
        xlo = mlo0 >> prec
        spread = (int(((mhi0 - mlo0) >> prec).max()) + 6) if len(zz) else 0
        for k in range(spread + 1):
            X = xlo + k
            ok = (X >= 1) & (X <= T)
            if not ok.any():
                continue
            cand = np.empty((int(ok.sum()), 4), dtype=np.int64)
            cand[:, 0] = X[ok]
            cand[:, 1] = Y
            cand[:, 2] = zz[ok]
            cand[:, 3] = ww[ok]
            cand = cand[~((cand @ adj) % adet).any(axis=1)]   # integrality
            if not len(cand):
                continue
            clo, chi = _embed_bounds(cand, slo, shi)
            pos_certain = (clo > 0).all(axis=1)
            pos_possible = (chi > 0).all(axis=1)
            small_certain = chi[:, jstar] <= scale_one
            small_possible = clo[:, jstar] <= scale_one
            sure = pos_certain & small_certain
            maybe = (pos_possible & small_possible) & ~sure
            for row in cand[sure]:
                found.add(tuple(int(v) for v in row))
            for row in cand[maybe]:
                e = BiquadElem(field, int(row[0]), int(row[1]),
                               int(row[2]), int(row[3]), 4)
                if not e.is_totally_positive():
                    continue
                conj = e.galois(jstar) if jstar else e
                if (conj - one).sign() <= 0:
                    found.add(tuple(int(v) for v in row))
    return found


def _window_pass_job(args):
    p, q, trace_cap, jstar = args
    return _window_pass(BiquadField(p, q), trace_cap, jstar)


def small_embedding_window(field: BiquadField, trace_cap: int,
                           jobs: int = 1) -> list:
    """Every totally positive integral element with trace <= trace_cap and
    some embedding in (0, 1], sorted by (trace, coordinates)."""
    if jobs > 1:
        with multiprocessing.Pool(min(jobs, 4)) as pool:
            parts = pool.map(_window_pass_job,
                             [(field.p, field.q, trace_cap, j)
                              for j in range(4)])
    else:
        parts = [_window_pass(field, trace_cap, j) for j in range(4)]
    merged: set[tuple[int, int, int, int]] = set()
    for part in parts:
        merged |= part
    return sorted(merged, key=lambda t: (t[0], t))


def _window_sieve(field: BiquadField, items: list) -> list[BiquadElem]:
    """Split a trace-sorted window into indecomposables by increasing
    trace; any splitting has an indecomposable part of at most half the
    trace, and such a part lies inside the window."""
    if not items:
        return []
    Q = np.array(items, dtype=np.int64)
    prec = _auto_prec(int(np.abs(Q).max()), field)
    slo, shi = _sqrt_tables(field, prec)
    lo, hi = _embed_bounds(Q, slo, shi)
    elems = [BiquadElem(field, *map(int, t), 4) for t in items]
    n = len(items)
    ind_rows = np.empty(n, dtype=np.int64)      # indices of indecomposables
    ind_traces: list[int] = []
    k = 0
    for i, alpha in enumerate(elems):
        half = items[i][0] // 2
        cut = bisect_right(ind_traces, half)
        decomposable = False
        if cut:
            sel = ind_rows[:cut]
            certain = (hi[sel] < lo[i]).all(axis=1)
            if certain.any():
                decomposable = True
            else:
                possible = ~((lo[sel] >= hi[i]).any(axis=1))
                for j in sel[possible]:
                    diff = alpha - elems[j]
                    if not diff.is_zero() and diff.is_totally_positive():
                        decomposable = True
                        break
        if not decomposable:
            ind_rows[k] = i
            ind_traces.append(int(items[i][0]))
            k += 1
    return [elems[i] for i in ind_rows[:k]]


def decomposition_witness(alpha: BiquadElem):
    """A pair (beta, gamma) of totally positive integral elements summing
    to alpha, or None.  Any splitting can be rearranged so that beta is
    indecomposable with at most half the trace, hence beta lies in the
    small-embedding window scanned here."""
    if not alpha.is_integral() or not alpha.is_totally_positive():
        raise ValueError("decomposition search needs a totally positive "
                         "integral element")
    field = alpha.field
    half = int(alpha.trace()) // 2
    if half < 4:
        return None
    for t in small_embedding_window(field, half):
        beta = BiquadElem(field, *map(int, t), 4)
        gamma = alpha - beta
        if not gamma.is_zero() and gamma.is_totally_positive():
            return beta, gamma
    return None


def is_indecomposable(alpha: BiquadElem) -> bool:
    return decomposition_witness(alpha) is None


# ---------------------------------------------------------------------------
# independent brute-force oracle


def _certified_trace_cap(info: UnitGroupInfo) -> int:
    """Integer T such that every indecomposable class has a representative
    of trace at most T: disc^(1/4) times the sum over embeddings of the
    square roots of prod_i max(sigma_j(g_i), 1/sigma_j(g_i))."""
    total = Fraction(0)
    for j in range(4):
        prod = Fraction(1)
        for g in info.totpos_gens:
            hi = g.enclosure(j, 16)[1]
            hinv = g.inverse().enclosure(j, 16)[1]
            prod *= max(hi, hinv, Fraction(1))
        num, den = prod.numerator, prod.denominator
        total += Fraction(isqrt(num * den) + 1, den)   # >= sqrt(prod)
    d4 = isqrt(isqrt(info.field.disc)) + 1             # >= disc^(1/4)
    return int(d4 * total) + 1


@dataclass
class OracleReport:
    field: BiquadField
    pipeline: IndecResult
    trace_cap: int
    certified: bool
    oracle_class_count: int
    pipeline_class_count: int
    matched: bool

    @property
    def ok(self) -> bool:
        return self.matched


def oracle_indecomposables(field: BiquadField, trace_cap: int | None = None,
                           jobs: int = 1, budget: int | None = None,
                           grid_budget: int = 1_200_000_000) -> OracleReport:
    """Cross-check the cone route against a brute-force scan.

    With no explicit cap, a certified trace bound is used whenever its
    grid fits the budget, making the comparison complete; otherwise the
    window is anchored at twice the largest class trace, and everything
    inside the window is still compared exactly.
    """
    pipeline = indecomposables(field, jobs=jobs, budget=budget)
    info = pipeline.info
    certified = False
    if trace_cap is None:
        cap = _certified_trace_cap(info)
        est = 8 * cap ** 3 // max(1, isqrt(field.p) * isqrt(field.q)
                                  * isqrt(field.r))
        if est <= grid_budget:
            certified = True
            trace_cap = cap
        else:
            trace_cap = 2 * max(int(r.trace()) for r in pipeline.reps)

    window = small_embedding_window(field, trace_cap, jobs)
    indec = _window_sieve(field, window)

    steps = _UnitSteps(info)
    oracle_classes: list[BiquadElem] = []
    for e in sorted((reduce_by_units(x, steps) for x in indec),
                    key=lambda x: (x.trace(), x.coords_scaled(4))):
        if not any(equivalent_mod_units(e, c) for c in oracle_classes):
            oracle_classes.append(e)

    # bijective matching between oracle classes and pipeline classes
    matched = True
    partners = set()
    for oc in oracle_classes:
        hits = [i for i, r in enumerate(pipeline.reps)
                if equivalent_mod_units(oc, r)]
        if len(hits) != 1:
            matched = False
            break
        partners.add(hits[0])
    if matched:
        for i, r in enumerate(pipeline.reps):
            must_appear = certified or int(r.trace()) <= trace_cap
            if must_appear and i not in partners:
                matched = False
                break
    if matched and certified and len(oracle_classes) != pipeline.iota:
        matched = False
    return OracleReport(field=field, pipeline=pipeline, trace_cap=trace_cap,
                        certified=certified,
                        oracle_class_count=len(oracle_classes),
                        pipeline_class_count=pipeline.iota, matched=matched)


# ---------------------------------------------------------------------------
# persistence of quadratic indecomposables in the big field


@dataclass
class PreservationReport:
    field: BiquadField
    subfield: int
    preserved: tuple
    failures: tuple      # pairs (quadratic element, (beta, gamma) witness)

    @property
    def ok(self) -> bool:
        return not self.failures


def preservation_check(field: BiquadField, subfield_rad: int,
                       result: IndecResult | None = None,
                       jobs: int = 1) -> PreservationReport:
    """Check which indecomposables of a quadratic subfield stay
    indecomposable upstairs; failures carry an exact splitting."""
    from .quadindec import quad_indecomposables

    if subfield_rad not in field.subfield_radicands():
        raise ValueError(f"{subfield_rad} does not generate a subfield of "
                         f"this field")
    if result is None:
        result = indecomposables(field, jobs=jobs)
    steps = _UnitSteps(result.info)

    preserved = []
    failures = []
    for q_alpha in quad_indecomposables(subfield_rad):
        alpha = field.from_quad(q_alpha)
        red = reduce_by_units(alpha, steps)
        if any(equivalent_mod_units(red, r) for r in result.reps):
            preserved.append(q_alpha)
            continue
        witness = decomposition_witness(alpha)
        if witness is None:
            raise AssertionError("element neither matches a class nor "
                                 "splits; class list incomplete")
        failures.append((q_alpha, witness))
    return PreservationReport(field=field, subfield=subfield_rad,
                              preserved=tuple(preserved),
                              failures=tuple(failures))


# ---------------------------------------------------------------------------
# additive structure constants


def crm_constant(R: int, m: int) -> int:
    """Uniform bound on the number of representations needed once rank R
    forms in 2m variables represent everything they should; the m == 2
    case carries its own floor of 480."""
    if R < 1 or m < 1:
        raise ValueError("arguments must be positive")
    if m == 2:
        return max(480, 2 * R * (R - 1))
    return 2 * comb(R + 2 * m - 2, 2 * m - 1)


def rank_upper_bound(index_squares: int, iota: int) -> int:
    """Upper bound 7 * [totally positive units : unit squares] * iota on
    the rank needed to represent all totally positive multiples."""
    return 7 * index_squares * iota
