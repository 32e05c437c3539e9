"""Cone-route enumeration of indecomposables, the independent brute-force
oracle, preservation of quadratic indecomposables, and additive constants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from totpos.biquadstruct import BiquadField
from totpos.exactalg import BiquadElem, QuadElem
from totpos.indecenum import (
    BudgetExceeded,
    _UnitSteps,
    crm_constant,
    decomposition_witness,
    equivalent_mod_units,
    indecomposables,
    is_indecomposable,
    oracle_indecomposables,
    preservation_check,
    rank_upper_bound,
    reduce_by_units,
    small_embedding_window,
    unit_translates,
)

# (p, q, r) -> class count of indecomposables modulo totally positive units
IOTA_BIQUAD = {
    (2, 3, 6): 5,
    (3, 5, 15): 3,
    (2, 5, 10): 14,
    (2, 7, 14): 4,
    (3, 21, 7): 15,
    (7, 5, 35): 11,
    (3, 13, 39): 13,
    (2, 21, 42): 2,
}


@pytest.fixture(scope="module")
def results():
    return {trip: indecomposables(BiquadField(trip[0], trip[1]))
            for trip in IOTA_BIQUAD}


def test_iota_frozen(results):
    for trip, want in IOTA_BIQUAD.items():
        assert results[trip].iota == want, trip


def test_reps_are_totally_positive_integers(results):
    for trip, res in results.items():
        for rep in res.reps:
            assert rep.is_integral(), (trip, str(rep))
            assert rep.is_totally_positive(), (trip, str(rep))


def test_reps_pairwise_inequivalent(results):
    for trip, res in results.items():
        reps = res.reps
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                assert not equivalent_mod_units(reps[i], reps[j]), trip


def test_reps_sorted_and_start_at_one(results):
    for trip, res in results.items():
        keys = [(r.trace(), r.coords_scaled(4)) for r in res.reps]
        assert keys == sorted(keys), trip
        assert res.reps[0] == res.field.one(), trip


def test_reps_reduced(results):
    # every representative is already at its locally trace-minimal position
    for trip, res in results.items():
        steps = _UnitSteps(res.info)
        for rep in res.reps:
            assert reduce_by_units(rep, steps) == rep, trip


@pytest.mark.parametrize("trip", [(2, 3, 6), (3, 5, 15), (2, 21, 42)])
def test_reps_survive_direct_witness_search(results, trip):
    for rep in results[trip].reps:
        assert decomposition_witness(rep) is None, (trip, str(rep))


def test_one_is_indecomposable():
    F = BiquadField(2, 3)
    assert is_indecomposable(F.one())


def test_two_decomposes():
    F = BiquadField(2, 3)
    two = F.one() + F.one()
    beta, gamma = decomposition_witness(two)
    assert beta + gamma == two
    assert beta.is_totally_positive() and gamma.is_totally_positive()
    assert beta.is_integral() and gamma.is_integral()


def test_witness_rejects_non_totally_positive():
    F = BiquadField(2, 3)
    with pytest.raises(ValueError):
        decomposition_witness(F.from_quad(QuadElem(2, 1, 1)))  # 1 + sqrt 2


def test_small_embedding_window_contents():
    F = BiquadField(2, 3)
    window = small_embedding_window(F, 12)
    elems = [BiquadElem(F, *map(int, t), 4) for t in window]
    assert F.one() in elems
    for e in elems:
        assert e.is_totally_positive()
        assert e.trace() <= 12
        assert min(e.enclosure(j, 24)[0] for j in range(4)) <= 1
    # trace-major ordering
    traces = [t[0] for t in window]
    assert traces == sorted(traces)


def test_unit_translates_of_one_are_units():
    F = BiquadField(2, 3)
    res = indecomposables(F)
    steps = _UnitSteps(res.info)
    small = unit_translates(res.info, steps, F.one(), 40)
    assert F.one() in small
    for u in small:
        assert u.norm() == 1 and u.is_totally_positive()
        assert u.trace() <= 40
    bigger = unit_translates(res.info, steps, F.one(), 400)
    assert set(str(u) for u in small) <= set(str(u) for u in bigger)


def test_equivalence_invariants(results):
    res = results[(2, 5, 10)]
    steps = _UnitSteps(res.info)
    g = res.info.totpos_gens[0]
    for rep in res.reps[:5]:
        assert equivalent_mod_units(rep, rep * g)
        assert equivalent_mod_units(rep * g, rep)
        assert not equivalent_mod_units(rep, rep + rep)  # norms differ


def test_budget_aborts_enumeration():
    with pytest.raises(BudgetExceeded):
        indecomposables(BiquadField(2, 5), budget=10)


def test_oracle_certifies_small_field():
    report = oracle_indecomposables(BiquadField(3, 5))
    assert report.certified
    assert report.ok
    assert report.oracle_class_count == report.pipeline_class_count == 3


@settings(max_examples=40, deadline=None)
@given(st.tuples(st.integers(1, 9), st.integers(-3, 3),
                 st.integers(-2, 2), st.integers(-2, 2)))
def test_witness_consistency_random_elements(coeffs):
    F = BiquadField(2, 3)
    basis = F.integral_basis()
    e = F.zero()
    for c, b in zip(coeffs, basis):
        e = e + c * b
    if not (e.is_totally_positive() and not e.is_zero()):
        return
    w = decomposition_witness(e)
    if w is None:
        assert is_indecomposable(e)
    else:
        beta, gamma = w
        assert beta + gamma == e
        assert beta.is_totally_positive() and gamma.is_totally_positive()


# ---------------------------------------------------------------------------
# preservation of quadratic indecomposables


def test_preservation_designated_subfields(results):
    for trip in ((2, 3, 6), (2, 5, 10)):
        res = results[trip]
        for rad in (trip[0], trip[1]):
            report = preservation_check(res.field, rad, result=res)
            assert report.ok, (trip, rad)
            assert not report.failures


def test_preservation_rejects_foreign_radicand():
    F = BiquadField(2, 3)
    with pytest.raises(ValueError):
        preservation_check(F, 5, result=indecomposables(F))


def test_sqrt26_counterexample_witness():
    # 26 + 5 sqrt 26 is indecomposable downstairs but splits in the field
    # containing sqrt 14 as ((26 - 5 sqrt 14 - 2 sqrt 91 + 5 sqrt 26)
    # + (26 + 5 sqrt 14 + 2 sqrt 91 + 5 sqrt 26)) / 2
    F = BiquadField(14, 91)
    alpha = F.from_quad(QuadElem(26, 26, 5))
    w = decomposition_witness(alpha)
    assert w is not None
    expected = {
        BiquadElem(F, 26, -5, -2, 5, 2),
        BiquadElem(F, 26, 5, 2, 5, 2),
    }
    assert set(w) == expected


def test_sqrt65_counterexample_witness():
    # (25 + 3 sqrt 65) / 2 splits in the field containing sqrt 5 as
    # ((25 - 5 sqrt 5 - 3 sqrt 13 + 3 sqrt 65)
    #  + (25 + 5 sqrt 5 + 3 sqrt 13 + 3 sqrt 65)) / 4
    G = BiquadField(5, 13)
    alpha = G.from_quad(QuadElem(65, Fraction(25, 2), Fraction(3, 2)))
    w = decomposition_witness(alpha)
    assert w is not None
    expected = {
        BiquadElem(G, 25, -5, -3, 3, 4),
        BiquadElem(G, 25, 5, 3, 3, 4),
    }
    assert set(w) == expected


def test_counterexample_parts_are_indecomposable():
    F = BiquadField(14, 91)
    beta = BiquadElem(F, 26, -5, -2, 5, 2)
    assert beta.is_totally_positive() and beta.is_integral()
    assert is_indecomposable(beta)


# ---------------------------------------------------------------------------
# additive constants


def test_crm_constant_quaternary_floor():
    assert crm_constant(16, 2) == 480
    assert crm_constant(10, 2) == 480          # floor still binds
    assert crm_constant(17, 2) == 2 * 17 * 16  # 544, floor exceeded


def test_crm_constant_binomial_branch():
    from math import comb
    assert crm_constant(10, 1) == 20
    assert crm_constant(64, 2) == 8064
    assert crm_constant(5, 3) == 2 * comb(5 + 4, 5)


def test_crm_constant_rejects_bad_arguments():
    with pytest.raises(ValueError):
        crm_constant(0, 2)
    with pytest.raises(ValueError):
        crm_constant(4, 0)


def test_rank_upper_bound_instances():
    assert rank_upper_bound(4, 45) == 1260
    assert rank_upper_bound(4, 35) == 980
    assert rank_upper_bound(4, 8) == 224
