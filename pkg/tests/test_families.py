"""Closed-form families of biquadratic fields with known indecomposables."""

import pytest

from totpos.biquadstruct import kubota_delta, kubota_square_test
from totpos.contfrac import fundamental_unit
from totpos.families import (
    FAMILY_LABELS,
    family,
    family_cone_contents,
    verify_family,
)

# (label, n) -> (p, q, r, iota)
ANCHORS = {
    ("1", 6): (143, 165, 195, 45),
    ("1", 7): (195, 221, 255, 55),
    ("2", 9): (323, 1221, 323 * 1221, 35),
    ("2", 10): (399, 1517, 399 * 1517, 39),
    ("3", 2): (15, 77, 15 * 77, 8),
    ("3", 9): (323, 1365, 323 * 1365, 36),
}


@pytest.mark.parametrize("key", sorted(ANCHORS))
def test_closed_form_anchors(key):
    p, q, r, iota = ANCHORS[key]
    fam = family(*key)
    F = fam.field
    assert (F.p, F.q, F.r) == (p, q, r)
    assert fam.iota == iota
    assert len(fam.indec) == iota


def test_iota_formulas_scan():
    for n in range(6, 16):
        try:
            fam = family("1", n)
        except ValueError:
            continue
        assert fam.iota == 10 * n - 15, n
    for n in range(9, 20):
        try:
            fam = family("2", n)
        except ValueError:
            continue
        assert fam.iota == 4 * n - 1, n
    for n in range(2, 14):
        try:
            fam = family("3", n)
        except ValueError:
            continue
        assert fam.iota == 4 * n, n


def test_units_are_fundamental():
    fam = family("1", 6)
    for d, e in zip((143, 165, 195), fam.eps):
        eps = fundamental_unit(d)
        assert e in (eps, eps * eps)
        assert e == fundamental_unit(d)  # norm one already downstairs


def test_parameter_validation():
    with pytest.raises(ValueError):
        family("1", 5)
    with pytest.raises(ValueError):
        family("2", 8)
    with pytest.raises(ValueError):
        family("3", 1)
    with pytest.raises(ValueError):
        family("4", 6)
    assert FAMILY_LABELS == ("1", "2", "3")


def test_square_factor_rejected():
    # 2n - 1 = 25 at n = 13
    with pytest.raises(ValueError, match="squarefree"):
        family("1", 13)
    # 4n - 3 = 49 at n = 13
    with pytest.raises(ValueError, match="squarefree"):
        family("2", 13)
    # 4n + 3 = 27 at n = 6
    with pytest.raises(ValueError, match="squarefree"):
        family("3", 6)


def test_colliding_parameters_rejected():
    # n = 17: p = 33 * 35 and q = 65 * 69 share the factor 15
    with pytest.raises(ValueError, match="collide"):
        family("2", 17)


def test_indec_lists_are_duplicate_free():
    for key in ANCHORS:
        fam = family(*key)
        seen = {str(x) for x in fam.indec}
        assert len(seen) == fam.iota, key


def test_cone_contents_closed_form():
    for n in (6, 7, 8):
        want = (2 * n + 1, 2 * (2 * n + 2), 4 * n, 4 * n + 4, 4 * n,
                2 * n + 1)
        assert family_cone_contents(n) == want, n


def test_kubota_data_family1():
    fam = family("1", 6)
    assert fam.kubota_deltas() == (26, 15, 30)
    assert fam.kubota_accepted() == [(0, 0, 0), (1, 0, 1)]
    # the rejected patterns stay rejected elementwise
    assert kubota_square_test(fam.field, (1, 0, 1), fam.eps) == 1
    assert kubota_square_test(fam.field, (1, 0, 0), fam.eps) != 1


def test_kubota_deltas_grow_linearly():
    # the three invariants follow 4n+2 / (2n-1)(2n+3) pattern checks
    for n in (6, 7):
        fam = family("1", n)
        dp, dq, dr = fam.kubota_deltas()
        assert dp == 4 * n + 2
        assert dr == 4 * n + 6
        assert kubota_delta(fam.eps[1]) == dq


def test_mu_square_identity():
    fam = family("1", 6)
    mu = fam.mu
    assert mu is not None
    Ep, Eq, Er = fam.embedded_units()
    one = fam.field.one()
    assert (mu - one) * (mu - one) == Ep * Er


@pytest.mark.parametrize("key", sorted(ANCHORS))
def test_verify_family_matches_pipeline(key):
    report = verify_family(*key)
    assert report.units_match, key
    assert report.counts_match, key
    assert report.classes_match, key
    assert report.ok
    assert "ok" in report.describe()
