"""Census of real multiquadratic fields ordered by discriminant, growth
properties of the biquadratic count, and the digit-exact ratio column."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from totpos.census import (
    biquadratic_fields,
    brute_biquadratic_fields,
    count_multiquadratic,
    count_quadratic,
    growth_check,
    integer_root,
    log_ratio_string,
    multiquadratic_groups,
    quad_field_disc,
    squarefree_numbers,
)
from totpos.exactalg import is_squarefree


def test_quadratic_counts():
    assert count_quadratic(10**4) == 3043
    assert count_quadratic(100) == 30
    assert count_quadratic(3) == 0


def test_quad_field_disc_split():
    assert quad_field_disc(5) == 5
    assert quad_field_disc(2) == 8
    assert quad_field_disc(3) == 12
    assert quad_field_disc(65) == 65
    assert quad_field_disc(6) == 24


def test_biquadratic_fields_frozen_at_1e4():
    fields = biquadratic_fields(10**4)
    assert [(F.p, F.q, F.r) for F in fields] == [
        (2, 5, 10), (2, 3, 6), (3, 5, 15),
        (5, 13, 65), (3, 21, 7), (5, 17, 85),
    ]
    assert [F.disc for F in fields] == [1600, 2304, 3600, 4225, 7056, 7225]


def test_biquadratic_fields_sorted_and_duplicate_free():
    fields = biquadratic_fields(10**5)
    discs = [F.disc for F in fields]
    assert discs == sorted(discs)
    trips = {(F.p, F.q, F.r) for F in fields}
    assert len(trips) == len(fields) == 42
    rads = {frozenset((F.p, F.q, F.r)) for F in fields}
    assert len(rads) == len(fields)


def test_biquadratic_fields_match_brute_enumeration():
    want = brute_biquadratic_fields(10**4)
    got = [(F.p, F.q, F.r) for F in biquadratic_fields(10**4)]
    assert want == got


def test_disc_is_product_of_subfield_discs():
    for F in biquadratic_fields(10**5):
        assert F.disc == (quad_field_disc(F.p) * quad_field_disc(F.q)
                          * quad_field_disc(F.r))


def test_growth_normalisation_within_factor_three():
    report = growth_check((4, 5, 6))
    assert report.counts == (6, 42, 196)
    assert report.within_factor_3
    assert "bounded" in report.describe()


def test_multiquadratic_rank_one_matches_quadratic():
    assert count_multiquadratic(1, 10**4) == count_quadratic(10**4)
    groups = multiquadratic_groups(1, 100)
    assert all(len(g) == 1 for g in groups)
    assert (5,) in groups and (2,) in groups


def test_multiquadratic_rank_two_matches_biquadratic():
    groups = multiquadratic_groups(2, 10**4)
    assert [tuple(sorted(g)) for g in groups] == [
        (2, 5, 10), (2, 3, 6), (3, 5, 15),
        (5, 13, 65), (3, 7, 21), (5, 17, 85),
    ]


def test_multiquadratic_rank_three_first_groups():
    assert multiquadratic_groups(3, 10**9) == []
    assert multiquadratic_groups(3, 10**10) == [
        (2, 3, 5, 6, 10, 15, 30),
    ]
    groups = multiquadratic_groups(3, 2 * 10**10)
    assert groups == [
        (2, 3, 5, 6, 10, 15, 30),
        (2, 3, 6, 7, 14, 21, 42),
    ]
    for g in groups:
        disc = 1
        for m in g:
            disc *= quad_field_disc(m)
        assert disc <= 2 * 10**10


def test_multiquadratic_groups_are_multiplicatively_closed():
    from math import gcd
    for g in multiquadratic_groups(3, 2 * 10**10):
        elems = set(g)
        for a in g:
            for b in g:
                if a != b:
                    q = gcd(a, b) ** 2
                    assert (a * b) // q in elems, (a, b)


def test_multiquadratic_rejects_bad_rank():
    with pytest.raises(ValueError):
        multiquadratic_groups(0, 100)


def test_log_ratio_string_anchors():
    assert log_ratio_string(35, 67600) == "0.3197"
    assert log_ratio_string(5, 576) == "0.2532"
    assert log_ratio_string(1, 576) == "0.0000"
    assert log_ratio_string(243, 51984) == "0.5059"
    assert log_ratio_string(35, 67600, places=2) == "0.32"


def test_log_ratio_string_rejects_bad_arguments():
    with pytest.raises(ValueError):
        log_ratio_string(0, 576)
    with pytest.raises(ValueError):
        log_ratio_string(5, 1)


def test_integer_root_anchors():
    assert integer_root(0, 3) == 0
    assert integer_root(26, 3) == 2
    assert integer_root(27, 3) == 3
    assert integer_root(10**18, 6) == 1000
    with pytest.raises(ValueError):
        integer_root(-1, 2)
    with pytest.raises(ValueError):
        integer_root(5, 0)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**30), st.integers(1, 8))
def test_integer_root_is_floor_root(x, k):
    r = integer_root(x, k)
    assert r**k <= x < (r + 1) ** k


def test_squarefree_numbers_sieve():
    nums = squarefree_numbers(200)
    assert nums[0] == 1
    for n in nums:
        assert is_squarefree(n)
    listed = set(nums)
    for n in range(1, 201):
        assert (n in listed) == is_squarefree(n)
