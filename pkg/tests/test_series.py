"""Exact-rational series arithmetic and the composition identity."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import kcross.series as series_mod
from kcross.counting import count_table
from kcross.series import (
    matching_composition_series,
    one,
    series_add,
    series_inv,
    series_mul,
    series_pow,
    structure_series,
    truncated,
    verify_identity,
)


def test_basic_arithmetic():
    a = truncated([1, 1], 3)
    b = truncated([1, -1], 3)
    assert series_mul(a, b).coeffs == (F(1), F(0), F(-1), F(0))
    assert series_inv(b).coeffs == (F(1), F(1), F(1), F(1))
    assert series_pow(a, 3).coeffs == (F(1), F(3), F(3), F(1))
    assert series_add(a, b).coeffs == (F(2), F(0), F(0), F(0))


def test_inversion_requires_nonzero_constant_term():
    with pytest.raises(ValueError):
        series_inv(truncated([0, 1], 4))


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        series_mul(one(3), one(4))


def test_negative_power_via_inverse():
    a = truncated([1, -1], 6)
    assert series_pow(a, -1).coeffs == series_inv(a).coeffs


small_series = st.lists(
    st.integers(min_value=-6, max_value=6), min_size=1, max_size=9
).filter(lambda cs: cs[0] != 0)


@settings(max_examples=200, deadline=None)
@given(small_series)
def test_series_times_its_inverse_is_one(cs):
    a = truncated(cs, 8)
    assert series_mul(a, series_inv(a)).coeffs == one(8).coeffs


def test_structure_series_examples():
    assert [int(c) for c in structure_series(3, 1, 4).coeffs] == [1, 1, 1, 2, 5]
    assert structure_series(2, 0, 5).coeffs == tuple(F(1) for _ in range(6))
    assert structure_series(2, 1, 8)[8] == 82


def test_structure_series_at_weight_one_gives_totals():
    s = structure_series(3, 1, 14)
    for n in range(15):
        assert s[n] == count_table(3, n).total


def test_composition_series_constant_term():
    for k in (2, 3):
        for w in (F(0), F(1), F(7, 3)):
            assert matching_composition_series(k, w, 0).coeffs == (F(1),)


def test_identity_holds():
    assert verify_identity(3, 1, 30).ok
    assert verify_identity(2, 1, 30).ok
    assert verify_identity(3, F(3, 2), 24).ok
    assert verify_identity(2, 2, 12).ok
    assert verify_identity(2, 0, 10).ok


def test_identity_mismatch_is_reported(monkeypatch):
    # corrupt the matching numbers: the first disagreeing order must be 2,
    # where the bad value first contributes
    real = series_mod.perfect_matchings

    def corrupted(k, m):
        return real(k, m) + (1 if m == 1 else 0)

    monkeypatch.setattr(series_mod, "perfect_matchings", corrupted)
    check = series_mod.verify_identity(3, 1, 8)
    assert not check.ok
    assert check.mismatch_order == 2
    assert check.rhs_coeff == check.lhs_coeff + 1
