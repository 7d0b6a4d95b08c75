from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mladder import (
    OutOfStatedRange,
    prop41_indices,
    prop42_indices,
    thm31_mpoly,
    thm32_mpoly,
)


def test_thm31_substitution():
    assert thm31_mpoly(7, 3).terms == {
        (3, 3): Fraction(12),
        (3, 4): Fraction(12),
        (4, 4): Fraction(6),
    }


def test_thm31_keeps_negative_coefficient_at_n2():
    # at n = 2 the last coefficient goes negative; emitted verbatim
    assert thm31_mpoly(5, 2).terms == {
        (3, 3): Fraction(8),
        (3, 4): Fraction(8),
        (4, 4): Fraction(-4),
    }


def test_thm32_substitution():
    assert thm32_mpoly(5, 6).terms == {
        (4, 4): Fraction(8),
        (4, 5): Fraction(16),
        (5, 6): Fraction(24),
        (6, 6): Fraction(72),
    }


def test_thm32_n3_term_vanishes():
    assert thm32_mpoly(4, 4).terms == {
        (4, 4): Fraction(6),
        (4, 5): Fraction(12),
        (5, 6): Fraction(18),
        (6, 6): Fraction(18),
    }


def test_stated_ranges_are_enforced():
    with pytest.raises(OutOfStatedRange):
        thm31_mpoly(3, 5)
    with pytest.raises(OutOfStatedRange):
        thm32_mpoly(4, 3)
    with pytest.raises(OutOfStatedRange):
        prop41_indices(3, 3)
    with pytest.raises(OutOfStatedRange):
        prop42_indices(4, 3)


def test_prop41_values():
    s = prop41_indices(7, 3)
    assert s.m1 == 162
    assert s.m2 == 16 * (4 * 3 - 3) * (3 - 1) * 6 * 6
    assert s.mm2 == Fraction((6 * 3 - 1) * (6 * 3 + 1) * 36, 144)
    assert s.sdd == Fraction((48 * 9 - 42 * 3 + 1) * 36, 72)
    assert s.r_alpha == s.m2
    assert s.rr_alpha == s.mm2


def test_prop42_values():
    s = prop42_indices(5, 6)
    assert s.m1 == 2 * (36 * 6 - 49) * 4
    assert s.m2 == 72 * (9 * 6 - 11) * (2 * 6 - 3) * 16
    assert s.mm2 == Fraction((10 * 6 - 3) * (10 * 6 - 7) * 16, 100)
    assert s.sdd == Fraction((48 * 36 - 42 * 6 + 1) * 16, 72)


def test_alpha_powers():
    assert prop41_indices(7, 3, alpha=0).r_alpha == 1
    assert prop41_indices(7, 3, alpha=2).r_alpha == prop41_indices(7, 3).m2 ** 2
    assert prop41_indices(7, 3, alpha=0.5).r_alpha == pytest.approx(10368 ** 0.5)


@given(st.integers(4, 12), st.integers(2, 10))
def test_thm31_total_is_edge_count(m, n):
    assert thm31_mpoly(m, n).eval_at_one() == (m - 1) * (2 * n - 1)


@given(st.integers(4, 10), st.integers(4, 10))
def test_thm32_total_is_line_graph_edge_count(m, n):
    # sum of C(d, 2) over the ladder's degrees
    expected = 2 * (m - 1) * 3 + (m - 1) * (n - 2) * 6
    assert thm32_mpoly(m, n).eval_at_one() == expected
