from __future__ import annotations

import math
import warnings
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from planturan import bounds
from planturan.family import two_ck_lower, two_ck_lower_improved


def test_spec_examples():
    assert bounds.eval_bound("tc3", n=10, t=2) == 20
    assert bounds.eval_bound("bipartite", n=11, t=3) == 25
    assert bounds.eval_bound("lemma2ck", n=10, k=4) == 22 == two_ck_lower(10, 4).m


def test_values_are_exact_fractions():
    v = bounds.eval_bound("dowden.c4", n=10)
    assert v == Fraction(120, 7) and isinstance(v, Fraction)
    assert bounds.eval_bound("conj.weak", n=3, k=3) == 2
    assert bounds.eval_bound("conj.c4", n=8) == 17
    assert bounds.eval_bound("conj.c4", n=9) == 20


def test_piecewise_formulas():
    assert [bounds.eval_bound("main.prism", n=n) for n in range(6, 11)] == [11, 14, 17, 20, 24]
    assert bounds.eval_bound("bipartite", n=8, t=4) == 17
    assert bounds.eval_bound("bipartite", n=9, t=4) == 21
    assert bounds.eval_bound("bipartite", n=12, t=3) == 30
    assert bounds.eval_bound("bipartite", n=7, t=5) == 15
    assert bounds.eval_bound("tc3", n=9, t=3) == 21
    assert bounds.eval_bound("tc3", n=9, t=1) == 14


@given(st.integers(6, 200))
def test_tc3_two_matches_ceiling(n):
    assert bounds.eval_bound("tc3", n=n, t=2) == math.ceil(5 * n / 2) - 5


@given(st.integers(4, 12).flatmap(lambda k: st.tuples(st.just(k), st.integers(2 * k, 200))))
def test_two_ck_bound_integral_and_remainder_bonus(kn):
    k, n = kn
    v = bounds.eval_bound("lemma2ck", n=n, k=k)
    assert v.denominator == 1
    r = (n - 3) % (k - 2)
    assert v == (3 - Fraction(1, k - 2)) * n + Fraction(3 + r, k - 2) - 5 + (1 if r == 0 else 0)


@given(st.integers(7, 14).flatmap(lambda k: st.tuples(st.just(k), st.integers(3 * k - 3, 200))))
def test_improved_two_ck_bound_integral(kn):
    k, n = kn
    assert bounds.eval_bound("lemma3", n=n, k=k).denominator == 1


def test_improved_two_ck_bound_matches_construction():
    for k, n in [(7, 19), (7, 18), (8, 21), (9, 30)]:
        assert bounds.eval_bound("lemma3", n=n, k=k) == two_ck_lower_improved(n, k).m


def test_out_of_range_warns_but_evaluates():
    with pytest.warns(bounds.RangeWarning):
        assert bounds.eval_bound("dowden.k4", n=4) == 6
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        bounds.eval_bound("dowden.k4", n=6)


def test_unknown_and_bad_params():
    with pytest.raises(ValueError):
        bounds.eval_bound("nope", n=3)
    with pytest.raises(ValueError):
        bounds.eval_bound("tc3", n=9)
    with pytest.raises(ValueError):
        bounds.eval_bound("dowden.c3", n=9, k=3)


def test_holds_semantics():
    f = bounds.get("conj.weak")
    assert f.holds(5, n=6, k=5) and not f.holds(13, n=6, k=5)
    assert bounds.get("lemma2ck").holds(23, n=10, k=4)
    assert not bounds.get("dowden.c3").holds(9, n=6)


def test_registry_notes():
    assert any("3m-4" in note for note in bounds.get("lemma3").notes)
    assert any("n = 6" in note for note in bounds.get("dowden.k4").notes)
    assert bounds.get("theta4").reference_only
