import pickle
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ckit.frac3 import Frac3, frac3_make, frac3_scale3, reverse_cmp

fracs = st.builds(Frac3, st.integers(0, 10**6), st.integers(0, 20))


def test_canonical_form():
    assert Frac3(9, 3) == Frac3(1, 1)
    assert (Frac3(9, 3).m, Frac3(9, 3).k) == (1, 1)
    assert (Frac3(27, 1).m, Frac3(27, 1).k) == (9, 0)
    assert Frac3(0, 5) is Frac3.ZERO
    assert frac3_make(6, 2) == Frac3(2, 1)


def test_text():
    assert str(Frac3(4, 1)) == "4/3^1"
    assert Frac3(128, 4).display() == "128/81"
    assert str(Frac3(2)) == "2"
    assert Frac3.parse("16/3^2") == Frac3(16, 2)
    assert Frac3.parse("0") is Frac3.ZERO
    for bad in ("4/9", "4/3^0", "-1/3^2", "x"):
        with pytest.raises(ValueError):
            Frac3.parse(bad)


def test_from_fraction():
    assert Frac3.from_fraction(Fraction(76, 81)) == Frac3(76, 4)
    with pytest.raises(ValueError):
        Frac3.from_fraction(Fraction(1, 2))


def test_reverse_order():
    a, b = Frac3(2), Frac3(16, 2)
    assert reverse_cmp(a, b) == -1
    assert reverse_cmp(b, a) == 1
    assert reverse_cmp(a, Frac3(18, 2)) == 0
    assert sorted([b, a, Frac3(5, 1)], key=lambda f: -f.to_fraction()) == [a, b, Frac3(5, 1)]


def test_scale3():
    assert frac3_scale3(Frac3(2, 1), 1) == Frac3(2)
    assert Frac3(2).scale3(-2) == Frac3(2, 2)
    assert Frac3(2).scale3(3) == Frac3(54)
    assert Frac3.ZERO.scale3(4) is Frac3.ZERO


def test_immutable_and_picklable():
    f = Frac3(7, 3)
    with pytest.raises(AttributeError):
        f.m = 1
    assert pickle.loads(pickle.dumps(f)) == f


@given(fracs, fracs)
def test_order_matches_fraction(a, b):
    assert (a < b) == (a.to_fraction() < b.to_fraction())
    assert (a == b) == (a.to_fraction() == b.to_fraction())
    assert reverse_cmp(a, b) == -((a.to_fraction() > b.to_fraction()) - (a.to_fraction() < b.to_fraction()))


@given(fracs)
def test_text_round_trip(a):
    assert Frac3.parse(str(a)) == a
    assert Frac3.from_fraction(a.to_fraction()) == a


@given(fracs, st.integers(-10, 10))
def test_scale3_matches_fraction(a, j):
    assert a.scale3(j).to_fraction() == a.to_fraction() * Fraction(3) ** j
