from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from braidphase.errors import ParseError
from braidphase.phase import Angle, parse_angle

angles = st.builds(
    Angle,
    st.fractions(min_value=-4, max_value=4, max_denominator=24),
    st.lists(
        st.tuples(st.sampled_from(["th1", "th2", "th3"]), st.integers(-3, 3)),
        max_size=3,
    ).map(tuple),
)


def test_basic_examples():
    assert Angle.rational(1, 3) + Angle.rational(2, 3) == Angle.zero()
    assert Angle.symbol("th1").scale(3) == Angle.symbol("th1", 3)
    a = Angle.rational(1, 4) + Angle.symbol("th1")
    b = Angle.rational(3, 4) + Angle.symbol("th1", -1)
    assert a + b == Angle.zero()


def test_normalization():
    assert Angle(Fraction(5, 4)).frac == Fraction(1, 4)
    assert Angle(Fraction(-1, 3)).frac == Fraction(2, 3)
    assert Angle(Fraction(0), (("th1", 2), ("th1", -2))) == Angle.zero()


@settings(max_examples=120, derandomize=True)
@given(angles, angles, angles)
def test_group_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + Angle.zero() == a
    assert a + (-a) == Angle.zero()
    assert a.scale(3) == a + a + a
    assert a.scale(-2) == -(a + a)


def test_group_laws_seeded_bulk():
    import random

    rng = random.Random(500)

    def sample() -> Angle:
        out = Angle.rational(rng.randint(-8, 8), rng.randint(1, 12))
        for name in ("th1", "th2"):
            out = out + Angle.symbol(name, rng.randint(-2, 2))
        return out

    for _ in range(500):
        a, b, c = sample(), sample(), sample()
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a + (-a) == Angle.zero()


def test_torsion():
    assert Angle.rational(1, 2).is_torsion
    assert not Angle.symbol("th1").is_torsion
    assert not (Angle.rational(1, 3) + Angle.symbol("th1", 2)).is_torsion
    assert Angle.zero().torsion_order() == 1
    assert Angle.rational(3, 7).torsion_order() == 7
    assert Angle.symbol("th1").torsion_order() is None


def test_torsion_brute_force():
    # torsion iff some k <= denominator kills the angle, checked directly
    for q in range(1, 101):
        for p in (0, 1, q - 1, q // 2):
            a = Angle.rational(p, q)
            killed = any(not a.scale(k) for k in range(1, q + 1))
            assert killed == a.is_torsion


@settings(max_examples=80, derandomize=True)
@given(angles)
def test_parse_format_roundtrip(a):
    assert parse_angle(str(a)) == a


def test_parse_examples():
    assert parse_angle("1/3 + 2*th1") == Angle.rational(1, 3) + Angle.symbol("th1", 2)
    assert parse_angle("0") == Angle.zero()
    assert parse_angle("-th2") == Angle.symbol("th2", -1)
    assert parse_angle("3/4 - th1") == Angle.rational(3, 4) - Angle.symbol("th1")
    with pytest.raises(ParseError):
        parse_angle("1/3 + + th1")
    with pytest.raises(ParseError):
        parse_angle("th1*2")
    with pytest.raises(ParseError):
        parse_angle("1/0")
