from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kcat import QQ, Field, MalformedInput, ParseError, Residue

F5 = Field.prime(5)


def test_parse_round_trip():
    assert Field.parse("q") == QQ
    assert Field.parse("fp:7") == Field.prime(7)
    assert Field.prime(7).spec() == "fp:7"
    assert QQ.spec() == "q"


@pytest.mark.parametrize("bad", ["r", "fp:", "fp:x", "z/5"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        Field.parse(bad)


def test_non_prime_rejected():
    with pytest.raises(MalformedInput):
        Field.prime(6)


def test_residue_arithmetic():
    a, b = F5(3), F5(4)
    assert a + b == F5(2)
    assert a * b == F5(2)
    assert a - b == F5(4)
    assert a / b == F5(2)
    assert -a == F5(2)
    assert F5(Fraction(1, 2)) == F5(3)


def test_mixed_characteristic():
    with pytest.raises(ValueError):
        Residue(1, 3) + Residue(1, 5)


def test_scalars_and_format():
    assert QQ.scalar("-3/4") == Fraction(-3, 4)
    assert F5.scalar("7") == F5(2)
    assert F5.format(F5(4)) == "4"
    assert QQ.format(Fraction(1, 2)) == "1/2"
    with pytest.raises(ParseError):
        QQ.scalar("one")


def test_enumeration():
    assert len(list(F5.elements())) == 5
    assert len(list(Field.prime(2).vectors(3))) == 8
    with pytest.raises(ValueError):
        QQ.elements()


@given(st.integers(), st.integers(), st.integers())
def test_residue_field_laws(x, y, z):
    a, b, c = F5(x), F5(y), F5(z)
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)
    if b:
        assert (a / b) * b == a
