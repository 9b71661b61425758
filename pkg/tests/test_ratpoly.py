from fractions import Fraction

import pytest

from pforge.ratpoly import (Poly, parse_poly, PolyParseError,
                            DimensionMismatch)


def test_parse_print_round_trip():
    for text in ["0", "1", "-3/2", "x0", "x1^3", "x0*x1 + 1",
                 "x0^2 - 2*x0*x1 + x1^2", "1/2*x2 - x0^4"]:
        p = parse_poly(text, 3)
        assert parse_poly(str(p), 3) == p


def test_canonical_string_is_graded_lex():
    p = parse_poly("x1 + x0^2 + 1 + x0*x1", 2)
    assert str(p) == "1 + x1 + x0^2 + x0*x1"


def test_arithmetic():
    x0, x1 = Poly.var(2, 0), Poly.var(2, 1)
    p = (x0 + x1) * (x0 - x1)
    assert p == x0 * x0 - x1 * x1
    assert (p - p).is_zero()
    assert (-p + p).is_zero()
    assert p.degree() == 2


def test_diff_and_eval():
    p = parse_poly("x0^3*x1 + 2*x1", 2)
    assert str(p.diff(0)) == "3*x0^2*x1"
    assert str(p.diff(1)) == "2 + x0^3"
    assert p.eval([Fraction(1), Fraction(2)]) == Fraction(6)


def test_homogeneous_flag():
    assert parse_poly("x0^2 + x1^2", 2).is_homogeneous()
    assert not parse_poly("x0^2 + x1", 2).is_homogeneous()


def test_parse_errors():
    for bad in ["x0 +", "x9", "x0^", "1//2", "(x0", "y"]:
        with pytest.raises(PolyParseError):
            parse_poly(bad, 2)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        parse_poly("x0", 1) + parse_poly("x0", 2)
