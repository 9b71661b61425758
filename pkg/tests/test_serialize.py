from fractions import Fraction

import pytest

from pforge import serialize
from pforge.serialize import InputError
from pforge.ratpoly import parse_poly
from conftest import bivector, random_form, random_multivector, rng_for


def test_multivector_round_trip():
    rng = rng_for(51)
    for _ in range(15):
        n = rng.randint(1, 3)
        u = random_multivector(n, rng.randint(0, n), rng)
        j = serialize.multivector_to_json(u)
        assert serialize.multivector_from_json(j) == u


def test_form_round_trip():
    rng = rng_for(52)
    for _ in range(15):
        n = rng.randint(1, 3)
        a = random_form(n, rng.randint(0, n), rng)
        j = serialize.form_to_json(a)
        assert j["kind"] == "form"
        assert serialize.form_from_json(j) == a


def test_unsorted_idx_folds_sign():
    u = serialize.multivector_from_json(
        {"n": 2, "grade": 2, "terms": [{"idx": [1, 0], "coeff": "x0"}]})
    assert str(u.terms[(0, 1)]) == "-x0"


def test_repeated_idx_is_dropped():
    u = serialize.multivector_from_json(
        {"n": 2, "grade": 2, "terms": [{"idx": [1, 1], "coeff": "x0"}]})
    assert u.is_zero()


def test_kind_discrimination():
    with pytest.raises(InputError):
        serialize.form_from_json({"n": 2, "grade": 1,
                                  "terms": [{"idx": [0], "coeff": "1"}]})
    with pytest.raises(InputError):
        serialize.multivector_from_json(
            {"kind": "form", "n": 2, "grade": 1, "terms": []})


def test_header_validation():
    for bad in [{"n": -1, "grade": 0, "terms": []},
                {"n": 2, "grade": "x", "terms": []},
                {"n": 2, "grade": 0, "terms": [], "extra": 1},
                []]:
        with pytest.raises(InputError):
            serialize.multivector_from_json(bad)


def test_term_validation():
    with pytest.raises(InputError):
        serialize.multivector_from_json(
            {"n": 2, "grade": 1, "terms": [{"idx": [0, 1], "coeff": "1"}]})
    with pytest.raises(InputError):
        serialize.multivector_from_json(
            {"n": 2, "grade": 1, "terms": [{"idx": [0], "coeff": "x0 +"}]})


def test_point_and_fraction_parsing():
    assert serialize.point_from_text("1, -2, 1/3", 3) == \
        [Fraction(1), Fraction(-2), Fraction(1, 3)]
    with pytest.raises(InputError):
        serialize.point_from_text("1, 2", 3)
    with pytest.raises(InputError):
        serialize.fraction_from_json("a/b")


def test_dump_is_canonical():
    u = bivector(2, {(0, 1): "x0"})
    payload = serialize.str_fractions({"p": u, "c": Fraction(1, 2)})
    text = serialize.dump(payload)
    assert text == serialize.dump(payload)
    assert text.endswith("\n")
    assert '"c": "1/2"' in text


def test_algebra_parsers():
    obj = {"dim": 2,
           "mult": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
           "unit": [1, 0]}
    A = serialize.algebra_from_json(obj)
    assert A.dim == 2
    B = serialize.finite_algebra_from_json(obj)
    assert B.dim == 2
    with pytest.raises(InputError):
        serialize.algebra_from_json({"dim": 2})
    g = serialize.liealg_from_json(
        {"dim": 1, "c": [[[0]]]})
    assert g.dim == 1
