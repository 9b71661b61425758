from fractions import Fraction

import pytest

from pforge.ratpoly import parse_poly
from pforge.forms import Form, form_wedge, form_d, delta
from pforge.symplectic import (make_context, DegenerateBivector, OddDimension,
                               NotConstantCoefficient)
from conftest import bivector, random_form, rng_for

R2 = bivector(2, {(0, 1): "1"})
R4 = bivector(4, {(0, 1): "1", (2, 3): "1"})
R4_SKEW = bivector(4, {(0, 1): "2", (2, 3): "-1/3", (0, 3): "1"})


@pytest.mark.parametrize("p", [R2, R4, R4_SKEW])
def test_star_is_an_involution(p):
    ctx = make_context(p)
    rng = rng_for(21)
    for _ in range(12):
        a = random_form(p.n, rng.randint(0, p.n), rng)
        assert ctx.star(ctx.star(a)) == a


@pytest.mark.parametrize("p", [R2, R4, R4_SKEW])
def test_star_one_and_volume(p):
    ctx = make_context(p)
    one = Form.from_poly(parse_poly("1", p.n))
    assert ctx.star(one) == ctx.vol
    assert ctx.star(ctx.vol) == one


@pytest.mark.parametrize("p", [R2, R4, R4_SKEW])
def test_delta_via_star_conjugation(p):
    # delta = (-1)^k star d star on k-forms
    ctx = make_context(p)
    rng = rng_for(22)
    a0 = random_form(p.n, 0, rng)
    assert delta(p, a0).is_zero()
    for _ in range(12):
        k = rng.randint(1, p.n)
        a = random_form(p.n, k, rng)
        assert delta(p, a) == ctx.star(form_d(ctx.star(a))).scale((-1) ** k)


@pytest.mark.parametrize("p", [R2, R4, R4_SKEW])
def test_bracket_volume_identity(p):
    # {f,g} omega^m = m dg ^ df ^ omega^(m-1)
    from pforge.forms import pbracket_of, d_poly
    ctx = make_context(p)
    m = p.n // 2
    rng = rng_for(23)
    from conftest import random_poly

    def omega_power(k):
        out = Form.from_poly(parse_poly("1", p.n))
        for _ in range(k):
            out = form_wedge(out, ctx.omega)
        return out

    for _ in range(8):
        f = random_poly(p.n, rng)
        g = random_poly(p.n, rng)
        lhs = form_wedge(Form.from_poly(pbracket_of(p, f, g)),
                         omega_power(m))
        rhs = form_wedge(form_wedge(d_poly(g), d_poly(f)),
                         omega_power(m - 1)).scale(m)
        assert lhs == rhs


def test_degenerate_rejected():
    p = bivector(4, {(0, 1): "1"})
    with pytest.raises(DegenerateBivector):
        make_context(p)


def test_odd_dimension_rejected():
    with pytest.raises(OddDimension):
        make_context(bivector(3, {(0, 1): "1"}))


def test_non_constant_rejected():
    with pytest.raises(NotConstantCoefficient):
        make_context(bivector(2, {(0, 1): "x0"}))
