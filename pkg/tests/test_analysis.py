from fractions import Fraction

import pytest

from pforge.ratpoly import parse_poly
from pforge.forms import d_poly
from pforge.analysis import (LieAlgebraSC, BadLieAlgebra, sharp, hamiltonian,
                             pbracket, rank_at, integrability_at, is_casimir,
                             casimir_basis, momentum_cocycle, ideal_check)
from conftest import bivector, random_poly, rng_for


def so3_p():
    return bivector(3, {(0, 1): "x2", (1, 2): "x0", (0, 2): "-x1"})


def so3_lie():
    z = [Fraction(0)] * 3
    def e(i, s=1):
        v = [Fraction(0)] * 3
        v[i] = Fraction(s)
        return v
    c = [[z, e(2), e(1, -1)],
         [e(2, -1), z, e(0)],
         [e(1), e(0, -1), z]]
    return LieAlgebraSC(3, c)


def test_lie_algebra_validation():
    g = so3_lie()
    assert g.bracket([Fraction(1), Fraction(0), Fraction(0)],
                     [Fraction(0), Fraction(1), Fraction(0)]) == \
        [Fraction(0), Fraction(0), Fraction(1)]
    bad = [[[Fraction(0)], [Fraction(1)]], [[Fraction(1)], [Fraction(0)]]]
    with pytest.raises(BadLieAlgebra):
        LieAlgebraSC(2, [[[Fraction(0)] * 2] * 2,
                         [[Fraction(1), Fraction(0)], [Fraction(0)] * 2]])


def test_hamiltonian_fields():
    p = so3_p()
    x0 = parse_poly("x0", 3)
    h = hamiltonian(p, x0)
    # {x0, .} rotates around the x0 axis
    assert str(h.terms.get((1,), parse_poly("0", 3))) == "x2"
    assert str(h.terms.get((2,), parse_poly("0", 3))) == "-x1"
    assert (0,) not in h.terms


def test_sharp_is_chain_map():
    from pforge.multivec import lichnerowicz_dp
    from pforge.forms import form_d
    from conftest import random_form
    for p in (so3_p(), bivector(2, {(0, 1): "1"})):
        rng = rng_for(41)
        for _ in range(10):
            a = random_form(p.n, rng.randint(0, p.n - 1), rng)
            assert sharp(p, form_d(a)) == lichnerowicz_dp(p, sharp(p, a))


def test_sharp_identity_on_functions():
    p = so3_p()
    f = parse_poly("x0*x1", 3)
    from pforge.forms import Form
    assert sharp(p, Form.from_poly(f)).terms.get((), None) == f


def test_pbracket_antisymmetry_and_jacobi():
    p = so3_p()
    rng = rng_for(42)
    for _ in range(10):
        f, g, h = (random_poly(3, rng) for _ in range(3))
        assert pbracket(p, f, g) == -pbracket(p, g, f)
        s = pbracket(p, pbracket(p, f, g), h) + \
            pbracket(p, pbracket(p, g, h), f) + \
            pbracket(p, pbracket(p, h, f), g)
        assert s.is_zero()


def test_rank_report():
    p = so3_p()
    rep = rank_at(p, [Fraction(1), Fraction(0), Fraction(0)])
    assert rep.rank == 2
    assert rep.integrable_here
    origin = rank_at(p, [Fraction(0)] * 3)
    assert origin.rank == 0
    d = rep.as_dict()
    assert d["rank"] == 2 and len(d["image_basis"]) == 2


def test_integrability_catalog_and_counterexample():
    plane = bivector(2, {(0, 1): "1"})
    assert integrability_at(plane, [Fraction(1), Fraction(2)])
    assert integrability_at(so3_p(), [Fraction(1), Fraction(1), Fraction(1)])
    non_jacobi = bivector(3, {(0, 1): "1", (0, 2): "-x0"})
    assert not integrability_at(non_jacobi, [Fraction(0)] * 3)


def test_casimir_sphere():
    p = so3_p()
    c = parse_poly("x0^2 + x1^2 + x2^2", 3)
    assert is_casimir(p, c)
    assert not is_casimir(p, parse_poly("x0", 3))
    basis = casimir_basis(p, 2)
    assert [str(b) for b in basis] == ["1", "x0^2 + x1^2 + x2^2"]


def test_casimir_only_constants():
    p1 = bivector(2, {(0, 1): "x0"})
    basis = casimir_basis(p1, 6)
    assert [str(b) for b in basis] == ["1"]


def test_momentum_cocycle_translations():
    plane = bivector(2, {(0, 1): "1"})
    z = [Fraction(0)] * 2
    g = LieAlgebraSC(2, [[z, z], [z, z]])
    lam = [parse_poly("x0", 2), parse_poly("x1", 2)]
    rep = momentum_cocycle(plane, g, lam)
    assert str(rep["table"][0][1]) == "-1"
    # with lam reversed the off-diagonal entry is +1
    rep2 = momentum_cocycle(plane, g, list(reversed(lam)))
    assert str(rep2["table"][0][1]) == "1"
    assert rep["cyclic_identity"]
    # the cocycle is nontrivial yet the hamiltonian map is still a
    # homomorphism: constant brackets have zero hamiltonian field
    assert rep["hamiltonian_homomorphism"]


def test_momentum_cocycle_coadjoint_so3():
    rep = momentum_cocycle(so3_p(), so3_lie(),
                           [parse_poly(s, 3) for s in ("x0", "x1", "x2")])
    assert all(c.is_zero() for row in rep["table"] for c in row)
    assert rep["cyclic_identity"]
    assert rep["hamiltonian_homomorphism"]


def test_ideal_check_verdicts():
    so3 = so3_p()
    plane = bivector(2, {(0, 1): "1"})
    sphere = ideal_check(so3, [parse_poly("x0^2 + x1^2 + x2^2 - 1", 3)], 2)
    assert sphere["verdict"] == "poisson" and sphere["poisson_ideal"]
    assert all(c["multipliers"] is not None or True
               for c in sphere["certificates"])
    axis = ideal_check(plane, [parse_poly("x0", 2)], 2)
    assert axis["verdict"] == "refuted" and axis["poisson_ideal"] is False
    assert axis["failures"][0]["witness_point"] == [Fraction(0), Fraction(0)]
    cone = ideal_check(plane, [parse_poly("x0^2 + x1^2", 2)], 2)
    assert cone["verdict"] == "undecided"
    assert cone["poisson_ideal"] is None
