import pytest

from pforge.homology import (structure_degree, check_structure, monomials,
                             block_basis, block_matrix,
                             poisson_cohomology_dims, canonical_homology_dims,
                             NonHomogeneous, LICHNEROWICZ, CANONICAL)
from pforge.forms import NonInvolutive
from conftest import bivector


def rows_by_key(rows):
    return {(r["grade"], r["weight"]): r for r in rows}


def test_structure_degree():
    assert structure_degree(bivector(2, {(0, 1): "1"})) == 0
    assert structure_degree(
        bivector(3, {(0, 1): "x2", (1, 2): "x0", (0, 2): "-x1"})) == 1
    with pytest.raises(NonHomogeneous):
        structure_degree(bivector(2, {(0, 1): "1 + x0"}))


def test_check_structure_rejects_non_involutive():
    p = bivector(3, {(0, 1): "1", (0, 2): "-x0"})
    with pytest.raises((NonInvolutive, NonHomogeneous)):
        check_structure(p)


def test_monomials():
    assert monomials(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert monomials(3, 0) == [(0, 0, 0)]
    assert monomials(2, -1) == []


def test_block_basis_counts():
    # grade 1 multivectors with linear coefficients on n=3: weight 0
    assert len(block_basis(3, LICHNEROWICZ, 1, 0)) == 9
    # grade 2 forms with degree-0 coefficients: weight 2
    assert len(block_basis(3, CANONICAL, 2, 2)) == 3


def test_block_composite_is_zero():
    so3 = bivector(3, {(0, 1): "x2", (1, 2): "x0", (0, 2): "-x1"})
    # shift = deg - 2 = -1
    from pforge import linalg
    b1 = block_matrix(so3, LICHNEROWICZ, 1, 1)
    b2 = block_matrix(so3, LICHNEROWICZ, 2, 0)
    comp = linalg.mat_mul(b2.matrix, b1.matrix)
    assert all(all(x == 0 for x in row) for row in comp)


PLANE_LICH_H = {(0, 0): 1}
SO3_H0 = {0: 1, 1: 0, 2: 1, 3: 0, 4: 1}


def test_plane_poisson_cohomology():
    plane = bivector(2, {(0, 1): "1"})
    rows = poisson_cohomology_dims(plane, 2, 4)
    for r in rows:
        want = PLANE_LICH_H.get((r["grade"], r["weight"]), 0)
        assert r["dim_H"] == want, r


def test_so3_h0_by_weight():
    so3 = bivector(3, {(0, 1): "x2", (1, 2): "x0", (0, 2): "-x1"})
    rows = rows_by_key(poisson_cohomology_dims(so3, 0, 4))
    got = {w: rows[(0, w)]["dim_H"] for w in range(5)}
    assert got == SO3_H0


def test_plane_canonical_homology():
    plane = bivector(2, {(0, 1): "1"})
    rows = canonical_homology_dims(plane, 2, 4)
    for r in rows:
        want = 1 if (r["grade"], r["weight"]) == (2, 2) else 0
        assert r["dim_H"] == want, r


SO3_CANONICAL = {
    (0, 0): (1, 0, 0, 1), (0, 1): (3, 3, 0, 0), (0, 2): (6, 5, 0, 1),
    (0, 3): (10, 10, 0, 0),
    (1, 1): (3, 3, 0, 0), (1, 2): (9, 6, 3, 0), (1, 3): (18, 13, 5, 0),
    (2, 2): (3, 0, 3, 0), (2, 3): (9, 3, 6, 0),
}


def test_so3_canonical_homology_table():
    so3 = bivector(3, {(0, 1): "x2", (1, 2): "x0", (0, 2): "-x1"})
    rows = canonical_homology_dims(so3, 2, 3)
    got = {(r["grade"], r["weight"]):
           (r["dim_C"], r["rank_in"], r["rank_out"], r["dim_H"])
           for r in rows}
    assert got == SO3_CANONICAL


def test_euler_characteristic_along_weight_orbits():
    # the differential moves weight by deg - 2, so the alternating sum
    # telescopes along orbits (k, w0 + k * (deg - 2)), not at fixed weight
    for p, wmax in [(bivector(2, {(0, 1): "1"}), 4),
                    (bivector(3, {(0, 1): "x2", (1, 2): "x0",
                                  (0, 2): "-x1"}), 3)]:
        deg = structure_degree(p)
        step = deg - 2
        rows = rows_by_key(poisson_cohomology_dims(p, p.n, wmax))
        for w0 in range(0, wmax + 1):
            cs = hs = 0
            complete = True
            for k in range(p.n + 1):
                key = (k, w0 + k * step)
                if key not in rows:
                    complete = False
                    break
                cs += (-1) ** k * rows[key]["dim_C"]
                hs += (-1) ** k * rows[key]["dim_H"]
            if complete:
                assert cs == hs, (w0, cs, hs)
