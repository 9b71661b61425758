from fractions import Fraction

from pforge import linalg


def F(rows):
    return [[Fraction(x) for x in r] for r in rows]


def test_rank():
    assert linalg.rank(F([[1, 2], [2, 4]])) == 1
    assert linalg.rank(F([[1, 0], [0, 1]])) == 2
    assert linalg.rank([]) == 0
    assert linalg.rank(F([[0, 0]])) == 0


def test_rref_pivots():
    r, pivots = linalg.rref(F([[2, 4, 0], [1, 2, 1]]))
    assert pivots == [0, 2]
    assert r[0][:2] == [Fraction(1), Fraction(2)]
    assert r[1][2] == Fraction(1)


def test_nullspace_orthogonality():
    m = F([[1, 2, 3], [0, 1, 1]])
    for v in linalg.nullspace(m):
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    assert len(linalg.nullspace(m)) == 1


def test_solve():
    m = F([[1, 1], [1, -1]])
    x = linalg.solve(m, [Fraction(3), Fraction(1)])
    assert x == [Fraction(2), Fraction(1)]
    assert linalg.solve(F([[1, 1], [1, 1]]), [Fraction(0), Fraction(1)]) is None


def test_span_operations():
    a = F([[1, 0, 0], [0, 1, 0]])
    b = F([[1, 1, 0], [0, 0, 1]])
    inter = linalg.intersect(a, b)
    assert len(inter) == 1
    assert linalg.in_span(a, inter[0]) and linalg.in_span(b, inter[0])
    comp = linalg.complement_basis(a, 3)
    assert len(comp) == 1
    assert linalg.rank(a + comp) == 3


def test_coordinates_and_inverse():
    basis = F([[1, 1], [0, 1]])
    c = linalg.coordinates_in_basis(basis, [Fraction(2), Fraction(3)])
    assert c == [Fraction(2), Fraction(1)]
    m = F([[2, 1], [1, 1]])
    assert linalg.mat_mul(m, linalg.invert(m)) == linalg.identity(2)
