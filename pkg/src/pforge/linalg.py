"""Exact linear algebra over the rationals.

Matrices are plain lists of lists of Fraction.  Everything here is small
and dense; the point is exactness and determinism, not speed.  Rank goes
through fraction-free (Bareiss) elimination on an integer-scaled copy so
intermediate entries never explode into huge reduced fractions.
"""

from fractions import Fraction
from math import gcd


def _lcm(a, b):
    return a // gcd(a, b) * b


def _integer_rows(mat):
    """Scale each row by the lcm of its denominators; returns int rows."""
    out = []
    for row in mat:
        d = 1
        for x in row:
            f = Fraction(x)
            d = _lcm(d, f.denominator)
        out.append([int(Fraction(x) * d) for x in row])
    return out


def rank(mat):
    """Exact rank via fraction-free Gaussian (Bareiss) elimination."""
    if not mat or not mat[0]:
        return 0
    m = _integer_rows(mat)
    rows, cols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == rows:
            break
    return r


def rref(mat):
    """Reduced row echelon form over Fraction.

    Returns (rref_matrix, pivot_columns).  The input is not modified.
    """
    m = [[Fraction(x) for x in row] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def nullspace(mat, ncols=None):
    """Basis of the right kernel, as a list of Fraction vectors."""
    if not mat:
        return [unit_vector(i, ncols) for i in range(ncols)] if ncols else []
    cols = len(mat[0])
    red, pivots = rref(mat)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(mat, rhs):
    """One solution of mat * x = rhs, or None if inconsistent."""
    if not mat:
        return [] if all(b == 0 for b in rhs) else None
    cols = len(mat[0])
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def unit_vector(i, n):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def row_space_basis(rows):
    """Independent subset-free basis (rref rows) of the span of `rows`."""
    rows = [r for r in rows if any(x != 0 for x in r)]
    if not rows:
        return []
    red, pivots = rref(rows)
    return [red[i] for i in range(len(pivots))]


def in_span(rows, vec):
    """Exact membership of vec in the row span of rows."""
    base = [r for r in rows if any(x != 0 for x in r)]
    if not base:
        return all(x == 0 for x in vec)
    return rank(base) == rank(base + [vec])


def subspace_contains(rows, other_rows):
    return all(in_span(rows, v) for v in other_rows)


def subspace_equal(rows_a, rows_b):
    return subspace_contains(rows_a, rows_b) and subspace_contains(rows_b, rows_a)


def intersect(rows_a, rows_b):
    """Basis of the intersection of two row-span subspaces of Q^n."""
    a = row_space_basis(rows_a)
    b = row_space_basis(rows_b)
    if not a or not b:
        return []
    n = len(a[0])
    # Zassenhaus: kernel of [A; B] stacked as columns trick via solving
    # x in span(a) and x in span(b): coefficients (u, v) with u*A = v*B.
    mat = []
    for c in range(n):
        mat.append([a[i][c] for i in range(len(a))] +
                   [-b[j][c] for j in range(len(b))])
    combined = []
    for k in nullspace(mat):
        vec = [sum(k[i] * a[i][c] for i in range(len(a))) for c in range(n)]
        combined.append(vec)
    return row_space_basis(combined)


def complement_basis(rows, n):
    """Coordinate vectors extending span(rows) to all of Q^n."""
    base = row_space_basis(rows)
    comp = []
    for i in range(n):
        e = unit_vector(i, n)
        if not in_span(base + comp, e):
            comp.append(e)
    return comp


def coordinates_in_basis(basis_rows, vec):
    """Coefficients of vec in the given (independent) basis, or None."""
    if not basis_rows:
        return [] if all(x == 0 for x in vec) else None
    mat = [[basis_rows[j][c] for j in range(len(basis_rows))]
           for c in range(len(vec))]
    return solve(mat, list(vec))


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(rows)]


def mat_vec(a, v):
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


def identity(n):
    return [unit_vector(i, n) for i in range(n)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def invert(mat):
    """Exact inverse of a square matrix, or None if singular."""
    n = len(mat)
    aug = [[Fraction(x) for x in row] + unit_vector(i, n)
           for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]
