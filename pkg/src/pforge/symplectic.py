"""Symplectic star operator for constant nondegenerate bivectors.

Conventions, fixed once so that both acceptance identities hold
(star(star(a)) = a and delta = (-1)^k star d star):

* matrix(omega) = matrix(p)^{-1}; with p = d0^d1 on the plane this gives
  omega = -dx0^dx1, the choice under which {f,g} * omega^m equals
  m * dg ^ df ^ omega^(m-1).
* vol = omega^m / m!.
* The grade-k pairing of forms is the determinant pairing
  <a, b>_k = det[ p(a_i, b_j) ] on decomposables of 1-forms (the
  literal "(a^b)(wedge^k p)" reading dies on top forms; see README).
* star(a) is the unique solution of  b ^ star(a) = <a, b>_k * vol
  over all grade-k basis forms b.  Note the argument order in the
  pairing; the pairing is only (-1)^k-symmetric.
"""

from fractions import Fraction
from math import factorial

from . import linalg
from .ratpoly import Poly
from .multivec import Multivector, all_index_tuples, GradeMismatch
from .forms import Form, form_wedge


class DegenerateBivector(ValueError):
    pass


class NotConstantCoefficient(ValueError):
    pass


class OddDimension(ValueError):
    pass


def bivector_matrix(p):
    """Antisymmetric n x n matrix with M[i][j] = {x_i, x_j} for constant p."""
    n = p.n
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), c in p.terms.items():
        if not c.is_constant():
            raise NotConstantCoefficient(
                "bivector coefficient for (%d,%d) is not constant" % (i, j))
        v = c.constant_term()
        m[i][j] = v
        m[j][i] = -v
    return m


class SymplecticContext:
    """Frozen star-operator context for one constant symplectic bivector."""

    def __init__(self, p):
        if p.grade != 2:
            raise GradeMismatch("need a bivector")
        if p.n % 2 != 0:
            raise OddDimension("symplectic dimension must be even")
        self.n = p.n
        self.m = p.n // 2
        self.p = p
        self.pmat = bivector_matrix(p)
        inv = linalg.invert(self.pmat)
        if inv is None:
            raise DegenerateBivector("bivector matrix is singular")
        self.omat = inv
        omega = Form.zero(self.n, 2)
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if inv[i][j] != 0:
                    omega = omega + Form.basis(self.n, (i, j), inv[i][j])
        self.omega = omega
        vol = Form.from_poly(Poly.const(self.n, 1))
        for _ in range(self.m):
            vol = form_wedge(vol, omega)
        self.vol = vol.scale(Fraction(1, factorial(self.m)))
        if self.vol.is_zero():
            raise DegenerateBivector("volume form vanished")
        self._star_matrices = {}

    def pairing_basis(self, idx_a, idx_b):
        """Determinant pairing <dx_A, dx_B>_k = det[ p(a_i, b_j) ]."""
        k = len(idx_a)
        if k == 0:
            return Fraction(1)
        minor = [[self.pmat[ia][jb] for jb in idx_b] for ia in idx_a]
        return _det(minor)

    def pairing(self, a, b):
        """Determinant pairing of equal-grade forms, Poly-bilinear."""
        if a.grade != b.grade:
            raise GradeMismatch("pairing needs equal grades")
        total = Poly.zero(self.n)
        for ia, ca in a.terms.items():
            for ib, cb in b.terms.items():
                s = self.pairing_basis(ia, ib)
                if s:
                    total = total + ca * cb * s
        return total

    def _star_matrix(self, k):
        """Matrix of star on grade-k basis forms, solved from the
        defining relation against every grade-k basis beta."""
        if k in self._star_matrices:
            return self._star_matrices[k]
        n, two_m = self.n, self.n
        src = all_index_tuples(n, k)
        dst = all_index_tuples(n, two_m - k)
        vol_coeff = self.vol.coeff(tuple(range(n)))
        vc = vol_coeff.constant_term()
        cols = []
        for alpha in src:
            # unknowns: coefficients of star(dx_alpha) over dst
            mat = []
            rhs = []
            for beta in src:
                row = []
                for gamma in dst:
                    sign, idx = _merge(beta, gamma)
                    row.append(Fraction(sign) if sign else Fraction(0))
                mat.append(row)
                rhs.append(self.pairing_basis(alpha, beta) * vc)
            sol = linalg.solve(mat, rhs)
            if sol is None:
                raise DegenerateBivector("star system unsolvable at grade %d" % k)
            cols.append(sol)
        self._star_matrices[k] = (src, dst, cols)
        return self._star_matrices[k]

    def star(self, a):
        """Symplectic star; grade k -> 2m - k, Poly-linear."""
        k = a.grade
        if not 0 <= k <= self.n:
            raise GradeMismatch("grade out of range")
        src, dst, cols = self._star_matrix(k)
        out = Form.zero(self.n, self.n - k)
        pos = {idx: i for i, idx in enumerate(src)}
        for idx, c in a.terms.items():
            col = cols[pos[idx]]
            for j, gamma in enumerate(dst):
                if col[j]:
                    out = out + Form.basis(self.n, gamma, c * col[j])
        return out


def _det(m):
    k = len(m)
    if k == 0:
        return Fraction(1)
    from itertools import permutations
    total = Fraction(0)
    for perm in permutations(range(k)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k)
                  if perm[a] > perm[b])
        prod = Fraction((-1) ** inv)
        for r, c in enumerate(perm):
            prod *= m[r][c]
        total += prod
    return total


def _merge(a, b):
    from .multivec import merge_indices
    return merge_indices(a, b)


def make_context(p):
    """Build the star context; rejects degenerate, odd-dimensional, or
    non-constant bivectors."""
    return SymplecticContext(p)
