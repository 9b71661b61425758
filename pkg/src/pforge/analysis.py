"""Structure analysis of a bivector field.

Sharp map, Hamiltonian fields, pointwise rank and integrability,
Casimir search, momentum cocycles, and bounded-degree Poisson-ideal
checks.  Point computations are exact: points are rational, membership
questions are decided by exact rank comparisons, and every verdict
carries enough data to re-check it.
"""

from fractions import Fraction
from itertools import combinations, product

from . import linalg
from .ratpoly import Poly, DimensionMismatch
from .multivec import (Multivector, wedge, vf_bracket, jacobiator,
                       GradeMismatch, all_index_tuples)
from .forms import Form, d_poly, pbracket_of


class BadLieAlgebra(ValueError):
    """Structure constants violate antisymmetry or Jacobi."""


class LieAlgebraSC:
    """Lie algebra by structure constants: [e_i, e_j] = sum_k c[i][j][k] e_k."""

    __slots__ = ("dim", "c")

    def __init__(self, dim, c):
        self.dim = dim
        self.c = [[[Fraction(x) for x in c[i][j]] for j in range(dim)]
                  for i in range(dim)]
        self._validate()

    def _validate(self):
        d = self.dim
        for i in range(d):
            for j in range(d):
                if len(self.c[i][j]) != d:
                    raise BadLieAlgebra("structure vector length")
                if any(a + b for a, b in zip(self.c[i][j], self.c[j][i])):
                    raise BadLieAlgebra(
                        "not antisymmetric at (%d,%d)" % (i, j))
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    acc = [Fraction(0)] * d
                    for (a, b, c3) in ((i, j, k), (j, k, i), (k, i, j)):
                        for t in range(d):
                            coef = self.c[a][b][t]
                            if coef:
                                acc = [u + coef * v for u, v
                                       in zip(acc, self.c[t][c3])]
                    if any(acc):
                        raise BadLieAlgebra(
                            "Jacobi fails at (%d,%d,%d)" % (i, j, k))

    def bracket(self, u, v):
        d = self.dim
        out = [Fraction(0)] * d
        for i in range(d):
            if not u[i]:
                continue
            for j in range(d):
                if v[j]:
                    c = u[i] * v[j]
                    out = [a + c * b for a, b in zip(out, self.c[i][j])]
        return out


def sharp(p, a):
    """Bivector-induced map from forms to multivectors, grade-preserving.

    On functions it is the identity; on dx_i it gives the field
    S_i = sum_j {x_i, x_j} d_j; on higher forms the wedge of those.
    """
    if p.grade != 2:
        raise GradeMismatch("p must be a bivector")
    p._check(a)
    n = p.n
    if a.grade == 0:
        return Multivector.from_poly(a.as_poly())
    fields = [hamiltonian(p, Poly.var(n, i)) for i in range(n)]
    out = Multivector.zero(n, a.grade)
    for idx, c in a.terms.items():
        piece = Multivector.from_poly(c)
        for i in idx:
            piece = wedge(piece, fields[i])
        out = out + piece
    return out


def hamiltonian(p, f):
    """Hamiltonian field X_f with X_f(g) = {f, g}."""
    if p.grade != 2:
        raise GradeMismatch("p must be a bivector")
    n = p.n
    terms = {}
    for (i, j), c in p.terms.items():
        fi, fj = f.diff(i), f.diff(j)
        if not fi.is_zero():
            terms[(j,)] = terms.get((j,), Poly.zero(n)) + c * fi
        if not fj.is_zero():
            terms[(i,)] = terms.get((i,), Poly.zero(n)) - c * fj
    return Multivector(n, 1, terms)


def pbracket(p, f, g):
    """Poisson bracket of the bivector: {f,g} = i_p(df ^ dg)."""
    return pbracket_of(p, f, g)


def bivector_matrix_at(p, point):
    """Antisymmetric matrix P(x) with P[i][j] = {x_i, x_j}(x)."""
    n = p.n
    if len(point) != n:
        raise DimensionMismatch("point length %d != n=%d" % (len(point), n))
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), c in p.terms.items():
        v = c.eval(point)
        m[i][j] = v
        m[j][i] = -v
    return m


class PointReport:
    __slots__ = ("point", "rank", "image_basis", "integrable_here")

    def __init__(self, point, rank, image_basis, integrable_here):
        self.point = point
        self.rank = rank
        self.image_basis = image_basis
        self.integrable_here = integrable_here

    def as_dict(self):
        return {"point": [str(x) for x in self.point],
                "rank": self.rank,
                "image_basis": [[str(x) for x in row]
                                for row in self.image_basis],
                "integrable_here": self.integrable_here}


def _wedge_power_rank(p, point):
    """2k with p(x)^k != 0 and p(x)^(k+1) = 0, on the evaluated bivector."""
    n = p.n
    terms = {}
    for idx, c in p.terms.items():
        v = c.eval(point)
        if v:
            terms[idx] = Poly.const(n, v)
    px = Multivector(n, 2, terms)
    power = Multivector.from_poly(Poly.const(n, 1))
    k = 0
    while True:
        nxt = wedge(power, px)
        if nxt.is_zero():
            return 2 * k
        power = nxt
        k += 1


def rank_at(p, point):
    """Pointwise rank by both the wedge-power criterion and matrix rank."""
    point = [Fraction(x) for x in point]
    m = bivector_matrix_at(p, point)
    r_matrix = linalg.rank(m)
    r_wedge = _wedge_power_rank(p, point)
    if r_matrix != r_wedge:
        raise AssertionError(
            "rank criteria disagree: matrix %d vs wedge %d" % (r_matrix, r_wedge))
    image = linalg.row_space_basis(m)
    return PointReport(point, r_matrix, image,
                       integrability_at(p, point))


def integrability_at(p, point):
    """Pointwise involutivity: [S_i, S_j](x) must lie in the image of p(x)."""
    point = [Fraction(x) for x in point]
    n = p.n
    m = bivector_matrix_at(p, point)
    image = linalg.row_space_basis(m)
    fields = [hamiltonian(p, Poly.var(n, i)) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            br = vf_bracket(fields[i], fields[j])
            vec = [br.coeff((t,)).eval(point) for t in range(n)]
            if not linalg.in_span(image, vec):
                return False
    return True


def is_casimir(p, f):
    """True iff the Hamiltonian field of f vanishes identically."""
    return hamiltonian(p, f).is_zero()


def casimir_basis(p, max_degree):
    """Exact basis of Casimir polynomials of total degree <= max_degree."""
    from .homology import monomials
    n = p.n
    mons = []
    for deg in range(max_degree + 1):
        mons.extend(monomials(n, deg))
    # linear map f -> coefficients of X_f over (field index, monomial)
    rows_index = {}
    cols = []
    for e in mons:
        x = hamiltonian(p, Poly(n, {e: Fraction(1)}))
        col = {}
        for idx, c in x.terms.items():
            for ee, v in c.terms.items():
                key = (idx, ee)
                if key not in rows_index:
                    rows_index[key] = len(rows_index)
                col[rows_index[key]] = v
        cols.append(col)
    nrows = len(rows_index)
    if nrows == 0:
        mat = []
    else:
        mat = [[Fraction(0)] * len(mons) for _ in range(nrows)]
        for j, col in enumerate(cols):
            for i, v in col.items():
                mat[i][j] = v
    basis = []
    for v in linalg.nullspace(mat, ncols=len(mons)):
        basis.append(Poly(n, {e: c for e, c in zip(mons, v) if c}))
    return basis


def momentum_cocycle(p, g, lam):
    """Cocycle table c[i][j] = lam([e_i,e_j]) - {lam(e_i), lam(e_j)}.

    Returns the table plus two reported checks: the cyclic identity on
    the bilinear extension of c, and whether the Hamiltonian fields of
    lam realize the bracket homomorphically.
    """
    d = g.dim
    if len(lam) != d:
        raise DimensionMismatch("lambda must cover all %d basis elements" % d)
    n = p.n

    def lam_of(vec):
        out = Poly.zero(n)
        for k, c in enumerate(vec):
            if c:
                out = out + lam[k] * c
        return out

    c = [[Poly.zero(n) for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            c[i][j] = lam_of(g.c[i][j]) - pbracket(p, lam[i], lam[j])

    def c_of(u, v):
        out = Poly.zero(n)
        for i in range(d):
            if not u[i]:
                continue
            for j in range(d):
                if v[j]:
                    out = out + c[i][j] * (u[i] * v[j])
        return out

    cyclic_ok = True
    basis = [linalg.unit_vector(i, d) for i in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                s = (c_of(g.c[i][j], basis[k])
                     + c_of(g.c[j][k], basis[i])
                     + c_of(g.c[k][i], basis[j]))
                if not s.is_zero():
                    cyclic_ok = False
    ham_ok = True
    for i in range(d):
        for j in range(d):
            lhs = vf_bracket(hamiltonian(p, lam[i]), hamiltonian(p, lam[j]))
            rhs = hamiltonian(p, lam_of(g.c[i][j]))
            if lhs != rhs:
                ham_ok = False
    return {"table": c, "cyclic_identity": cyclic_ok,
            "hamiltonian_homomorphism": ham_ok}


def _membership(target, gens, degree_bound):
    """Express target = sum h_k * g_k with deg h_k <= degree_bound.

    Returns the list of multipliers h_k or None.
    """
    from .homology import monomials
    n = target.n
    mons = []
    for deg in range(degree_bound + 1):
        mons.extend(monomials(n, deg))
    cols = []
    row_index = {}
    for gk in gens:
        for e in mons:
            prod = Poly(n, {e: Fraction(1)}) * gk
            col = {}
            for ee, v in prod.terms.items():
                if ee not in row_index:
                    row_index[ee] = len(row_index)
                col[row_index[ee]] = v
            cols.append(col)
    for ee in target.terms:
        if ee not in row_index:
            row_index[ee] = len(row_index)
    nrows = len(row_index)
    mat = [[Fraction(0)] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            mat[i][j] = v
    rhs = [Fraction(0)] * nrows
    for ee, v in target.terms.items():
        rhs[row_index[ee]] = v
    sol = linalg.solve(mat, rhs)
    if sol is None:
        return None
    mults = []
    per = len(mons)
    for k in range(len(gens)):
        seg = sol[k * per:(k + 1) * per]
        mults.append(Poly(n, {e: c for e, c in zip(mons, seg) if c}))
    return mults


def _zero_witness(gens, target, n):
    """Rational point where all generators vanish but the target does not."""
    values = [Fraction(0), Fraction(1), Fraction(-1),
              Fraction(2), Fraction(1, 2)]
    if n > 3:
        values = values[:3]
    for pt in product(values, repeat=n):
        if all(g.eval(pt) == 0 for g in gens) and target.eval(pt) != 0:
            return list(pt)
    return None


def ideal_check(p, generators, degree_bound):
    """Bounded-degree check that the generators span a Poisson ideal.

    Each bracket {g_i, x_j} is tested for membership in the ideal with
    multiplier degrees <= degree_bound.  A failed membership is refuted
    outright when a rational common zero of the generators where the
    bracket is nonzero is found; otherwise the verdict is undecided.
    """
    n = p.n
    if not generators:
        return {"verdict": "poisson", "poisson_ideal": True,
                "certificates": [], "failures": []}
    certificates = []
    failures = []
    undecided = False
    for gi, g in enumerate(generators):
        for j in range(n):
            br = pbracket(p, g, Poly.var(n, j))
            if br.is_zero():
                certificates.append({"generator": gi, "coordinate": j,
                                     "multipliers": None})
                continue
            mults = _membership(br, generators, degree_bound)
            if mults is not None:
                certificates.append({"generator": gi, "coordinate": j,
                                     "multipliers": mults})
                continue
            witness = _zero_witness(generators, br, n)
            if witness is not None:
                failures.append({"generator": gi, "coordinate": j,
                                 "witness_point": witness})
            else:
                undecided = True
                failures.append({"generator": gi, "coordinate": j,
                                 "witness_point": None})
    if failures:
        if any(f["witness_point"] is not None for f in failures):
            verdict, flag = "refuted", False
        else:
            verdict, flag = "undecided", None
    else:
        verdict, flag = "poisson", True
    return {"verdict": verdict, "poisson_ideal": flag,
            "certificates": certificates, "failures": failures}
