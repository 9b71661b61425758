"""Per-weight block linear algebra for the two differential complexes.

A weight-homogeneous bivector (all coefficients of one total degree d)
splits both complexes into finite blocks:

* multivector side, coboundary [p, .]: weight = coeff degree - grade;
* form side, boundary delta:           weight = coeff degree + grade.

Both differentials shift the weight by d - 2, which is asserted when
blocks are assembled.  Dimensions of (co)homology come out of exact
kernel/rank counts on the block matrices; nothing is ever estimated.
"""

from fractions import Fraction
from itertools import combinations

from . import linalg
from .ratpoly import Poly
from .multivec import (Multivector, all_index_tuples, jacobiator,
                       lichnerowicz_dp, GradeMismatch)
from .forms import Form, delta, NonInvolutive


class NonHomogeneous(ValueError):
    """Bivector coefficients are not all of one total degree."""


LICHNEROWICZ = "lichnerowicz"
CANONICAL = "canonical"


def structure_degree(p):
    """Common total degree of p's coefficients (0 for the zero bivector)."""
    degs = set()
    for c in p.terms.values():
        degs.update(sum(e) for e in c.terms)
    if len(degs) > 1:
        raise NonHomogeneous("coefficient degrees %s" % sorted(degs))
    return degs.pop() if degs else 0


def check_structure(p):
    if p.grade != 2:
        raise GradeMismatch("p must be a bivector")
    d = structure_degree(p)
    if not jacobiator(p).is_zero():
        raise NonInvolutive("bivector is not involutive")
    return d


def monomials(n, deg):
    """All exponent tuples of total degree deg, in canonical order."""
    if deg < 0:
        return []
    out = []
    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)
    if n == 0:
        return [()] if deg == 0 else []
    rec([], deg, n)
    return sorted(out)


def block_basis(n, complex_kind, grade, weight):
    """Ordered (index tuple, exponent tuple) pairs spanning block (k, w)."""
    if complex_kind == LICHNEROWICZ:
        deg = weight + grade
    elif complex_kind == CANONICAL:
        deg = weight - grade
    else:
        raise ValueError("unknown complex %r" % (complex_kind,))
    if deg < 0 or grade < 0 or grade > n:
        return []
    basis = []
    for idx in all_index_tuples(n, grade):
        for e in monomials(n, deg):
            basis.append((idx, e))
    return basis


class WeightBlock:
    """One graded, weighted piece of a complex with its differential."""

    __slots__ = ("grade", "weight", "basis", "target_basis", "matrix")

    def __init__(self, grade, weight, basis, target_basis, matrix):
        self.grade = grade
        self.weight = weight
        self.basis = basis
        self.target_basis = target_basis
        self.matrix = matrix


def _element_from(n, complex_kind, idx, expts):
    coeff = Poly(n, {expts: Fraction(1)})
    if complex_kind == LICHNEROWICZ:
        return Multivector(n, len(idx), {idx: coeff})
    return Form(n, len(idx), {idx: coeff})


def _decompose(obj, target_basis, grade, weight, complex_kind):
    """Column of the block matrix; asserts the image lands in the block."""
    pos = {key: i for i, key in enumerate(target_basis)}
    col = [Fraction(0)] * len(target_basis)
    for idx, c in obj.terms.items():
        for e, v in c.terms.items():
            key = (idx, e)
            if key not in pos:
                raise AssertionError(
                    "differential left the expected (grade, weight) block "
                    "at %r (%s, k=%d, w=%d)" % (key, complex_kind, grade, weight))
            col[pos[key]] = v
    return col


def block_matrix(p, complex_kind, grade, weight):
    """Exact matrix of the differential on block (grade, weight).

    Rows are indexed by the target block basis, columns by the source.
    """
    d = check_structure(p)
    n = p.n
    basis = block_basis(n, complex_kind, grade, weight)
    if complex_kind == LICHNEROWICZ:
        tgrade = grade + 1
    else:
        tgrade = grade - 1
    tweight = weight + d - 2
    target = block_basis(n, complex_kind, tgrade, tweight)
    cols = []
    for idx, e in basis:
        x = _element_from(n, complex_kind, idx, e)
        if complex_kind == LICHNEROWICZ:
            y = lichnerowicz_dp(p, x)
        else:
            y = delta(p, x)
        cols.append(_decompose(y, target, grade, weight, complex_kind))
    matrix = [[cols[j][i] for j in range(len(basis))]
              for i in range(len(target))]
    return WeightBlock(grade, weight, basis, target, matrix)


def _block_rank(p, complex_kind, grade, weight):
    blk = block_matrix(p, complex_kind, grade, weight)
    return len(blk.basis), linalg.rank(blk.matrix)


def poisson_cohomology_dims(p, max_grade, max_weight):
    """dim H^k(w) for the [p, .] complex, per grade and weight.

    Returns a list of row dicts {grade, weight, dim_C, rank_in,
    rank_out, dim_H} in canonical order.  Multivector weights run from
    -grade (grade with constant coefficients) up to max_weight.
    """
    d = check_structure(p)
    shift = d - 2
    rows = []
    for k in range(max_grade + 1):
        for w in range(-k, max_weight + 1):
            dim_c, rank_out = _block_rank(p, LICHNEROWICZ, k, w)
            if k == 0:
                rank_in = 0
            else:
                _, rank_in = _block_rank(p, LICHNEROWICZ, k - 1, w - shift)
            rows.append({"grade": k, "weight": w, "dim_C": dim_c,
                         "rank_in": rank_in, "rank_out": rank_out,
                         "dim_H": dim_c - rank_out - rank_in})
    return rows


def canonical_homology_dims(p, max_grade, max_weight):
    """dim H_k(w) for the delta complex, per grade and weight.

    Form weights start at the grade (constant coefficients).
    """
    d = check_structure(p)
    shift = d - 2
    rows = []
    for k in range(max_grade + 1):
        for w in range(k, max_weight + 1):
            dim_c, rank_out = _block_rank(p, CANONICAL, k, w)
            _, rank_in = _block_rank(p, CANONICAL, k + 1, w - shift)
            rows.append({"grade": k, "weight": w, "dim_C": dim_c,
                         "rank_in": rank_in, "rank_out": rank_out,
                         "dim_H": dim_c - rank_out - rank_in})
    return rows
