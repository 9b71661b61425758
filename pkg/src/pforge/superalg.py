"""Dense finite-dimensional oracle for the graded bracket conventions.

Multilinear antisymmetric maps on a small vector space V are stored as
tables over strictly increasing basis tuples; reads expand signs, so
antisymmetry can't be violated by construction.  The compositional
product is the literal shuffle sum, the supercommutator is

    [a, b] = (-1)^((m+1) n) a o b + (-1)^m b o a,

and a o b is taken to vanish when a has arity 0.  Everything here is
exact and deliberately small (dim V <= 8 or so); the module exists to
certify signs and axioms, not to scale.

The second half treats a commutative unital algebra A given by
structure constants: its derivations, the operator space
V = Der(A) (+) A acting on A, the commutator tensor mu on V, and the
check that [mu, .] restricted to the A-multilinear, A-valued maps that
kill A equals minus the Koszul differential.
"""

from fractions import Fraction
from itertools import combinations

from . import linalg


class ArityMismatch(ValueError):
    pass


class SpaceMismatch(ValueError):
    pass


class NonInvolutiveElement(ValueError):
    pass


class BadAlgebra(ValueError):
    """Structure constants fail commutativity, associativity, or unit."""


def _zero_vec(dim):
    return [Fraction(0)] * dim


def _sort_sign(idx):
    """(sign, sorted tuple) for an index tuple; (0, None) on repeats."""
    if len(set(idx)) != len(idx):
        return 0, None
    inv = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx))
              if idx[a] > idx[b])
    return (-1) ** inv, tuple(sorted(idx))


class MultiMap:
    """Antisymmetric multilinear map V^k -> V on basis-index tables."""

    __slots__ = ("dim", "arity", "table")

    def __init__(self, dim, arity, table=None):
        self.dim = dim
        self.arity = arity
        clean = {}
        if table:
            for idx, vec in table.items():
                idx = tuple(idx)
                if len(idx) != arity:
                    raise ArityMismatch("tuple %r for arity %d" % (idx, arity))
                if list(idx) != sorted(set(idx)):
                    raise ValueError("indices %r not strictly increasing" % (idx,))
                vec = [Fraction(x) for x in vec]
                if len(vec) != dim:
                    raise SpaceMismatch("value has wrong length")
                if any(vec):
                    clean[idx] = vec
        self.table = clean

    @classmethod
    def zero(cls, dim, arity):
        return cls(dim, arity)

    @classmethod
    def vector(cls, coords):
        coords = [Fraction(x) for x in coords]
        return cls(len(coords), 0, {(): coords})

    def is_zero(self):
        return not self.table

    def value(self, idx):
        """Signed read at an arbitrary basis-index tuple."""
        sign, key = _sort_sign(idx)
        if not sign:
            return _zero_vec(self.dim)
        vec = self.table.get(key)
        if vec is None:
            return _zero_vec(self.dim)
        return [sign * x for x in vec]

    def eval_first(self, v, rest):
        """Evaluate with an arbitrary vector in the first slot, basis
        indices in the remaining slots."""
        out = _zero_vec(self.dim)
        for i, c in enumerate(v):
            if c:
                w = self.value((i,) + tuple(rest))
                out = [a + c * b for a, b in zip(out, w)]
        return out

    def __add__(self, other):
        if self.dim != other.dim:
            raise SpaceMismatch("dim mismatch")
        if self.arity != other.arity:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise ArityMismatch("cannot add arities %d and %d"
                                % (self.arity, other.arity))
        table = {k: list(v) for k, v in self.table.items()}
        for k, v in other.table.items():
            if k in table:
                table[k] = [a + b for a, b in zip(table[k], v)]
            else:
                table[k] = list(v)
        return MultiMap(self.dim, self.arity, table)

    def scale(self, c):
        c = Fraction(c)
        return MultiMap(self.dim, self.arity,
                        {k: [c * x for x in v] for k, v in self.table.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (self.dim == other.dim and self.table == other.table
                and (self.arity == other.arity
                     or self.is_zero() and other.is_zero()))

    def __repr__(self):
        return "MultiMap(dim=%d, arity=%d, %d entries)" % (
            self.dim, self.arity, len(self.table))


def _subset_sign(positions, total):
    """Sign of the shuffle sending 0..total-1 to (positions, complement)."""
    return (-1) ** sum(p - k for k, p in enumerate(positions))


def comp_product(alpha, beta):
    """Compositional product; shuffle sum, arity m + n - 1."""
    if alpha.dim != beta.dim:
        raise SpaceMismatch("dim mismatch")
    m, n = alpha.arity, beta.arity
    if m < 1:
        raise ArityMismatch("left factor needs arity >= 1")
    dim = alpha.dim
    out_arity = m + n - 1
    table = {}
    for idx in combinations(range(dim), out_arity):
        acc = _zero_vec(dim)
        for pos in combinations(range(out_arity), n):
            inner = tuple(idx[p] for p in pos)
            rest = tuple(idx[p] for p in range(out_arity) if p not in pos)
            sgn = _subset_sign(pos, out_arity)
            v = beta.value(inner)
            if not any(v):
                continue
            w = alpha.eval_first(v, rest)
            acc = [a + sgn * b for a, b in zip(acc, w)]
        if any(acc):
            table[idx] = acc
    return MultiMap(dim, out_arity, table)


def supercomm(alpha, beta):
    """Supercommutator [a,b] = (-1)^((m+1)n) a o b + (-1)^m b o a."""
    if alpha.dim != beta.dim:
        raise SpaceMismatch("dim mismatch")
    m, n = alpha.arity, beta.arity
    out = MultiMap.zero(alpha.dim, max(m + n - 1, 0))
    if m >= 1:
        out = out + comp_product(alpha, beta).scale((-1) ** ((m + 1) * n))
    if n >= 1:
        out = out + comp_product(beta, alpha).scale((-1) ** m)
    return out


def dmu(mu, alpha):
    """Coboundary [mu, .] of an involutive arity-2 element."""
    if mu.arity != 2:
        raise ArityMismatch("mu must have arity 2")
    if not supercomm(mu, mu).is_zero():
        raise NonInvolutiveElement("[mu, mu] != 0")
    return supercomm(mu, alpha)


def random_multimap(dim, arity, rng, bound=3):
    table = {}
    for idx in combinations(range(dim), arity):
        vec = [Fraction(rng.randint(-bound, bound)) for _ in range(dim)]
        table[idx] = vec
    return MultiMap(dim, arity, table)


def super_axiom_report(dim, seed, trials=50, max_arity=3):
    """Random (s1)/(s2) certification; returns a summary dict."""
    import random
    rng = random.Random(seed)
    s1_fail = s2_fail = 0
    for _ in range(trials):
        m = rng.randint(0, max_arity)
        n = rng.randint(0, max_arity)
        k = rng.randint(0, max_arity)
        a = random_multimap(dim, m, rng)
        b = random_multimap(dim, n, rng)
        c = random_multimap(dim, k, rng)
        if supercomm(a, b) != supercomm(b, a).scale((-1) ** (m * n)):
            s1_fail += 1
        lhs = (supercomm(supercomm(a, b), c).scale((-1) ** (m * k))
               + supercomm(supercomm(b, c), a).scale((-1) ** (m * n))
               + supercomm(supercomm(c, a), b).scale((-1) ** (n * k)))
        if not lhs.is_zero():
            s2_fail += 1
    return {"dim": dim, "seed": seed, "trials": trials,
            "s1_failures": s1_fail, "s2_failures": s2_fail,
            "ok": s1_fail == 0 and s2_fail == 0}


# ---------------------------------------------------------------------
# Commutative algebras by structure constants


class FiniteAlgebra:
    """Commutative associative unital algebra on Q^dim.

    mult[i][j] is the coordinate vector of e_i * e_j; unit is the
    coordinate vector of 1.
    """

    __slots__ = ("dim", "mult", "unit")

    def __init__(self, dim, mult, unit):
        self.dim = dim
        self.mult = [[[Fraction(x) for x in mult[i][j]] for j in range(dim)]
                     for i in range(dim)]
        self.unit = [Fraction(x) for x in unit]
        self._validate()

    def _validate(self):
        d = self.dim
        for i in range(d):
            for j in range(d):
                if len(self.mult[i][j]) != d:
                    raise BadAlgebra("structure constant vector length")
                if self.mult[i][j] != self.mult[j][i]:
                    raise BadAlgebra(
                        "not commutative at basis pair (%d,%d)" % (i, j))
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    left = self.multiply(self.mult[i][j],
                                         linalg.unit_vector(k, d))
                    right = self.multiply(linalg.unit_vector(i, d),
                                          self.mult[j][k])
                    if left != right:
                        raise BadAlgebra(
                            "not associative at (%d,%d,%d)" % (i, j, k))
        for i in range(d):
            e = linalg.unit_vector(i, d)
            if self.multiply(self.unit, e) != e:
                raise BadAlgebra("unit fails on basis element %d" % i)

    def multiply(self, u, v):
        d = self.dim
        out = _zero_vec(d)
        for i in range(d):
            if not u[i]:
                continue
            for j in range(d):
                if not v[j]:
                    continue
                c = u[i] * v[j]
                out = [a + c * b for a, b in zip(out, self.mult[i][j])]
        return out

    def left_mult_matrix(self, u):
        """Matrix of multiplication by u, columns = u * e_j."""
        d = self.dim
        cols = [self.multiply(u, linalg.unit_vector(j, d)) for j in range(d)]
        return [[cols[j][i] for j in range(d)] for i in range(d)]


def derivations(A):
    """Basis of Der(A) as dim x dim matrices (Leibniz linear system)."""
    d = self_dim = A.dim
    # unknowns: matrix entries X[r][c], flattened row-major
    rows = []
    for i in range(d):
        for j in range(d):
            prod = A.mult[i][j]
            li = A.left_mult_matrix(linalg.unit_vector(i, d))
            lj = A.left_mult_matrix(linalg.unit_vector(j, d))
            for r in range(d):
                # coefficient of X[r2][c] in: X(e_i e_j) - X(e_i) e_j - e_i X(e_j), row r
                row = [Fraction(0)] * (d * d)
                for c in range(d):
                    row[r * d + c] += prod[c]
                for r2 in range(d):
                    # (e_j * X(e_i))_r picks X[r2][i] with weight lj[r][r2]
                    row[r2 * d + i] -= lj[r][r2]
                    row[r2 * d + j] -= li[r][r2]
                rows.append(row)
    basis = []
    for v in linalg.nullspace(rows, ncols=d * d):
        basis.append([[v[r * d + c] for c in range(d)] for r in range(d)])
    return basis


def _flatten(mat):
    return [x for row in mat for x in row]


def _commutator(a, b):
    return linalg.mat_sub(linalg.mat_mul(a, b), linalg.mat_mul(b, a))


class OperatorSpace:
    """V = Der(A) (+) A realised as operators on A.

    Basis: derivation matrices first, then left multiplications by the
    algebra basis.  Coordinates of an operator are solved exactly.
    """

    def __init__(self, A):
        self.A = A
        self.der = derivations(A)
        self.d_der = len(self.der)
        self.ops = list(self.der) + [
            A.left_mult_matrix(linalg.unit_vector(i, A.dim))
            for i in range(A.dim)]
        self.dim = len(self.ops)
        self._flat = [_flatten(m) for m in self.ops]

    def coords(self, op):
        c = linalg.coordinates_in_basis(self._flat, _flatten(op))
        if c is None:
            raise SpaceMismatch("operator not in Der(A) + A")
        return c

    def mu(self):
        """Commutator tensor on V as an arity-2 MultiMap."""
        table = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                c = self.coords(_commutator(self.ops[i], self.ops[j]))
                if any(c):
                    table[(i, j)] = c
        return MultiMap(self.dim, 2, table)

    def module_action(self, a_idx, v_idx):
        """Coordinates of e_a . (basis op v) = L_{e_a} compose v."""
        la = self.A.left_mult_matrix(linalg.unit_vector(a_idx, self.A.dim))
        return self.coords(linalg.mat_mul(la, self.ops[v_idx]))


def _form_basis(space, n):
    """Basis of the A-valued, A-multilinear maps on V killing A, arity n.

    Each element is a dict: increasing tuple over derivation indices ->
    coordinate vector in A.
    """
    A, d = space.A, space.d_der
    keys = list(combinations(range(d), n))
    nunk = len(keys) * A.dim
    if nunk == 0:
        return [], keys
    pos = {k: i for i, k in enumerate(keys)}

    def read(unknown_row, idx, coeff):
        """Add coeff * omega(idx) (signed) into a constraint row."""
        sign, key = _sort_sign(idx)
        if not sign or key not in pos:
            return
        base = pos[key] * A.dim
        for r in range(A.dim):
            unknown_row[r][base + r] += coeff * sign

    rows = []
    for a in range(A.dim):
        la = A.left_mult_matrix(linalg.unit_vector(a, A.dim))
        for key in keys:
            # omega(a . X_{k0}, rest) - a * omega(key) = 0
            block = [[Fraction(0)] * nunk for _ in range(A.dim)]
            av = space.module_action(a, key[0])
            for t in range(d):
                if av[t]:
                    read(block, (t,) + key[1:], av[t])
            # subtract a * omega(key): multiply value vector by la
            base = pos[key] * A.dim
            for r in range(A.dim):
                for c in range(A.dim):
                    block[r][base + c] -= la[r][c]
            rows.extend(block)
    basis = []
    for v in linalg.nullspace(rows, ncols=nunk):
        table = {}
        for key in keys:
            base = pos[key] * A.dim
            vec = v[base:base + A.dim]
            if any(vec):
                table[key] = vec
        basis.append(table)
    return basis, keys


def _embed(space, table, n):
    """Lift an A-valued derivation form into a MultiMap on V."""
    full = {}
    for key, vec in table.items():
        full[key] = (_zero_vec(space.d_der)
                     + [Fraction(x) for x in vec])
    return MultiMap(space.dim, n, full)


def _koszul_d(space, table, n):
    """Koszul differential of an A-valued form on Der(A), as a table."""
    A, d = space.A, space.d_der
    out = {}
    for key in combinations(range(d), n + 1):
        acc = _zero_vec(A.dim)
        for i in range(n + 1):
            rest = key[:i] + key[i + 1:]
            sign, srt = _sort_sign(rest)
            val = table.get(srt)
            if val is not None:
                xv = linalg.mat_vec(space.der[key[i]],
                                    [sign * x for x in val])
                s = (-1) ** i
                acc = [a + s * b for a, b in zip(acc, xv)]
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                br = space.coords(_commutator(space.der[key[i]],
                                              space.der[key[j]]))
                rest = tuple(key[t] for t in range(n + 1)
                             if t != i and t != j)
                s = (-1) ** (i + j)
                for t in range(d):
                    if not br[t]:
                        continue
                    sign, srt = _sort_sign((t,) + rest)
                    if not sign:
                        continue
                    val = table.get(srt)
                    if val is not None:
                        c = s * br[t] * sign
                        acc = [a + c * x for a, x in zip(acc, val)]
        if any(acc):
            out[key] = acc
    return out


def koszul_check(A, max_grade=2):
    """Verify [mu, w] = -(dw) on the derivation-form subspace of L(V).

    V is Der(A) (+) A acting on A, mu its commutator tensor.  Checked
    on grade 0 (elements of A) and on a computed basis of each graded
    piece up to max_grade; entrywise over the full V table, which also
    certifies that [mu, w] stays inside the subspace.
    """
    space = OperatorSpace(A)
    mu = space.mu()
    if not supercomm(mu, mu).is_zero():
        raise NonInvolutiveElement("commutator tensor not involutive")
    dims = {}
    counterexample = None
    # grade 0: a in A, da(X) = X(a)
    dims[0] = A.dim
    for a in range(A.dim):
        vec = (_zero_vec(space.d_der) + list(linalg.unit_vector(a, A.dim)))
        lhs = supercomm(mu, MultiMap.vector(vec))
        table = {}
        for t in range(space.d_der):
            xv = linalg.mat_vec(space.der[t], linalg.unit_vector(a, A.dim))
            if any(xv):
                table[(t,)] = xv
        rhs = -_embed(space, table, 1)
        if lhs != rhs and counterexample is None:
            counterexample = "grade 0, basis element %d" % a
    for n in range(1, max_grade + 1):
        basis, _ = _form_basis(space, n)
        dims[n] = len(basis)
        for k, table in enumerate(basis):
            lhs = supercomm(mu, _embed(space, table, n))
            rhs = -_embed(space, _koszul_d(space, table, n), n + 1)
            if lhs != rhs and counterexample is None:
                counterexample = "grade %d, basis form %d" % (n, k)
    return {"ok": counterexample is None,
            "dim_algebra": A.dim,
            "dim_der": space.d_der,
            "form_dims": dims,
            "counterexample": counterexample}


def standard_algebra(name):
    """Small named test algebras for the oracle."""
    if name in ("Q", "field"):
        return FiniteAlgebra(1, [[[1]]], [1])
    if name in ("QxQ", "product"):
        mult = [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]
        return FiniteAlgebra(2, mult, [1, 1])
    if name in ("Q[t]/t^3", "truncated3"):
        # basis 1, t, t^2
        z = [0, 0, 0]
        mult = [
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            [[0, 1, 0], [0, 0, 1], z],
            [[0, 0, 1], z, z],
        ]
        return FiniteAlgebra(3, mult, [1, 0, 0])
    if name in ("Q[s,t]/(s^2,t^2)", "dual_pair"):
        # basis 1, s, t, st
        z = [0, 0, 0, 0]
        e = linalg.unit_vector
        mult = [
            [e(0, 4), e(1, 4), e(2, 4), e(3, 4)],
            [e(1, 4), z, e(3, 4), z],
            [e(2, 4), e(3, 4), z, z],
            [e(3, 4), z, z, z],
        ]
        return FiniteAlgebra(4, mult, [1, 0, 0, 0])
    raise KeyError("unknown algebra %r" % name)
