"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial in n variables x0..x{n-1} is a map from exponent tuples to
nonzero Fraction coefficients.  All operations are pure; instances are
treated as immutable once built.  Canonical term order everywhere is
graded lexicographic, which makes printing (and therefore CLI output)
deterministic.
"""

import re
from fractions import Fraction


class DimensionMismatch(ValueError):
    """Operands live over different ambient variable counts."""


class PolyParseError(ValueError):
    """Input text does not conform to the polynomial grammar."""


def _grlex_key(expts):
    return (sum(expts), tuple(-e for e in expts))


class Poly:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for expts, coeff in terms.items():
                c = Fraction(coeff)
                if c == 0:
                    continue
                if len(expts) != n:
                    raise DimensionMismatch(
                        "monomial %r has wrong length for n=%d" % (expts, n))
                clean[tuple(expts)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def const(cls, n, c):
        return cls(n, {(0,) * n: Fraction(c)})

    @classmethod
    def var(cls, n, i, power=1):
        if not 0 <= i < n:
            raise IndexError("variable index %d out of range for n=%d" % (i, n))
        e = [0] * n
        e[i] = power
        return cls(n, {tuple(e): Fraction(1)})

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.n, Fraction(0))

    def degree(self):
        """Total degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise DimensionMismatch(
                "variable counts differ: %d vs %d" % (self.n, other.n))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.n, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Poly(self.n, terms)

    def __neg__(self):
        return Poly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.n, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(self.n, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Poly(self.n, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.n, other)
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- calculus -----------------------------------------------------

    def diff(self, i):
        """Formal partial derivative with respect to x_i."""
        if not 0 <= i < self.n:
            raise IndexError("variable index %d out of range for n=%d" % (i, self.n))
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = terms.get(tuple(ne), Fraction(0)) + c * e[i]
        return Poly(self.n, terms)

    def eval(self, point):
        """Exact evaluation at a rational point."""
        if len(point) != self.n:
            raise DimensionMismatch(
                "point length %d != n=%d" % (len(point), self.n))
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for xi, ei in zip(pt, e):
                v *= xi ** ei
            total += v
        return total

    # -- presentation -------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: _grlex_key(ec[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = ["x%d^%d" % (i, k) if k > 1 else "x%d" % i
                       for i, k in enumerate(e) if k > 0]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "Poly(%d, %s)" % (self.n, str(self))


_TERM_RE = re.compile(
    r"""(?P<sign>[+-])?
        (?P<coeff>\d+(?:/\d+)?)?
        \*?
        (?P<factors>(?:x\d+(?:\^\d+)?\*?)*)
        $""",
    re.VERBOSE,
)
_FACTOR_RE = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_poly(text, n):
    """Parse the polynomial text grammar.

    Grammar: term = [sign] [int['/'int] ['*']] factor*;
    factor = 'x'index['^'exp]; terms joined by '+'/'-'. Whitespace is
    ignored; the unicode minus sign is accepted as '-'.
    """
    s = text.replace("−", "-").replace(" ", "").replace("\t", "")
    if not s:
        raise PolyParseError("empty polynomial text")
    # split into signed terms, keeping the signs
    chunks = re.split(r"(?=[+-])", s)
    chunks = [c for c in chunks if c]
    result = Poly.zero(n)
    offset = 0
    for chunk in chunks:
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coeff") is None and not m.group("factors")):
            raise PolyParseError(
                "malformed term %r at offset %d" % (chunk, offset))
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("sign") == "-":
            coeff = -coeff
        expts = [0] * n
        consumed = 0
        for fm in _FACTOR_RE.finditer(m.group("factors")):
            idx = int(fm.group(1))
            if idx >= n:
                raise PolyParseError(
                    "variable x%d out of range for n=%d" % (idx, n))
            expts[idx] += int(fm.group(2)) if fm.group(2) else 1
            consumed = fm.end()
        leftover = m.group("factors")[consumed:].strip("*")
        if leftover:
            raise PolyParseError(
                "malformed factor %r at offset %d" % (leftover, offset))
        result = result + Poly(n, {tuple(expts): coeff})
        offset += len(chunk)
    return result
