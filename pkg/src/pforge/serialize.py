"""JSON wire formats and canonical printing.

Multivectors and forms travel as

    {"n": 3, "grade": 2, "terms": [{"idx": [0, 1], "coeff": "x2"}]}

with forms additionally tagged "kind": "form".  Coefficients are
polynomial grammar strings; index tuples may arrive unsorted, in which
case the permutation sign is folded into the coefficient.  Printing is
canonical (sorted index tuples, graded-lex term order inside each
coefficient), so parse/print round-trips are exact and byte-stable.
"""

import json
from fractions import Fraction

from .ratpoly import Poly, parse_poly, PolyParseError
from .multivec import Multivector, GradeMismatch
from .forms import Form


class InputError(ValueError):
    """Malformed wire data (shape, types, unknown fields)."""


def _normalize_idx(idx, coeff):
    """Sort an index tuple, folding the permutation sign into coeff."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return None, None
    inv = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx))
              if idx[a] > idx[b])
    return tuple(sorted(idx)), coeff * ((-1) ** inv)


def _terms_from_json(obj, n, grade):
    terms = {}
    for entry in obj.get("terms", []):
        if not isinstance(entry, dict) or \
                set(entry) - {"idx", "coeff"}:
            raise InputError("term entries need exactly idx and coeff")
        idx = entry.get("idx", [])
        if not isinstance(idx, list) or \
                not all(isinstance(i, int) for i in idx):
            raise InputError("idx must be a list of integers")
        if len(idx) != grade:
            raise InputError("idx %r does not match grade %d" % (idx, grade))
        try:
            coeff = parse_poly(str(entry.get("coeff", "0")), n)
        except PolyParseError as exc:
            raise InputError("bad coefficient: %s" % exc)
        key, coeff = _normalize_idx(idx, coeff)
        if key is None:
            continue
        terms[key] = terms.get(key, Poly.zero(n)) + coeff
    return terms


def _check_header(obj):
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object")
    extra = set(obj) - {"n", "grade", "terms", "kind"}
    if extra:
        raise InputError("unknown fields: %s" % ", ".join(sorted(extra)))
    n, grade = obj.get("n"), obj.get("grade")
    if not isinstance(n, int) or n < 0:
        raise InputError("n must be a nonnegative integer")
    if not isinstance(grade, int) or grade < 0:
        raise InputError("grade must be a nonnegative integer")
    return n, grade


def multivector_from_json(obj):
    n, grade = _check_header(obj)
    if obj.get("kind", "multivector") != "multivector":
        raise InputError("expected a multivector, got %r" % obj.get("kind"))
    try:
        return Multivector(n, grade, _terms_from_json(obj, n, grade))
    except (GradeMismatch, IndexError, ValueError) as exc:
        raise InputError(str(exc))


def form_from_json(obj):
    n, grade = _check_header(obj)
    if obj.get("kind") != "form":
        raise InputError('forms require "kind": "form"')
    try:
        return Form(n, grade, _terms_from_json(obj, n, grade))
    except (GradeMismatch, IndexError, ValueError) as exc:
        raise InputError(str(exc))


def multivector_to_json(u):
    return {"n": u.n, "grade": u.grade,
            "terms": [{"idx": list(idx), "coeff": str(c)}
                      for idx, c in u.sorted_terms()]}


def form_to_json(a):
    out = {"kind": "form", "n": a.n, "grade": a.grade,
           "terms": [{"idx": list(idx), "coeff": str(c)}
                     for idx, c in a.sorted_terms()]}
    return out


def fraction_from_json(x):
    try:
        return Fraction(str(x))
    except (ValueError, ZeroDivisionError):
        raise InputError("bad rational number %r" % (x,))


def matrix_from_json(rows, what="matrix"):
    if not isinstance(rows, list) or \
            not all(isinstance(r, list) for r in rows):
        raise InputError("%s must be a list of rows" % what)
    return [[fraction_from_json(x) for x in r] for r in rows]


def rows_from_json(rows, what="subspace"):
    return matrix_from_json(rows, what)


def algebra_from_json(obj):
    from .ncalg import AlgebraSC, BadAlgebra
    if not isinstance(obj, dict) or set(obj) - {"dim", "mult", "unit"}:
        raise InputError("algebra needs dim, mult and optional unit")
    dim = obj.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise InputError("dim must be a nonnegative integer")
    mult = obj.get("mult")
    try:
        table = [[[fraction_from_json(x) for x in mult[i][j]]
                  for j in range(dim)] for i in range(dim)]
    except (TypeError, IndexError, KeyError):
        raise InputError("mult must be a dim x dim table of vectors")
    unit = obj.get("unit")
    if unit is not None:
        unit = [fraction_from_json(x) for x in unit]
    return AlgebraSC(dim, table, unit)


def finite_algebra_from_json(obj):
    """Commutative-unital variant used by the superalgebra oracle."""
    from .superalg import FiniteAlgebra
    if not isinstance(obj, dict) or set(obj) - {"dim", "mult", "unit"}:
        raise InputError("algebra needs dim, mult and unit")
    dim = obj.get("dim")
    if not isinstance(dim, int) or dim <= 0:
        raise InputError("dim must be a positive integer")
    try:
        table = [[[fraction_from_json(x) for x in obj["mult"][i][j]]
                  for j in range(dim)] for i in range(dim)]
    except (TypeError, IndexError, KeyError):
        raise InputError("mult must be a dim x dim table of vectors")
    unit = obj.get("unit")
    if unit is None:
        raise InputError("the oracle needs a designated unit")
    return FiniteAlgebra(dim, table, [fraction_from_json(x) for x in unit])


def liealg_from_json(obj):
    from .analysis import LieAlgebraSC
    if not isinstance(obj, dict) or set(obj) - {"dim", "c"}:
        raise InputError("lie algebra needs dim and c")
    dim = obj.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise InputError("dim must be a nonnegative integer")
    try:
        c = [[[fraction_from_json(x) for x in obj["c"][i][j]]
              for j in range(dim)] for i in range(dim)]
    except (TypeError, IndexError, KeyError):
        raise InputError("c must be a dim x dim table of vectors")
    return LieAlgebraSC(dim, c)


def point_from_text(text, n):
    parts = [p for p in str(text).split(",") if p.strip()]
    if len(parts) != n:
        raise InputError("point needs %d coordinates" % n)
    return [fraction_from_json(p.strip()) for p in parts]


def polys_from_json(items, n):
    if not isinstance(items, list):
        raise InputError("expected a list of polynomial strings")
    out = []
    for s in items:
        try:
            out.append(parse_poly(str(s), n))
        except PolyParseError as exc:
            raise InputError("bad polynomial %r: %s" % (s, exc))
    return out


def dump(obj):
    """Canonical JSON bytes: sorted keys, stable separators."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def str_fractions(x):
    """Recursively stringify Fractions for JSON output."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, list):
        return [str_fractions(v) for v in x]
    if isinstance(x, tuple):
        return [str_fractions(v) for v in x]
    if isinstance(x, dict):
        return {str(k): str_fractions(v) for k, v in x.items()}
    if isinstance(x, Poly):
        return str(x)
    if isinstance(x, Multivector):
        return multivector_to_json(x)
    if isinstance(x, Form):
        return form_to_json(x)
    return x
