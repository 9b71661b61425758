"""Batch command-line front end.

One job per invocation: parse inputs, call the library, print a
deterministic report.  Exit codes: 0 success, 1 malformed input,
2 violated mathematical precondition (with a machine-readable kind).
"""

import argparse
import json
import os
import sys

from . import serialize
from .serialize import InputError, dump, str_fractions
from .ratpoly import (Poly, parse_poly, PolyParseError, DimensionMismatch)
from .multivec import jacobiator, schouten, lichnerowicz_dp, GradeMismatch
from .forms import delta, form_bracket, NonInvolutive
from .symplectic import (make_context, DegenerateBivector, OddDimension,
                         NotConstantCoefficient)
from .homology import (poisson_cohomology_dims, canonical_homology_dims,
                       NonHomogeneous, LICHNEROWICZ, CANONICAL)
from .analysis import (rank_at, integrability_at, is_casimir, casimir_basis,
                       momentum_cocycle, ideal_check, BadLieAlgebra)
from .superalg import (super_axiom_report, koszul_check, standard_algebra,
                       BadAlgebra as BadOracleAlgebra, NonInvolutiveElement)
from .ncalg import (validate_algebra, derivations, submanifold_check,
                    quotient_check, bott_quotient, bott_forms, bott_integral,
                    BadAlgebra, NotAnIdeal, NotASubalgebra)

_PRECONDITION_KINDS = [
    (DegenerateBivector, "degenerate-bivector"),
    (OddDimension, "odd-dimension"),
    (NotConstantCoefficient, "non-constant-coefficient"),
    (NonInvolutive, "non-involutive"),
    (NonInvolutiveElement, "non-involutive"),
    (NonHomogeneous, "non-homogeneous"),
    (NotAnIdeal, "not-an-ideal"),
    (NotASubalgebra, "not-a-subalgebra"),
    (BadAlgebra, "bad-algebra"),
    (BadOracleAlgebra, "bad-algebra"),
    (BadLieAlgebra, "bad-lie-algebra"),
]

_INPUT_KINDS = [
    (InputError, "bad-input"),
    (PolyParseError, "parse-error"),
    (DimensionMismatch, "dimension-mismatch"),
    (GradeMismatch, "grade-mismatch"),
]


def _load_json(source, what="input"):
    """Inline JSON text or a path to a JSON file."""
    if source is None:
        raise InputError("missing %s" % what)
    text = source
    if os.path.exists(source):
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("%s is not valid JSON: %s" % (what, exc))


def _bivector(obj):
    p = serialize.multivector_from_json(obj)
    if p.grade != 2:
        raise InputError("expected a bivector (grade 2), got grade %d"
                         % p.grade)
    return p


def _need(obj, key, what):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError("input object needs field %r (%s)" % (key, what))
    return obj[key]


def _emit(args, payload):
    payload = str_fractions(payload)
    if args.seed is not None:
        payload.setdefault("seed", args.seed)
    if args.format == "text":
        for key in sorted(payload):
            sys.stdout.write("%s: %s\n"
                             % (key, json.dumps(payload[key], sort_keys=True)))
    else:
        sys.stdout.write(dump(payload))
    return 0


# -- command handlers -------------------------------------------------


def cmd_check(args):
    p = _bivector(_load_json(args.input))
    j = jacobiator(p)
    return _emit(args, {"jacobiator_zero": j.is_zero(), "jacobiator": j})


def cmd_schouten(args):
    obj = _load_json(args.input)
    u = serialize.multivector_from_json(_need(obj, "u", "multivector"))
    v = serialize.multivector_from_json(_need(obj, "v", "multivector"))
    return _emit(args, {"result": schouten(u, v)})


def cmd_dp(args):
    obj = _load_json(args.input)
    p = _bivector(_need(obj, "p", "bivector"))
    u = serialize.multivector_from_json(_need(obj, "u", "multivector"))
    return _emit(args, {"result": lichnerowicz_dp(p, u)})


def cmd_delta(args):
    obj = _load_json(args.input)
    p = _bivector(_need(obj, "p", "bivector"))
    a = serialize.form_from_json(_need(obj, "form", "form"))
    return _emit(args, {"result": delta(p, a)})


def cmd_bracket(args):
    obj = _load_json(args.input)
    p = _bivector(_need(obj, "p", "bivector"))
    a = serialize.form_from_json(_need(obj, "a", "form"))
    b = serialize.form_from_json(_need(obj, "b", "form"))
    return _emit(args, {"result": form_bracket(p, a, b)})


def cmd_star(args):
    obj = _load_json(args.input)
    p = _bivector(_need(obj, "p", "bivector"))
    a = serialize.form_from_json(_need(obj, "form", "form"))
    ctx = make_context(p)
    return _emit(args, {"result": ctx.star(a),
                        "volume": ctx.vol})


def cmd_cohomology(args):
    p = _bivector(_load_json(args.input))
    if args.complex == "lich":
        rows = poisson_cohomology_dims(p, args.max_grade, args.max_weight)
    else:
        rows = canonical_homology_dims(p, args.max_grade, args.max_weight)
    return _emit(args, {"complex": args.complex, "rows": rows})


def cmd_rank(args):
    p = _bivector(_load_json(args.input))
    point = serialize.point_from_text(args.point, p.n)
    return _emit(args, rank_at(p, point).as_dict())


def cmd_casimir(args):
    p = _bivector(_load_json(args.input))
    if args.function is not None:
        try:
            f = parse_poly(args.function, p.n)
        except PolyParseError as exc:
            raise InputError(str(exc))
        return _emit(args, {"casimir": is_casimir(p, f)})
    if args.max_degree is None:
        raise InputError("need --function or --max-degree")
    basis = casimir_basis(p, args.max_degree)
    return _emit(args, {"max_degree": args.max_degree,
                        "basis": [str(f) for f in basis]})


def cmd_integrable(args):
    p = _bivector(_load_json(args.input))
    point = serialize.point_from_text(args.point, p.n)
    return _emit(args, {"point": point,
                        "integrable": integrability_at(p, point)})


def cmd_cocycle(args):
    p = _bivector(_load_json(args.input))
    g = serialize.liealg_from_json(_load_json(args.liealg, "lie algebra"))
    lam_raw = _load_json(args.lam, "lambda")
    lam = serialize.polys_from_json(lam_raw, p.n)
    if len(lam) != g.dim:
        raise InputError("lambda must list %d polynomials" % g.dim)
    rep = momentum_cocycle(p, g, lam)
    return _emit(args, {
        "table": [[str(c) for c in row] for row in rep["table"]],
        "cyclic_identity": rep["cyclic_identity"],
        "hamiltonian_homomorphism": rep["hamiltonian_homomorphism"]})


def cmd_ideal(args):
    p = _bivector(_load_json(args.input))
    gens = serialize.polys_from_json(_load_json(args.gens, "generators"),
                                     p.n)
    rep = ideal_check(p, gens, args.degree)
    out = {"verdict": rep["verdict"], "poisson_ideal": rep["poisson_ideal"],
           "failures": rep["failures"],
           "certificates": [
               {"generator": c["generator"], "coordinate": c["coordinate"],
                "multipliers": None if c["multipliers"] is None
                else [str(h) for h in c["multipliers"]]}
               for c in rep["certificates"]]}
    return _emit(args, out)


def cmd_oracle_super(args):
    seed = args.seed if args.seed is not None else 0
    rep = super_axiom_report(args.dim, seed, trials=args.trials)
    return _emit(args, rep)


def cmd_oracle_koszul(args):
    src = args.algebra
    try:
        A = standard_algebra(src)
    except KeyError:
        A = serialize.finite_algebra_from_json(_load_json(src, "algebra"))
    return _emit(args, koszul_check(A))


def _ncalg_algebra(args):
    return serialize.algebra_from_json(_load_json(args.algebra, "algebra"))


def cmd_ncalg_der(args):
    A = _ncalg_algebra(args)
    rep = derivations(A)
    out = validate_algebra(A)
    out.update({"der_dim": len(rep["basis"]), "der_basis": rep["basis"],
                "inner_dim": len(rep["inner"]),
                "inner_basis": rep["inner"]})
    return _emit(args, out)


def cmd_ncalg_submanifold(args):
    A = _ncalg_algebra(args)
    ideal = serialize.rows_from_json(_load_json(args.ideal, "ideal"), "ideal")
    rep = submanifold_check(A, ideal)
    return _emit(args, {"submanifold": rep["submanifold"],
                        "rank_r_I": rep["rank_r_I"],
                        "dim_der_quotient": rep["dim_der_quotient"],
                        "dim_der_I": len(rep["der_I"]),
                        "dim_der_I_0": len(rep["der_I_0"]),
                        "r_I": rep["r_I"]})


def cmd_ncalg_quotient(args):
    A = _ncalg_algebra(args)
    sub = serialize.rows_from_json(_load_json(args.sub, "subalgebra"),
                                   "subalgebra")
    rep = quotient_check(A, sub)
    return _emit(args, {"q1": rep["q1"], "q2": rep["q2"], "q3": rep["q3"],
                        "quotient_manifold_algebra":
                            rep["quotient_manifold_algebra"],
                        "dim_Q_B": len(rep["Q_B"]),
                        "dim_V_B": len(rep["V_B"]),
                        "dim_der_B": len(rep["der_B"]),
                        "Q_B": rep["Q_B"], "V_B": rep["V_B"],
                        "invariants_of_V_B": rep["invariants_of_V_B"]})


def cmd_ncalg_bott_quotient(args):
    g = serialize.liealg_from_json(_load_json(args.liealg, "lie algebra"))
    sub = serialize.rows_from_json(_load_json(args.sub, "subalgebra"),
                                   "subalgebra")
    table = bott_quotient(g, sub)
    return _emit(args, {"module_basis": table.module_basis,
                        "acting_basis": table.acting_basis,
                        "matrices": table.matrices,
                        "flat": table.flat(),
                        "curvature": {"%d,%d" % k: v for k, v
                                      in table.curvature.items()}})


def cmd_ncalg_bott_forms(args):
    g = serialize.liealg_from_json(_load_json(args.liealg, "lie algebra"))
    sub = serialize.rows_from_json(_load_json(args.sub, "subalgebra"),
                                   "subalgebra")
    rep = bott_forms(g, sub)
    table = rep["connection"]
    return _emit(args, {"module_basis": table.module_basis,
                        "acting_basis": table.acting_basis,
                        "matrices": table.matrices,
                        "flat": rep["flat"]})


def cmd_ncalg_bott_integral(args):
    A = _ncalg_algebra(args)
    dist = _load_json(args.dist, "distribution")
    if not isinstance(dist, list):
        raise InputError("distribution must be a list of matrices")
    ops = [serialize.matrix_from_json(m, "distribution element")
           for m in dist]
    ideal = serialize.rows_from_json(_load_json(args.ideal, "ideal"), "ideal")
    rep = bott_integral(A, ops, ideal)
    return _emit(args, rep)


# -- parser -----------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", help="inline JSON or a file path")
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized commands; echoed in output")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker bound (results are order-independent)")

    parser = argparse.ArgumentParser(
        prog="pforge",
        description="Exact Poisson-structure calculations on polynomial "
                    "coefficients, plus finite-dimensional algebra oracles.")
    subs = parser.add_subparsers(dest="command", required=True)

    def sub(name, func, **kwargs):
        sp = subs.add_parser(name, parents=[common], **kwargs)
        sp.set_defaults(func=func)
        return sp

    sub("check", cmd_check, help="jacobiator of a bivector")
    sub("schouten", cmd_schouten, help="graded bracket of two multivectors")
    sub("dp", cmd_dp, help="coboundary [p, u]")
    sub("delta", cmd_delta, help="canonical boundary of a form")
    sub("bracket", cmd_bracket, help="graded bracket of two forms")
    sub("star", cmd_star, help="symplectic star of a form")

    sp = sub("cohomology", cmd_cohomology, help="per-weight dimensions")
    sp.add_argument("--complex", choices=["lich", "can"], required=True)
    sp.add_argument("--max-grade", type=int, required=True)
    sp.add_argument("--max-weight", type=int, required=True)

    sp = sub("rank", cmd_rank, help="pointwise rank report")
    sp.add_argument("--point", required=True)

    sp = sub("casimir", cmd_casimir, help="Casimir test or kernel search")
    sp.add_argument("--function", help="polynomial to test")
    sp.add_argument("--max-degree", type=int, help="search degree bound")

    sp = sub("integrable", cmd_integrable, help="pointwise involutivity")
    sp.add_argument("--point", required=True)

    sp = sub("cocycle", cmd_cocycle, help="momentum-map cocycle table")
    sp.add_argument("--liealg", required=True)
    sp.add_argument("--lambda", dest="lam", required=True,
                    help="JSON list of polynomials, one per basis element")

    sp = sub("ideal", cmd_ideal, help="bounded-degree Poisson ideal check")
    sp.add_argument("--gens", required=True)
    sp.add_argument("--degree", type=int, required=True)

    oracle = subs.add_parser("oracle", help="finite-dimensional oracles")
    osubs = oracle.add_subparsers(dest="oracle_command", required=True)
    sp = osubs.add_parser("super", parents=[common])
    sp.add_argument("--dim", type=int, default=3)
    sp.add_argument("--trials", type=int, default=50)
    sp.set_defaults(func=cmd_oracle_super)
    sp = osubs.add_parser("koszul", parents=[common])
    sp.add_argument("--algebra", required=True,
                    help="algebra JSON, a path, or a named test algebra")
    sp.set_defaults(func=cmd_oracle_koszul)

    nc = subs.add_parser("ncalg", help="structure-constant calculus")
    nsubs = nc.add_subparsers(dest="ncalg_command", required=True)

    def ncsub(name, func, *flags):
        sp = nsubs.add_parser(name, parents=[common])
        for flag in flags:
            sp.add_argument(flag, required=True)
        sp.set_defaults(func=func)
        return sp

    ncsub("der", cmd_ncalg_der, "--algebra")
    ncsub("submanifold", cmd_ncalg_submanifold, "--algebra", "--ideal")
    ncsub("quotient", cmd_ncalg_quotient, "--algebra", "--sub")
    ncsub("bott-quotient", cmd_ncalg_bott_quotient, "--liealg", "--sub")
    ncsub("bott-forms", cmd_ncalg_bott_forms, "--liealg", "--sub")
    ncsub("bott-integral", cmd_ncalg_bott_integral,
          "--algebra", "--dist", "--ideal")
    return parser


def _error(args, kind, message, code):
    payload = {"error": {"kind": kind, "message": str(message)}}
    fmt = getattr(args, "format", "json") if args is not None else "json"
    if fmt == "text":
        sys.stdout.write("error: %s: %s\n" % (kind, message))
    else:
        sys.stdout.write(dump(payload))
    return code


def main(argv=None):
    os.environ.setdefault("PFORGE_COLOR", "0")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; that slot is reserved for
        # violated mathematical preconditions here.
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except tuple(e for e, _ in _INPUT_KINDS) as exc:
        kind = next(k for e, k in _INPUT_KINDS if isinstance(exc, e))
        return _error(args, kind, exc, 1)
    except OSError as exc:
        return _error(args, "io-error", exc, 1)
    except tuple(e for e, _ in _PRECONDITION_KINDS) as exc:
        kind = next(k for e, k in _PRECONDITION_KINDS if isinstance(exc, e))
        return _error(args, kind, exc, 2)


if __name__ == "__main__":
    sys.exit(main())
