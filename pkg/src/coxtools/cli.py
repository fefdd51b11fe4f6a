"""Command-line front end: one JSON document in, one JSON document out.

Every subcommand reads a JSON file (either a raw payload or a fixture
wrapper carrying a ``payload`` field), computes, and prints canonical
JSON: sorted keys, and every integer rendered as a decimal string so
arbitrary precision survives transport.  Exit codes: 0 success (a found
violation is a success), 1 domain error, 2 malformed input.
"""

import argparse
import json
import sys
from fractions import Fraction

from .cones import Cone, NonPointedError, NotFullDimensionalError
from .cyclotomic import CycloNum
from .gradings import (AbGroup, GradedEndo, GradedRing, ImagesNotHomogeneousError,
                       NotHomogeneousError, NotHomogeneousShearError,
                       DependsOnTargetError, SingularLinearError, NotElementaryError,
                       quadric_grading, shear_family, shear_map, wildness_certificate,
                       NotZeta)
from .monoids import (AffineMonoid, Beta, DepthInsufficientError, DivisorTheory,
                      MonoidHom, NotSaturatedError, ViolationStar,
                      ViolationStarStar, divisor_theory, extend_embedding,
                      is_saturated, verify_divisor_axioms, DEFAULT_DEPTH)
from .polynomials import (PolyMap, PolyParseError, compose_chain, jacobian,
                          parse_poly, poly_det)
from .quotients import (ClosureCapExceededError, NotInvertibleError, DEFAULT_CAP,
                        close_group, quotient_report, reynolds_invariants)
from .toric import (DimensionMismatchError, NotInDualConeError, cox_data,
                    pullback, verify_lift)

DOMAIN_ERRORS = (NonPointedError, NotFullDimensionalError, NotSaturatedError,
                 DepthInsufficientError, PolyParseError, NotInDualConeError,
                 DimensionMismatchError, ClosureCapExceededError,
                 NotInvertibleError, NotHomogeneousError,
                 ImagesNotHomogeneousError, NotHomogeneousShearError,
                 DependsOnTargetError, SingularLinearError, NotElementaryError,
                 ZeroDivisionError, ValueError)


class InputError(Exception):
    pass


# -- canonical encoding -------------------------------------------------------

def encode(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else \
            f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, dict):
        return {k: encode(v) for k, v in value.items()}
    if value is None or isinstance(value, str):
        return value
    raise TypeError(f"cannot encode {type(value)!r}")


def emit(doc, pretty=False):
    if pretty:
        text = json.dumps(encode(doc), sort_keys=True, indent=2)
    else:
        text = json.dumps(encode(doc), sort_keys=True, separators=(",", ":"))
    sys.stdout.write(text + "\n")


# -- input decoding -----------------------------------------------------------

def _as_int(x):
    if isinstance(x, bool):
        raise InputError("expected an integer")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x)
        except ValueError as exc:
            raise InputError(f"bad integer {x!r}") from exc
    raise InputError(f"expected an integer, got {type(x).__name__}")


def _as_fraction(x):
    if isinstance(x, bool):
        raise InputError("expected a number")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError as exc:
            raise InputError(f"bad rational {x!r}") from exc
    raise InputError(f"expected a rational, got {type(x).__name__}")


def _int_vector(x):
    if not isinstance(x, list):
        raise InputError("expected a vector (JSON array)")
    return tuple(_as_int(e) for e in x)


def _int_matrix(x):
    if not isinstance(x, list) or not x:
        raise InputError("expected a nonempty matrix (array of arrays)")
    return tuple(_int_vector(row) for row in x)


def _fraction_matrix(x):
    if not isinstance(x, list) or not x:
        raise InputError("expected a nonempty matrix (array of arrays)")
    return tuple(tuple(_as_fraction(e) for e in row) for row in x)


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if isinstance(doc, dict) and "payload" in doc:
        return doc["payload"]
    return doc


def _require(doc, key):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"missing required field {key!r}")
    return doc[key]


def _decode_monoid(doc):
    rank = _as_int(_require(doc, "ambient_rank"))
    gens = _int_matrix(_require(doc, "generators"))
    basis = _int_matrix(doc["group_basis"]) if doc.get("group_basis") else None
    return AffineMonoid(rank, gens, group_basis=basis)


def _decode_cone(doc):
    rank = _as_int(_require(doc, "ambient_rank"))
    rays = _int_matrix(_require(doc, "rays"))
    lattice = _int_matrix(doc["lattice"]) if doc.get("lattice") else None
    return Cone(rank, rays, lattice=lattice)


def _decode_grading(doc):
    if doc is None:
        return quadric_grading()
    group = AbGroup(_as_int(_require(doc, "free_rank")),
                    tuple(_as_int(d) for d in doc.get("torsion", [])))
    degs = []
    for d in _require(doc, "var_degrees"):
        degs.append(group.element(tuple(_as_int(x) for x in d.get("free", [])),
                                  tuple(_as_int(x) for x in d.get("torsion", []))))
    return GradedRing(group, tuple(degs))


def _var_names(doc, count, prefix="y"):
    names = doc.get("var_names")
    if names is None:
        return [f"{prefix}{i + 1}" for i in range(count)]
    if not isinstance(names, list) or len(names) != count:
        raise InputError("var_names must list one name per variable")
    return [str(n) for n in names]


def _decode_cyclo_entry(value, conductor):
    if isinstance(value, list):
        return CycloNum(conductor, tuple(_as_fraction(c) for c in value))
    return CycloNum.rational(conductor, _as_fraction(value))


def _decode_group(doc):
    dim = _as_int(_require(doc, "dim"))
    conductor = _as_int(_require(doc, "conductor"))
    gens = []
    for gmat in _require(doc, "generators"):
        rows = []
        for row in gmat:
            rows.append(tuple(_decode_cyclo_entry(e, conductor) for e in row))
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise InputError("group generators must be dim x dim matrices")
        gens.append(tuple(rows))
    return conductor, gens


def _grading_doc(ring):
    return {
        "free_rank": ring.group.free_rank,
        "torsion": list(ring.group.torsion),
        "var_degrees": [{"free": list(d.free), "torsion": list(d.torsion)}
                        for d in ring.var_degrees],
    }


def _render_invariant(form, names):
    parts = []
    for expo in sorted(form, key=lambda e: (sum(e), e), reverse=True):
        factors = []
        for i, k in enumerate(expo):
            if k == 1:
                factors.append(names[i])
            elif k > 1:
                factors.append(f"{names[i]}^{k}")
        mono = "*".join(factors) if factors else "1"
        coeff = form[expo]
        if coeff.is_one():
            parts.append(mono)
        else:
            parts.append(f"({coeff.render()})*{mono}")
    return " + ".join(parts)


# -- subcommands ----------------------------------------------------------------

def cmd_parse_poly(doc, args):
    names = _require(doc, "var_names")
    p = parse_poly(_require(doc, "text"), names)
    return {
        "canonical": p.render(names),
        "num_terms": len(p.terms),
        "terms": [{"coefficient": c, "exponents": list(e)} for e, c in p.sorted_terms()],
    }


def cmd_saturate(doc, args):
    m = _decode_monoid(doc)
    sat, witness = is_saturated(m)
    return {"saturated": sat, "witness": list(witness) if witness else None}


def cmd_divisor_theory(doc, args):
    m = _decode_monoid(doc)
    dt = divisor_theory(m)
    return {
        "free_rank": dt.free_rank,
        "group_basis": [list(r) for r in dt.lattice_basis],
        "functionals": [list(r) for r in dt.functionals],
        "ambient_functionals": [list(r) for r in dt.ambient_functionals()],
        "images": [list(dt.image(g)) for g in m.generators],
    }


def cmd_check_axioms(doc, args):
    m = _decode_monoid(_require(doc, "monoid"))
    depth = args.depth or _as_int(doc.get("depth", 6))
    if doc.get("ambient_functionals"):
        dt = DivisorTheory.from_ambient_functionals(
            m, _int_matrix(doc["ambient_functionals"]))
    else:
        dt = divisor_theory(m)
    rep = verify_divisor_axioms(dt, depth)
    out = {"ok": rep.ok, "depth": rep.depth}
    if not rep.ok:
        out["failed_axiom"] = rep.failed_axiom
        out["witness"] = [list(w) for w in rep.witness]
    return out


def cmd_extend(doc, args):
    m = _decode_monoid(_require(doc, "monoid"))
    dt = divisor_theory(m)
    alpha = MonoidHom(_fraction_matrix(_require(_require(doc, "alpha"), "matrix")))
    depth = args.depth or _as_int(doc.get("depth", DEFAULT_DEPTH))
    result = extend_embedding(dt, alpha, depth=depth)
    if isinstance(result, Beta):
        return {"kind": "beta", "matrix": [list(r) for r in result.matrix]}
    if isinstance(result, ViolationStar):
        return {"kind": "violation_star", "a": list(result.a), "b": list(result.b),
                "s": list(result.s)}
    if isinstance(result, ViolationStarStar):
        return {"kind": "violation_star_star",
                "witness_set": [list(w) for w in result.witness_set],
                "common_prime_index": result.common_prime_index}
    return {"kind": "not_an_embedding", "a": list(result.a), "b": list(result.b)}


def cmd_cox_data(doc, args):
    c = _decode_cone(doc)
    cd = cox_data(c)
    return {
        "rays": [list(r) for r in cd.rays],
        "cl_free_rank": cd.cl_group.free_rank,
        "cl_torsion": list(cd.cl_group.torsion),
        "var_degrees": [{"free": list(d.free), "torsion": list(d.torsion)}
                        for d in cd.var_degrees],
        "ray_pairing": [list(r) for r in cd.ray_pairing],
        "characters": [list(u) for u in cd.characters],
        "pullbacks": [p.render() for p in cd.pullback_map.images],
    }


def cmd_pullback(doc, args):
    cd = cox_data(_decode_cone(_require(doc, "cone")))
    u = _int_vector(_require(doc, "character"))
    return {"monomial": pullback(cd, u).render()}


def cmd_verify_lift(doc, args):
    cd = cox_data(_decode_cone(_require(doc, "cone")))
    k = len(cd.characters)
    xnames = [f"x{i + 1}" for i in range(k)]
    ynames = [f"y{i + 1}" for i in range(len(cd.rays))]
    psi = [parse_poly(s, xnames) for s in _require(doc, "psi")]
    phi_images = [parse_poly(s, ynames) for s in _require(doc, "phi")]
    phi = GradedEndo(cd.graded_ring, PolyMap(tuple(phi_images)))
    return {"ok": verify_lift(cd, psi, phi)}


def cmd_compose(doc, args):
    n = _as_int(_require(doc, "num_vars"))
    names = _var_names(doc, n)
    maps = [PolyMap(tuple(parse_poly(s, names) for s in images), source_vars=n)
            for images in _require(doc, "maps")]
    if any(len(m.images) != n for m in maps):
        raise InputError("each map needs one image per variable")
    result = compose_chain(maps)
    return {"images": [p.render(names) for p in result.images]}


def cmd_jacobian(doc, args):
    images = _require(doc, "images")
    n = len(images)
    names = _var_names(doc, n)
    m = PolyMap(tuple(parse_poly(s, names) for s in images), source_vars=n)
    jac = jacobian(m)
    return {
        "matrix": [[p.render(names) for p in row] for row in jac],
        "det": poly_det(jac).render(names),
    }


def cmd_wildness_cert(doc, args):
    ring = _decode_grading(doc.get("grading"))
    names = _var_names(doc, ring.num_vars)
    index_of = {n: i for i, n in enumerate(names)}
    seq = []
    for step in _require(doc, "sequence"):
        var = _require(step, "variable")
        if var not in index_of:
            raise InputError(f"unknown variable {var!r}")
        f = parse_poly(_require(step, "poly"), names)
        seq.append(shear_map(ring, index_of[var], f))
    result = wildness_certificate(seq, ring)
    if isinstance(result, NotZeta):
        return {"kind": "not_zeta", "variable": names[result.variable]}
    return {
        "kind": "certificate",
        "f": result.f.render(names),
        "g": result.g.render(names),
        "det_jacobian": result.det_jacobian.render(names),
        "residual": result.residual.render(names),
    }


def cmd_shear_family(doc, args):
    ring = _decode_grading(doc.get("grading"))
    names = _var_names(doc, ring.num_vars)
    index_of = {n: i for i, n in enumerate(names)}
    var = _require(doc, "variable")
    if var not in index_of:
        raise InputError(f"unknown variable {var!r}")
    f = parse_poly(_require(doc, "f"), names)
    h = parse_poly(_require(doc, "h"), names)
    k = _as_int(_require(doc, "k"))
    endo = shear_family(ring, index_of[var], f, h, k)
    return {"images": [p.render(names) for p in endo.map.images]}


def cmd_quotient_report(doc, args):
    conductor, gens = _decode_group(doc)
    group = close_group(gens, conductor=conductor, cap=args.cap or DEFAULT_CAP)
    rep = quotient_report(group)
    return {
        "order_g": rep.order_g,
        "order_h": rep.order_h,
        "order_h_tilde": rep.order_h_tilde,
        "f_abelian": rep.f_abelian,
        "commutant_order": rep.commutant_order,
        "n_invariants": list(rep.n_invariants),
        "is_toric": rep.is_toric,
    }


def cmd_reynolds(doc, args):
    conductor, gens = _decode_group(_require(doc, "group"))
    group = close_group(gens, conductor=conductor, cap=args.cap or DEFAULT_CAP)
    degree = _as_int(_require(doc, "degree"))
    basis = reynolds_invariants(group, degree)
    names = [f"x{i + 1}" for i in range(group.dim)]
    return {
        "dimension": len(basis),
        "basis": [_render_invariant(form, names) for form in basis],
    }


COMMANDS = {
    "parse-poly": cmd_parse_poly,
    "saturate": cmd_saturate,
    "divisor-theory": cmd_divisor_theory,
    "check-axioms": cmd_check_axioms,
    "extend": cmd_extend,
    "cox-data": cmd_cox_data,
    "pullback": cmd_pullback,
    "verify-lift": cmd_verify_lift,
    "compose": cmd_compose,
    "jacobian": cmd_jacobian,
    "wildness-cert": cmd_wildness_cert,
    "shear-family": cmd_shear_family,
    "quotient-report": cmd_quotient_report,
    "reynolds": cmd_reynolds,
}


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="coxtools",
        description="Exact monoid, toric, and automorphism computations over JSON files.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("input", help="path to a JSON payload or fixture file")
    parser.add_argument("--depth", type=int, default=None,
                        help="search depth for bounded verifications")
    parser.add_argument("--cap", type=int, default=None,
                        help="group closure cap")
    parser.add_argument("--pretty", action="store_true", help="indent the output")
    args = parser.parse_args(argv)

    try:
        doc = _load(args.input)
        handler = COMMANDS[args.command]
    except InputError as exc:
        emit({"error": "malformed_input", "detail": str(exc)}, args.pretty)
        return 2
    try:
        result = handler(doc, args)
    except InputError as exc:
        emit({"error": "malformed_input", "detail": str(exc)}, args.pretty)
        return 2
    except NotSaturatedError as exc:
        emit({"error": "not_saturated", "witness": list(exc.witness),
              "detail": str(exc)}, args.pretty)
        return 1
    except DOMAIN_ERRORS as exc:
        emit({"error": type(exc).__name__, "detail": str(exc)}, args.pretty)
        return 1
    emit(result, args.pretty)
    return 0


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
