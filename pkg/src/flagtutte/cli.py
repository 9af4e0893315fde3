"""Command-line front end.

Verbs map one-to-one onto library operations; inputs are the JSON schemas
of :mod:`flagtutte.fileio`.  Output is deterministic: canonical orderings
everywhere, byte-identical across re-runs, thread counts and evaluation
weights.  Exit codes: 0 success, 1 domain error (with a machine-readable
report), 2 usage error.
"""

import argparse
import json
import sys

from .errors import FlagTutteError
from . import fileio
from .invariants import (characteristic_poly, format_bivar, log_concavity,
                         q_coefficients, qprime, tutte_activity,
                         tutte_delcon, tutte_rank_nullity)
from .ktheory import k_tutte, parse_chain, y_class
from .lattice import (base_polytope, edges, is_normal, lattice_points,
                      poly_base_polytope)
from .laurent import KRational, evaluate_at_one, format_poly
from .matroid import Matroid, cover_by_independent, union_rank
from .polyflag import FlagMatroid, Polymatroid, is_quotient, quotient_witness


def _emit(payload, args):
    if args.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        _emit_text(payload)
    return 0


def _emit_text(payload, indent=""):
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, (dict, list)):
                print(f"{indent}{key}:")
                _emit_text(value, indent + "  ")
            else:
                print(f"{indent}{key}: {value}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, (dict, list)):
                _emit_text(value, indent + "  ")
            else:
                print(f"{indent}{value}")
    else:
        print(f"{indent}{payload}")


def _poly_payload(p):
    out = fileio.bivar_to_json(p)
    out["pretty"] = format_bivar(p)
    return out


def _weights_guard(values, weights):
    """Assert t=1 evaluation through weights matches direct substitution."""
    for v in values:
        assert evaluate_at_one(KRational.from_poly(v), weights) == \
            v.subs_one(), "weight evaluation disagrees with substitution"


def _object_summary(obj):
    if isinstance(obj, Matroid):
        return {"kind": "matroid", "n": obj.n, "rank": obj.k,
                "bases": len(obj.bases)}
    if isinstance(obj, Polymatroid):
        return {"kind": "polymatroid", "n": obj.n, "rank": obj.total_rank}
    if isinstance(obj, FlagMatroid):
        return {"kind": "flag_matroid", "n": obj.n,
                "ranks": list(obj.ranks)}
    if isinstance(obj, tuple):
        return {"kind": "matroid_pair"}
    return {"kind": "matroid_list", "count": len(obj)}


def cmd_check(args):
    obj = fileio.load_object(args.input)
    payload = {"ok": True}
    payload.update(_object_summary(obj))
    return _emit(payload, args)


def cmd_tutte(args):
    m = fileio.as_matroid(fileio.load_object(args.input))
    routes = {"rank": tutte_rank_nullity, "delcon": tutte_delcon,
              "activity": tutte_activity}
    if args.method == "all":
        polys = {name: fn(m) for name, fn in routes.items()}
        values = list(polys.values())
        payload = {name: _poly_payload(p) for name, p in polys.items()}
        payload["agree"] = all(p == values[0] for p in values)
        return _emit(payload, args)
    return _emit(_poly_payload(routes[args.method](m)), args)


def cmd_ktutte(args):
    f = fileio.as_flag_matroid(fileio.load_object(args.input))
    poly = k_tutte(f, threads=args.threads)
    if args.weights:
        _weights_guard(y_class(f).values.values(), args.weights)
    payload = _poly_payload(poly)
    payload["nonnegative_coefficients"] = all(
        c >= 0 for c in poly.coeffs.values())
    return _emit(payload, args)


def cmd_charpoly(args):
    f = fileio.as_flag_matroid(fileio.load_object(args.input))
    poly = k_tutte(f, threads=args.threads)
    chi = characteristic_poly(poly, sum(f.ranks))
    verdict = log_concavity(chi)
    payload = fileio.univar_to_json(chi)
    payload["log_concave"] = bool(verdict)
    return _emit(payload, args)


def cmd_qprime(args):
    p = fileio.as_polymatroid(fileio.load_object(args.input))
    polytope = poly_base_polytope(p)
    coeffs = q_coefficients(polytope)
    payload = _poly_payload(qprime(polytope))
    payload["binomial_coefficients"] = [
        {"i": i, "j": j, "c": str(c)} for (i, j), c in sorted(coeffs.items())]
    return _emit(payload, args)


def cmd_polytope(args):
    obj = fileio.load_object(args.input)
    if isinstance(obj, Matroid):
        p = base_polytope(obj)
    else:
        p = poly_base_polytope(fileio.as_polymatroid(obj))
    payload = {
        "vertices": [list(v) for v in p.vertices],
        "edges": [list(e) for e in edges(p)],
        "lattice_points": [list(q) for q in lattice_points(p)],
    }
    if args.kmax:
        verdict = is_normal(p, args.kmax)
        payload["normal"] = bool(verdict)
        if not verdict:
            payload["witness"] = list(verdict.witness)
    return _emit(payload, args)


def cmd_yclass(args):
    f = fileio.as_flag_matroid(fileio.load_object(args.input))
    cls = y_class(f, threads=args.threads)
    if args.weights:
        _weights_guard(cls.values.values(), args.weights)
    items = cls.items()
    if args.fixed_point:
        wanted = parse_chain(args.fixed_point)
        items = [(fp, v) for fp, v in items if fp == wanted]
        if not items:
            raise FlagTutteError(
                f"{args.fixed_point} is not a fixed point of the space")
    payload = [{"fixed_point": "|".join("".join(map(str, part))
                                        for part in fp),
                "value": fileio.laurent_to_json(v),
                "pretty": format_poly(v)}
               for fp, v in items]
    return _emit(payload, args)


def cmd_quotient(args):
    pair = fileio.load_object(args.input)
    if not isinstance(pair, tuple):
        raise FlagTutteError("quotient needs a matroid_pair document")
    n, m = pair
    ok = is_quotient(n, m)
    payload = {"is_quotient": ok}
    if not ok:
        payload["witness"] = [list(s) for s in quotient_witness(n, m)]
    return _emit(payload, args)


def cmd_union(args):
    matroids = fileio.load_object(args.input)
    if not isinstance(matroids, list):
        raise FlagTutteError("union needs a matroid_list document")
    full = range(matroids[0].n)
    cover = cover_by_independent(matroids)
    payload = {
        "union_rank": union_rank(matroids, full),
        "cover": [list(part) for part in cover] if cover else None,
    }
    return _emit(payload, args)


COMMANDS = {
    "check": cmd_check,
    "tutte": cmd_tutte,
    "ktutte": cmd_ktutte,
    "charpoly": cmd_charpoly,
    "qprime": cmd_qprime,
    "polytope": cmd_polytope,
    "yclass": cmd_yclass,
    "quotient": cmd_quotient,
    "union": cmd_union,
}


def _parse_weights(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad weights {text!r}") from exc


def build_parser():
    parser = argparse.ArgumentParser(
        prog="flagtutte",
        description="Exact Tutte polynomials of matroids, polymatroids and "
                    "flag matroids")
    parser.add_argument("verb", choices=sorted(COMMANDS))
    parser.add_argument("input", help="input JSON file")
    parser.add_argument("--method", default="all",
                        choices=["rank", "delcon", "activity", "all"],
                        help="tutte computation route")
    parser.add_argument("--threads", type=int, default=1,
                        help="parallel fixed-point evaluation")
    parser.add_argument("--output", default="json",
                        choices=["json", "text"])
    parser.add_argument("--fixed-point", default=None,
                        help='restrict yclass to one flag, e.g. "0|01"')
    parser.add_argument("--kmax", type=int, default=0,
                        help="normality check depth for the polytope verb")
    parser.add_argument("--weights", type=_parse_weights, default=None,
                        help="evaluation weight vector, e.g. 1,2,3")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.verb](args)
    except FlagTutteError as exc:
        report = {"ok": False, "error": type(exc).__name__,
                  "detail": str(exc)}
        print(json.dumps(report, sort_keys=True))
        return 1


if __name__ == "__main__":
    sys.exit(main())
