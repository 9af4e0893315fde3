"""JSON schemas for matroids, polymatroids, flag matroids and polynomials.

Input files carry a "type" tag; elements are 0-indexed unless the document
sets "indexing": "1", in which case labels are shifted down on load (handy
for transcribing 1-indexed worked examples).  Polynomial output is sorted
and stringifies coefficients so arbitrary precision survives any consumer.
"""

import json

from .errors import ParseError, SchemaError
from .matroid import Matroid, matroid_from_bases, matroid_from_graph, \
    matroid_from_matrix
from .polyflag import FlagMatroid, Polymatroid, flag_from_constituents, \
    polymatroid_from_matroid, polymatroid_from_rank


def load_document(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _one_indexed(doc):
    return str(doc.get("indexing", "0")) == "1"


def _require(doc, key, kind):
    if key not in doc:
        raise SchemaError(f"{kind} document is missing '{key}'")
    return doc[key]


def parse_object(doc):
    """Dispatch a document on its "type" tag to a validated object."""
    if not isinstance(doc, dict):
        raise SchemaError("top-level JSON value must be an object")
    kind = doc.get("type")
    if kind == "matroid":
        n = _require(doc, "n", kind)
        bases = _require(doc, "bases", kind)
        if _one_indexed(doc):
            bases = [[e - 1 for e in b] for b in bases]
        return matroid_from_bases(n, bases)
    if kind == "matrix":
        return matroid_from_matrix(_require(doc, "rows", kind))
    if kind == "graph":
        edges = _require(doc, "edges", kind)
        vertices = doc.get("vertices")
        if _one_indexed(doc):
            edges = [[u - 1, v - 1] for u, v in edges]
        return matroid_from_graph(edges, vertices)
    if kind == "polymatroid":
        return polymatroid_from_rank(_require(doc, "n", kind),
                                     _require(doc, "rank", kind))
    if kind == "flag_matroid":
        constituents = [parse_object(sub if "type" in sub
                                     else {"type": "matroid", **sub,
                                           "indexing": doc.get("indexing", "0")})
                        for sub in _require(doc, "constituents", kind)]
        for c in constituents:
            if not isinstance(c, Matroid):
                raise SchemaError("flag constituents must be matroids")
        flag = flag_from_constituents(constituents)
        ranks = doc.get("ranks")
        if ranks is not None and tuple(ranks) != flag.ranks:
            raise SchemaError(
                f"declared ranks {ranks} do not match constituents "
                f"{flag.ranks}")
        return flag
    if kind == "matroid_pair":
        return (parse_object(_require(doc, "N", kind)),
                parse_object(_require(doc, "M", kind)))
    if kind == "matroid_list":
        return [parse_object(sub)
                for sub in _require(doc, "matroids", kind)]
    raise SchemaError(f"unknown document type {kind!r}")


def load_object(path):
    return parse_object(load_document(path))


def as_matroid(obj):
    if isinstance(obj, Matroid):
        return obj
    raise SchemaError(f"expected a matroid input, got {type(obj).__name__}")


def as_flag_matroid(obj):
    if isinstance(obj, FlagMatroid):
        return obj
    if isinstance(obj, Matroid):
        return flag_from_constituents([obj])
    raise SchemaError(
        f"expected a flag matroid input, got {type(obj).__name__}")


def as_polymatroid(obj):
    from .polyflag import polymatroid_of_flag
    if isinstance(obj, Polymatroid):
        return obj
    if isinstance(obj, Matroid):
        return polymatroid_from_matroid(obj)
    if isinstance(obj, FlagMatroid):
        return polymatroid_of_flag(obj)
    raise SchemaError(
        f"expected a polymatroid input, got {type(obj).__name__}")


# -------------------------------------------------------------- writers

def matroid_to_json(m):
    return {"type": "matroid", "n": m.n, "bases": [list(b) for b in m.bases]}


def polymatroid_to_json(p):
    return {"type": "polymatroid", "n": p.n, "rank": list(p.rank_table)}


def flag_to_json(f):
    return {"type": "flag_matroid", "n": f.n, "ranks": list(f.ranks),
            "constituents": [matroid_to_json(m) for m in f.constituents]}


def laurent_to_json(p):
    return {"vars": p.nvars,
            "terms": [{"exp": list(e), "coeff": str(c)}
                      for e, c in p.sorted_terms()]}


def krational_to_json(kr):
    out = laurent_to_json(kr.num)
    out["denominator"] = [list(a) for a in kr.den]
    return out


def bivar_to_json(p, names=("x", "y")):
    return {"vars": list(names),
            "terms": [{"exp": list(k), "coeff": str(c)}
                      for k, c in p.sorted_terms()]}


def univar_to_json(coeffs, name="lambda"):
    return {"vars": [name],
            "terms": [{"exp": [k], "coeff": str(c)}
                      for k, c in enumerate(coeffs) if c]}
