"""JSON encoding of lines, quadrilaterals, maps, forms and analysis results.

Field elements travel as strings (``"-1/8"``, or a residue for GF(p)).
Every document carries a header naming the field and the tool version, and
``dumps`` is canonical, so emit -> parse -> emit is a fixed point.
"""
from __future__ import annotations

import json
from fractions import Fraction

from ._version import __version__
from .boundary import POINT, BoundaryCurve
from .core import FieldPolynomials
from .errors import BisectorError, SchemaError
from .fields import Field, FieldElement
from .forms import BinaryForm
from .mpoly import MPoly, parse_monomial_key
from .plane import AffineMap, Line, Point, Quadrilateral
from .standard import StandardFormField

FORMAT = "bisectorfields"
SIDES = ("A", "B", "A1", "B1")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc


def _need(obj, keys, what):
    if not isinstance(obj, dict):
        raise SchemaError(f"{what} must be an object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise SchemaError(f"{what} is missing {', '.join(missing)}")


# elements

def element_to_json(x: FieldElement) -> str:
    return str(x)


def element_from_json(field: Field, raw) -> FieldElement:
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise SchemaError(f"field element must be a string or integer, got {raw!r}")
    try:
        return field(Fraction(raw) if isinstance(raw, str) else raw)
    except (ValueError, ZeroDivisionError, BisectorError) as exc:
        raise SchemaError(f"bad field element {raw!r}: {exc}") from exc


# geometry

def line_to_json(line: Line) -> dict:
    return {"t": str(line.t), "u": str(line.u), "v": str(line.v)}


def line_from_json(field: Field, obj) -> Line:
    _need(obj, "tuv", "line")
    t, u, v = (element_from_json(field, obj[k]) for k in "tuv")
    try:
        return Line.of(t, u, v, field=field)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def point_to_json(pt: Point) -> dict:
    return {"x": str(pt.x), "y": str(pt.y)}


def quad_to_json(q: Quadrilateral) -> dict:
    return {name: line_to_json(s) for name, s in zip(SIDES, q.sides)}


def quad_from_json(field: Field, obj) -> Quadrilateral:
    """Parse a quadrilateral; InvalidQuadrilateral propagates for bad geometry."""
    _need(obj, SIDES, "quadrilateral")
    return Quadrilateral(*(line_from_json(field, obj[k]) for k in SIDES))


def affine_to_json(m: AffineMap) -> dict:
    return {"m": [[str(m.a), str(m.b)], [str(m.c), str(m.d)]], "tr": [str(m.e), str(m.f)]}


def affine_from_json(field: Field, obj) -> AffineMap:
    _need(obj, ("m", "tr"), "affine map")
    try:
        (a, b), (c, d) = obj["m"]
        e, f = obj["tr"]
    except (TypeError, ValueError) as exc:
        raise SchemaError("affine map needs m = [[a,b],[c,d]] and tr = [e,f]") from exc
    vals = [element_from_json(field, x) for x in (a, b, c, d, e, f)]
    try:
        return AffineMap(*vals)
    except BisectorError as exc:
        raise SchemaError(str(exc)) from exc


# algebra

def form_to_json(f: BinaryForm) -> dict:
    return {"degree": f.degree, "coeffs": [str(c) for c in f.coeffs]}


def form_from_json(field: Field, obj) -> BinaryForm:
    _need(obj, ("degree", "coeffs"), "form")
    coeffs = obj["coeffs"]
    if not isinstance(coeffs, list) or len(coeffs) != obj["degree"] + 1:
        raise SchemaError("form coefficient count must be degree + 1")
    return BinaryForm(field, [element_from_json(field, c) for c in coeffs])


def mpoly_to_json(poly: MPoly) -> dict:
    return poly.coeff_dict()


def mpoly_from_json(field: Field, obj, gens="XY") -> MPoly:
    if not isinstance(obj, dict):
        raise SchemaError("polynomial coefficients must be an object")
    terms = {}
    for key, raw in obj.items():
        try:
            exps = parse_monomial_key(key, gens)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
        terms[exps] = element_from_json(field, raw)
    return MPoly(field, gens, terms)


def polynomials_to_json(fp: FieldPolynomials) -> dict:
    return {
        "Phi": form_to_json(fp.Phi),
        "Psi": form_to_json(fp.Psi),
        "phi": form_to_json(fp.phi),
        "psi": form_to_json(fp.psi),
        "F_degree": fp.F_degree,
        "class": fp.kind,
    }


def polynomials_from_json(field: Field, obj) -> FieldPolynomials:
    _need(obj, ("Phi", "Psi", "phi", "psi"), "field polynomials")
    return FieldPolynomials(*(form_from_json(field, obj[k]) for k in ("Phi", "Psi", "phi", "psi")))


def standard_to_json(f: StandardFormField) -> dict:
    return {"h": str(f.h), "k": str(f.k), "mu": str(f.mu), "class": f.kind}


def standard_from_json(field: Field, obj) -> StandardFormField:
    _need(obj, ("h", "k", "mu"), "standard form")
    h, k, mu = (element_from_json(field, obj[x]) for x in ("h", "k", "mu"))
    try:
        return StandardFormField(h, k, mu, obj.get("class", ""))
    except (ValueError, BisectorError) as exc:
        raise SchemaError(str(exc)) from exc


def boundary_to_json(curve: BoundaryCurve) -> dict:
    if curve.variant == POINT:
        return {"variant": POINT, "point": point_to_json(curve.point)}
    return {"variant": curve.variant, "coeffs": mpoly_to_json(curve.poly)}


# documents

def document(field: Field, kind: str, payload: dict) -> dict:
    return {"format": FORMAT, "version": __version__, "field": str(field), "kind": kind, **payload}


def read_document(obj) -> tuple[Field, dict]:
    """Header check; returns the field and the whole object."""
    if isinstance(obj, str):
        obj = loads(obj)
    if not isinstance(obj, dict):
        raise SchemaError("document must be a JSON object")
    if "field" not in obj:
        raise SchemaError("document has no field descriptor")
    try:
        field = Field.parse(obj["field"])
    except (ValueError, AttributeError) as exc:
        raise SchemaError(str(exc)) from exc
    return field, obj
