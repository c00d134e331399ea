"""Command-line front end.

Exit codes: 0 ok, 1 census invariant failure, 2 bad input, 3 invalid
quadrilateral, 4 render refused for GF(p), 5 census size cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

from . import serialize as ser
from ._version import __version__
from .boundary import boundary, boundary_of_quadrilateral, singular_points
from .census import FULL, HARD_CAP, WELL_CENTERED_ONLY, run_census
from .core import count_parallel_pencils, field_polynomials
from .errors import (
    BisectorError,
    FieldTooLarge,
    InvalidQuadrilateral,
    SchemaError,
    UnsupportedInMode,
)
from .fields import QQ, Field
from .plane import Quadrilateral, centroid
from .standard import (
    StandardFormField,
    affinely_equivalent,
    equivalence_witness,
    standardize,
    well_centered,
)

log = logging.getLogger("bisectorfields")

EXIT_OK, EXIT_INVARIANT, EXIT_PARSE, EXIT_QUAD, EXIT_RENDER, EXIT_CAP = 0, 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# input helpers

def _field_arg(text: str) -> Field:
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}") from exc
    return ser.loads(text)


def _resolve_field(args, obj) -> Field:
    """--field wins when the document has no header; a conflicting header is an error."""
    doc_field = None
    if isinstance(obj, dict) and "field" in obj:
        doc_field, _ = ser.read_document(obj)
    if args.field is not None and doc_field is not None and args.field != doc_field:
        raise CliError(EXIT_PARSE, f"--field {args.field} conflicts with document field {doc_field}")
    return args.field or doc_field or QQ


def _load_input(args):
    """A Quadrilateral or a StandardFormField from --triple or the JSON input."""
    if getattr(args, "triple", None):
        field = args.field or QQ
        return parse_triple(field, args.triple)
    if not getattr(args, "input", None):
        raise CliError(EXIT_PARSE, "give an input JSON file (or -) or --triple h,k,mu")
    obj = _read_json(args.input)
    field = _resolve_field(args, obj)
    if not isinstance(obj, dict):
        raise SchemaError("input must be a JSON object")
    if "quadrilateral" in obj:
        return ser.quad_from_json(field, obj["quadrilateral"])
    if all(k in obj for k in ser.SIDES):
        return ser.quad_from_json(field, obj)
    if "standard" in obj:
        return ser.standard_from_json(field, obj["standard"])
    if all(k in obj for k in ("h", "k", "mu")):
        return ser.standard_from_json(field, obj)
    raise SchemaError("input holds neither a quadrilateral nor a triple")


def parse_triple(field: Field, text: str) -> StandardFormField:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise SchemaError(f"triple must be h,k,mu, got {text!r}")
    return ser.standard_from_json(field, dict(zip(("h", "k", "mu"), parts)))


def _need_quad(obj, command):
    if not isinstance(obj, Quadrilateral):
        raise CliError(EXIT_PARSE, f"{command} needs a quadrilateral")
    return obj


# documents

def _singular_json(curve):
    try:
        pts = singular_points(curve)
    except UnsupportedInMode:
        return None
    return [ser.point_to_json(p) for p in sorted(pts, key=lambda p: (p.x.value, p.y.value))]


def map_text(m) -> str:
    return f"(x, y) -> ({m.a}*x + {m.b}*y + {m.e}, {m.c}*x + {m.d}*y + {m.f})"


def _standard_block(f: StandardFormField) -> dict:
    return {**ser.standard_to_json(f), "well_centered": well_centered(f)}


def analyze_document(q: Quadrilateral) -> dict:
    fp = field_polynomials(q)
    m, f = standardize(q)
    curve = boundary_of_quadrilateral(q)
    return ser.document(q.field, "analysis", {
        "quadrilateral": ser.quad_to_json(q),
        "polynomials": ser.polynomials_to_json(fp),
        "class": fp.kind,
        "pencils": count_parallel_pencils(fp),
        "centroid": ser.point_to_json(centroid(q)),
        "standard_map": ser.affine_to_json(m),
        "standard": _standard_block(f),
        "well_centered": well_centered(f),
        "boundary": ser.boundary_to_json(curve),
        "singular_points": _singular_json(curve),
    })


def cmd_analyze(args):
    q = _need_quad(_load_input(args), "analyze")
    doc = analyze_document(q)
    text = "\n".join([
        f"class: {doc['class']}",
        f"Phi = {field_polynomials(q).Phi}",
        f"Psi = {field_polynomials(q).Psi}",
        f"standard form: (h, k, mu) = ({doc['standard']['h']}, {doc['standard']['k']}, {doc['standard']['mu']})",
        f"well centered: {str(doc['well_centered']).lower()}",
        f"boundary: {doc['boundary']['variant']}",
    ])
    return doc, text


def cmd_standardize(args):
    q = _need_quad(_load_input(args), "standardize")
    m, f = standardize(q)
    doc = ser.document(q.field, "standard", {"map": ser.affine_to_json(m), "standard": _standard_block(f)})
    return doc, f"{f}\nmap: {map_text(m)}"


def cmd_classify(args):
    obj = _load_input(args)
    if isinstance(obj, Quadrilateral):
        fp = field_polynomials(obj)
        kind, deg, pencils = fp.kind, fp.F_degree, count_parallel_pencils(fp)
    else:
        kind = obj.kind
        deg = {"linear": 1, "quadratic": 2, "cubic": 3}[kind]
        pencils = 3 - deg
    doc = ser.document(obj.field, "classification", {"class": kind, "F_degree": deg, "pencils": pencils})
    return doc, kind


def cmd_equiv(args):
    field = args.field or QQ
    f1, f2 = parse_triple(field, args.first), parse_triple(field, args.second)
    verdict = affinely_equivalent(f1, f2)
    payload = {"first": ser.standard_to_json(f1), "second": ser.standard_to_json(f2), "verdict": verdict.value}
    lines = [verdict.value]
    if verdict.value == "equivalent":
        m = equivalence_witness(f1, f2)
        payload["witness"] = None if m is None else ser.affine_to_json(m)
        if m is not None:
            lines.append(f"witness: {map_text(m)}")
    return ser.document(field, "equivalence", payload), "\n".join(lines)


def cmd_boundary(args):
    obj = _load_input(args)
    curve = boundary_of_quadrilateral(obj) if isinstance(obj, Quadrilateral) else boundary(obj)
    payload = {"boundary": ser.boundary_to_json(curve), "singular_points": _singular_json(curve)}
    return ser.document(obj.field, "boundary", payload), str(curve)


def cmd_census(args):
    p = args.p
    if p > HARD_CAP:
        raise CliError(EXIT_CAP, f"p = {p} is above the cap {HARD_CAP}")
    if p < 3:
        raise CliError(EXIT_PARSE, "census needs an odd prime p")
    try:
        Field("prime", p)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc
    report = run_census(p, args.mode, workers=args.workers, samples=args.samples, seed=args.seed)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            csv.writer(fh).writerows(report.csv_rows())
    doc = ser.document(Field("prime", p), "census", {"report": report.to_dict(timing=args.timing)})
    d = report.to_dict()
    text = "\n".join([
        f"p = {p} ({args.mode}, backend {report.backend})",
        f"classes: {d['class_histogram']}",
        f"well-centered cubic classes: {d['well_centered_classes']}",
        f"undecided pairs: {d['undecided_pairs']}",
        f"witnesses validated: {d['witnesses']['validated']}/{d['witnesses']['sampled']}",
    ] + ([f"oracle agreement: {100 * d['oracle']['agreement']:.1f}%"] if args.mode == FULL else []))
    if not report.invariant_ok:
        print("census invariant FAILED", file=sys.stderr)
        args._exit = EXIT_INVARIANT
    return doc, text


def _window(text: str):
    try:
        vals = tuple(float(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad window {text!r}") from exc
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("window is x0,y0,x1,y1")
    return vals


def cmd_render(args):
    from .render import render

    obj = _load_input(args)
    if obj.field.is_prime:
        raise CliError(EXIT_RENDER, "rendering is refused over GF(p)")
    svg = render(obj, samples=args.samples, window=args.window)
    target = args.svg or args.out
    if target:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(svg)
        args.out = None
        return None, f"wrote {target}"
    return None, svg.rstrip("\n")


# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand from resetting a flag given before it
    common.add_argument("--field", type=_field_arg, default=argparse.SUPPRESS,
                        help="rational | prime:P | real (default rational)")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output here instead of stdout")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")

    parser = argparse.ArgumentParser(prog="bisectorfields", parents=[common],
                                     description="Bisector fields of quadrilaterals.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, source=True):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        if source:
            sp.add_argument("input", nargs="?", help="JSON input file, or - for stdin")
            sp.add_argument("--triple", help="standard-form triple h,k,mu instead of a file")
        return sp

    add("analyze", cmd_analyze, "full analysis of a quadrilateral")
    add("standardize", cmd_standardize, "affine map to standard form and the triple")
    add("classify", cmd_classify, "linear, quadratic or cubic")
    sp = add("equiv", cmd_equiv, "decide affine equivalence of two triples", source=False)
    sp.add_argument("first", help="h,k,mu")
    sp.add_argument("second", help="h,k,mu")
    add("boundary", cmd_boundary, "boundary curve and its singular points")
    sp = add("census", cmd_census, "finite-field census", source=False)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--mode", choices=(WELL_CENTERED_ONLY, FULL), default=WELL_CENTERED_ONLY)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--samples", type=int, default=10, help="witness pairs to validate")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--csv", help="also write per-triple rows here")
    sp.add_argument("--timing", action="store_true", help="include wall time in the report")
    sp = add("render", cmd_render, "SVG figure (Q or real only)")
    sp.add_argument("--svg", help="output SVG path")
    sp.add_argument("--samples", type=int, default=24, help="moving bisectors to draw")
    sp.add_argument("--window", type=_window, default=(-4.0, -4.0, 4.0, 4.0), help="x0,y0,x1,y1")
    return parser


def _emit(args, doc, text):
    out = ser.dumps(doc) if (args.json or args.out) and doc is not None else (text or "") + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, value in (("field", None), ("out", None), ("json", False)):
        if not hasattr(args, name):
            setattr(args, name, value)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    args._exit = EXIT_OK
    try:
        doc, text = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InvalidQuadrilateral as exc:
        print(f"invalid quadrilateral: {exc}", file=sys.stderr)
        return EXIT_QUAD
    except FieldTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (SchemaError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BisectorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit(args, doc, text)
    return args._exit


if __name__ == "__main__":
    sys.exit(main())
