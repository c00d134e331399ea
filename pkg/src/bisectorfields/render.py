"""SVG figures of bisector fields.

All geometry is exact until coordinates are written out; the boundary curve
is traced numerically (per-column bisection in double precision) because the
picture is an illustration only. Output is deterministic for fixed inputs.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .boundary import POINT, BoundaryCurve, boundary, boundary_of_quadrilateral, moving_bisector
from .core import FieldPolynomials
from .errors import UnrealizableField, UnsupportedInMode
from .fields import PRIME
from .forms import P1Point
from .plane import Line, Point, Quadrilateral, bisector_midpoint, centroid
from .standard import StandardFormField, quadrilateral_from_triple

SIZE = 600
DEFAULT_WINDOW = (-4.0, -4.0, 4.0, 4.0)
COLUMNS = 600
ROWS_PER_COLUMN = 400


class Canvas:
    def __init__(self, window):
        self.x0, self.y0, self.x1, self.y1 = map(float, window)
        if self.x1 <= self.x0 or self.y1 <= self.y0:
            raise ValueError(f"empty window {window}")
        self.items: list[str] = []

    def px(self, x: float, y: float) -> tuple[str, str]:
        sx = (x - self.x0) / (self.x1 - self.x0) * SIZE
        sy = (self.y1 - y) / (self.y1 - self.y0) * SIZE
        return f"{sx:.3f}", f"{sy:.3f}"

    def segment(self, a, b, cls):
        (ax, ay), (bx, by) = self.px(*a), self.px(*b)
        self.items.append(f'<line class="{cls}" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')

    def dot(self, x, y, cls, r=3):
        cx, cy = self.px(x, y)
        self.items.append(f'<circle class="{cls}" cx="{cx}" cy="{cy}" r="{r}"/>')

    def path(self, d, cls):
        self.items.append(f'<path class="{cls}" d="{d}"/>')

    def svg(self, title: str) -> str:
        style = (
            ".bisector{stroke:#4a7fb5;stroke-width:0.8;opacity:0.7}"
            ".pencil{stroke:#c77d2e;stroke-width:0.8}"
            ".boundary{stroke:#b22222;stroke-width:1.6;fill:none}"
            ".midpoint{fill:#2e7d32}"
            ".center{fill:#000}"
        )
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
                f'viewBox="0 0 {SIZE} {SIZE}">')
        body = "\n".join(self.items)
        return f"{head}\n<title>{title}</title>\n<style>{style}</style>\n{body}\n</svg>\n"


def clip_line(t: float, u: float, v: float, window):
    """Endpoints of t x - u y + v = 0 inside the window, or None."""
    x0, y0, x1, y1 = window
    pts = []
    if u:
        for x in (x0, x1):
            y = (t * x + v) / u
            if y0 <= y <= y1:
                pts.append((x, y))
    if t:
        for y in (y0, y1):
            x = (u * y - v) / t
            if x0 <= x <= x1:
                pts.append((x, y))
    pts = sorted(set(pts))
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def _float_poly(poly):
    return [(float(c), e) for e, c in poly.terms.items()]


def _eval(terms, x, y):
    return sum(c * x ** e[0] * y ** e[1] for c, e in terms)


def _column_roots(terms, x, y0, y1, rows):
    ys = [y0 + (y1 - y0) * i / rows for i in range(rows + 1)]
    vals = [_eval(terms, x, y) for y in ys]
    roots = []
    for i in range(rows):
        a, b, fa, fb = ys[i], ys[i + 1], vals[i], vals[i + 1]
        if fa == 0:
            roots.append(a)
            continue
        if fa * fb > 0:
            continue
        for _ in range(50):
            m = (a + b) / 2
            fm = _eval(terms, x, m)
            if fa * fm <= 0:
                b = m
            else:
                a, fa = m, fm
        roots.append((a + b) / 2)
    return roots


def trace_curve(poly, window, columns=COLUMNS, rows=ROWS_PER_COLUMN):
    """Polyline pieces approximating poly(x, y) = 0: roots per column, joined to close neighbours."""
    x0, y0, x1, y1 = window
    terms = _float_poly(poly)
    step_y = (y1 - y0) / rows
    cols = []
    for i in range(columns + 1):
        x = x0 + (x1 - x0) * i / columns
        cols.append((x, _column_roots(terms, x, y0, y1, rows)))
    pieces = []
    limit = 12 * step_y + 6 * (x1 - x0) / columns
    for (xa, ra), (xb, rb) in zip(cols, cols[1:]):
        for ya in ra:
            if not rb:
                break
            yb = min(rb, key=lambda y: abs(y - ya))
            if abs(yb - ya) <= limit:
                pieces.append(((xa, ya), (xb, yb)))
    return pieces


def _sample_params(n: int):
    """n slopes [t:u] spread over P^1 by t/u = tan of evenly spaced angles, rounded to rationals."""
    out = []
    for i in range(n):
        theta = math.pi * (i + 0.5) / n - math.pi / 2
        out.append(Fraction(math.tan(theta)).limit_denominator(64))
    return out


def _pencil_slopes(fp: FieldPolynomials):
    """Float slopes (t, u) of the null pencils, from the common factor of Phi and Psi."""
    if fp.F_degree == 3:
        return []
    common = [float(c) for c in fp.Phi.divexact(fp.phi).coeffs]
    if len(common) == 2:
        a, b = common
        return [(-b, a)] if a else [(1.0, 0.0)]
    a, b, c = common
    if a == 0:
        return [(1.0, 0.0), (-c, b)]
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    r = math.sqrt(disc)
    return [((-b + r) / (2 * a), 1.0), ((-b - r) / (2 * a), 1.0)]


def render(obj, samples: int = 24, window=DEFAULT_WINDOW) -> str:
    """SVG for a StandardFormField or a Quadrilateral over Q or the emulated reals."""
    if obj.field.kind == PRIME:
        raise UnsupportedInMode("finite fields have no picture")
    if isinstance(obj, StandardFormField):
        curve: BoundaryCurve = boundary(obj)
        center = obj.center
        try:
            q = quadrilateral_from_triple(obj)
        except UnrealizableField:
            q = None
        title = f"bisector field h={obj.h} k={obj.k} mu={obj.mu}"
    elif isinstance(obj, Quadrilateral):
        q = obj
        curve = boundary_of_quadrilateral(q)
        center = centroid(q)
        title = "bisector field of a quadrilateral"
    else:
        raise TypeError(f"cannot render {type(obj).__name__}")
    fp = curve.fp
    win = tuple(map(float, window))
    canvas = Canvas(win)
    fld = fp.field

    drawn: list[Line] = []
    for s in _sample_params(samples):
        ell = moving_bisector(fp, P1Point(fld(s), fld.one))
        if ell is None:
            continue
        seg = clip_line(float(ell.t), float(ell.u), float(ell.v), win)
        if seg:
            canvas.segment(*seg, "bisector")
            drawn.append(ell)

    for t, u in _pencil_slopes(fp):
        ends = [t * x - u * y for x in win[::2] for y in win[1::2]]
        lo, hi = min(ends), max(ends)
        for i in range(1, 10):
            v = -(lo + (hi - lo) * i / 10)
            seg = clip_line(t, u, v, win)
            if seg:
                canvas.segment(*seg, "pencil")

    if curve.variant == POINT:
        canvas.dot(float(curve.point.x), float(curve.point.y), "boundary", r=4)
    else:
        d = " ".join(
            "M{} {} L{} {}".format(*canvas.px(*a), *canvas.px(*b)) for a, b in trace_curve(curve.poly, win)
        )
        canvas.path(d, "boundary")

    if q is not None:
        for ell in drawn:
            m = bisector_midpoint(q, ell)
            if isinstance(m, Point):
                canvas.dot(float(m.x), float(m.y), "midpoint", r=2)
    canvas.dot(float(center.x), float(center.y), "center", r=4)
    return canvas.svg(title)
