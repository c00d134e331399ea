"""Moving bisectors, the boundary curve, the duality maps and tangency.

The moving line of a nonlinear field is ``T phi X - U phi Y + psi Z`` viewed
as a binary form in (T, U) with coefficients linear in X, Y, Z; its
discriminant D(X, Y, Z) defines the boundary, and ``Delta(X, Y) = D(X, Y, 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import CUBIC, LINEAR, QUADRATIC, FieldPolynomials, field_polynomials
from .errors import IdentityCheckFailed, PointNotOnCurve, SingularPoint, UnsupportedInMode
from .fields import PRIME, RATIONAL, Field
from .forms import BinaryForm, P1Point, discriminant, p1_roots
from .mpoly import MPoly
from .plane import AffineMap, Line, Point, Quadrilateral
from .standard import StandardFormField, polynomials_from_triple, standardize

POINT, PARABOLA, QUARTIC = "point", "parabola", "quartic"


@dataclass(frozen=True)
class ProjectivePoint:
    """``[x : y : z]`` scaled so the last nonzero coordinate is 1."""

    coords: tuple

    @classmethod
    def of(cls, *coords) -> ProjectivePoint:
        if len(coords) == 1:
            coords = tuple(coords[0])
        if not any(coords):
            raise ValueError("[0:0:0] is not a projective point")
        last = next(c for c in reversed(coords) if c)
        return cls(tuple(c / last for c in coords))

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"


def moving_bisector(fp: FieldPolynomials, s: P1Point) -> Line | None:
    """``t phi(t,u) X - u phi(t,u) Y + psi(t,u) = 0``, or ``None`` when phi(t,u) = 0."""
    ph = fp.phi(s.t, s.u)
    if not ph:
        return None
    return Line.of(s.t * ph, s.u * ph, fp.psi(s.t, s.u), fp.field)


def is_moving_bisector(fp: FieldPolynomials, ell: Line) -> bool:
    return not fp.reduced_value(ell.t, ell.u, ell.v)


def moving_line_coeffs(fp: FieldPolynomials, gens="XYZ") -> list[MPoly]:
    """Coefficients of T^(d-j) U^j in the moving line, as linear forms in X, Y, Z."""
    fld = fp.field
    X, Y, Z = MPoly.gens_of(fld, gens)
    d = fp.F_degree
    phi, psi = fp.phi.coeffs, fp.psi.coeffs
    out = []
    for j in range(d + 1):
        c = X * 0
        if j < len(phi):
            c = c + X * phi[j]
        if 0 <= j - 1 < len(phi):
            c = c - Y * phi[j - 1]
        c = c + Z * psi[j]
        out.append(c)
    return out


def boundary_form(fp: FieldPolynomials) -> MPoly:
    """The homogeneous discriminant D(X, Y, Z) (unnormalized)."""
    if fp.F_degree == 1:
        raise ValueError("a linear field has a point as its boundary")
    return discriminant(moving_line_coeffs(fp))


def dehomogenize(D: MPoly) -> MPoly:
    X, Y = MPoly.gens_of(D.field, "XY")
    return D.subs({"X": X, "Y": Y, "Z": 1})


def closed_form_quartic(f: StandardFormField) -> MPoly:
    """Closed form of the cubic-field boundary in standard form, with its factor 4 mu."""
    h, k, mu = f.triple()
    X, Y = MPoly.gens_of(f.field, "XY")
    inner = (mu * mu * X ** 4 - 12 * h * mu * mu * X ** 3 - 2 * mu * X ** 2 * Y ** 2
             - 20 * k * mu * X ** 2 * Y + 4 * mu * (12 * h * h * mu + k * k) * X ** 2
             - 20 * h * mu * X * Y ** 2 + 88 * h * k * mu * X * Y
             - 32 * h * mu * (2 * h * h * mu + k * k) * X
             + Y ** 4 - 12 * k * Y ** 3 + 4 * (h * h * mu + 12 * k * k) * Y ** 2
             - 32 * k * (h * h * mu + 2 * k * k) * Y + 64 * h * h * k * k * mu)
    return inner * (4 * mu)


def parabola_closed_form(f: StandardFormField) -> MPoly:
    r = f.k / f.h
    X, Y = MPoly.gens_of(f.field, "XY")
    return (X * r - Y) ** 2 - (X * r + Y - 2 * f.k) * (8 * f.k)


@dataclass(frozen=True)
class BoundaryCurve:
    """Boundary of a bisector field: a point, a parabola or a quartic.

    ``poly`` is Delta(X, Y) scaled so its lexicographically leading
    coefficient is 1; ``fp`` is the field's polynomials in the same coordinates.
    """

    variant: str
    fp: FieldPolynomials
    point: Point | None = None
    poly: MPoly | None = None

    @property
    def field(self) -> Field:
        return self.fp.field

    def homogeneous(self) -> MPoly:
        return self.poly.homogenize("Z")

    def __str__(self):
        if self.variant == POINT:
            return f"point {self.point}"
        return f"{self.variant}: {self.poly} = 0"


def _linear_point(fp: FieldPolynomials) -> Point:
    # phi = c, psi = a T + b U: every moving line passes through (-a/c, b/c)
    c = fp.phi.coeffs[0]
    a, b = fp.psi.coeffs
    return Point(-a / c, b / c)


def boundary_of_polynomials(fp: FieldPolynomials) -> BoundaryCurve:
    """Boundary computed directly from the moving line of ``fp``."""
    if fp.kind == LINEAR:
        return BoundaryCurve(POINT, fp, point=_linear_point(fp))
    delta = dehomogenize(boundary_form(fp)).normalized()
    return BoundaryCurve(PARABOLA if fp.kind == QUADRATIC else QUARTIC, fp, poly=delta)


def boundary(f: StandardFormField) -> BoundaryCurve:
    """Boundary of a standard field, checked against its closed form."""
    fp = polynomials_from_triple(f)
    if f.kind == LINEAR:
        return BoundaryCurve(POINT, fp, point=f.center)
    raw = dehomogenize(boundary_form(fp))
    closed = closed_form_quartic(f) if f.kind == CUBIC else parabola_closed_form(f)
    if raw != closed:
        raise IdentityCheckFailed(f"discriminant {raw} differs from closed form {closed}")
    return BoundaryCurve(QUARTIC if f.kind == CUBIC else PARABOLA, fp, poly=raw.normalized())


def pull_back(poly: MPoly, m: AffineMap) -> MPoly:
    """``poly o m`` as a polynomial in X, Y."""
    X, Y = MPoly.gens_of(poly.field, "XY")
    return poly.subs({"X": X * m.a + Y * m.b + m.e, "Y": X * m.c + Y * m.d + m.f})


def boundary_of_quadrilateral(q: Quadrilateral) -> BoundaryCurve:
    """Standardize, take the closed-form boundary and map it back; cross-checked
    against the discriminant computed directly from ``q``."""
    m, f = standardize(q)
    std = boundary(f)
    fp = field_polynomials(q)
    direct = boundary_of_polynomials(fp)
    if std.variant == POINT:
        pt = m.inverse()(std.point)
        if pt != direct.point:
            raise IdentityCheckFailed(f"center {pt} differs from pencil point {direct.point}")
        return BoundaryCurve(POINT, fp, point=pt)
    poly = pull_back(std.poly, m).normalized()
    if poly != direct.poly:
        raise IdentityCheckFailed("mapped-back boundary differs from the direct discriminant")
    return BoundaryCurve(std.variant, fp, poly=poly)


def reduced_dual_poly(fp: FieldPolynomials) -> MPoly:
    """F(T, U, V) = psi(T, U) - V phi(T, U)."""
    fld = fp.field
    T, U, V = MPoly.gens_of(fld, "TUV")
    return _form_poly(fp.psi, T, U) - V * _form_poly(fp.phi, T, U)


def _form_poly(form: BinaryForm, T: MPoly, U: MPoly) -> MPoly:
    d = form.degree
    total = T * 0
    for i, c in enumerate(form.coeffs):
        if c:
            total = total + T ** (d - i) * U ** i * c
    return total


def dual_map_f(fp: FieldPolynomials, dp: ProjectivePoint) -> ProjectivePoint:
    """[t:u:v] on V(F) to [F_T : -F_U : F_V], the point where the line touches the boundary."""
    F = reduced_dual_poly(fp)
    vals = tuple(dp)
    if F(*vals):
        raise PointNotOnCurve(f"{dp} is not on the reduced dual curve")
    g = (F.diff("T")(*vals), -F.diff("U")(*vals), F.diff("V")(*vals))
    if not any(g):
        raise SingularPoint(f"{dp} is a singular point of the reduced dual curve")
    return ProjectivePoint.of(*g)


def dual_map_d(D: MPoly, pp: ProjectivePoint) -> ProjectivePoint:
    """[x:y:z] on V(D) to the tangent line [t:u:v] = [D_X : -D_Y : D_Z].

    The sign on D_Y matches the line convention t X - u Y + v Z = 0.
    """
    vals = tuple(pp)
    if D(*vals):
        raise PointNotOnCurve(f"{pp} is not on the boundary")
    g = (D.diff("X")(*vals), -D.diff("Y")(*vals), D.diff("Z")(*vals))
    if not any(g):
        raise SingularPoint(f"{pp} is a singular point of the boundary")
    return ProjectivePoint.of(*g)


def line_dual_point(ell: Line) -> ProjectivePoint:
    return ProjectivePoint.of(ell.t, ell.u, ell.v)


def tangency_point(fp: FieldPolynomials, ell: Line) -> Point:
    """Finite point where a moving bisector touches the boundary (F_V = -phi is never 0)."""
    x, y, z = dual_map_f(fp, line_dual_point(ell))
    return Point(x / z, y / z)


def translate(poly: MPoly, pt: Point) -> MPoly:
    X, Y = MPoly.gens_of(poly.field, "XY")
    return poly.subs({"X": X + pt.x, "Y": Y + pt.y})


def tangent_cone(poly: MPoly, pt: Point) -> MPoly:
    """Lowest-degree homogeneous part of ``poly`` translated to ``pt``."""
    shifted = translate(poly, pt)
    return shifted.homogeneous_part(shifted.lowest_degree())


def tangency_check(delta: MPoly, ell: Line, pt: Point) -> bool:
    """True iff ``ell`` passes through ``pt`` on the curve and is tangent there.

    Smooth points use the gradient; singular points use the tangent cone,
    which at a cusp is a power of the single tangent line.
    """
    if delta(pt.x, pt.y):
        raise PointNotOnCurve(f"{pt} is not on the curve")
    if not ell.contains(pt):
        return False
    cone = tangent_cone(delta, pt)
    # the direction of t X - u Y = 0 is (u, t)
    return not cone(ell.u, ell.t)


def is_singular(delta: MPoly, pt: Point) -> bool:
    return not (delta(pt.x, pt.y) or delta.diff("X")(pt.x, pt.y) or delta.diff("Y")(pt.x, pt.y))


def curve_points(delta: MPoly) -> list[Point]:
    """All GF(p)-points of the affine curve."""
    fld = delta.field
    if fld.kind != PRIME:
        raise UnsupportedInMode("point enumeration needs a finite field")
    els = fld.elements()
    return [Point(x, y) for x in els for y in els if not delta(x, y)]


def flex_form(fp: FieldPolynomials) -> BinaryForm:
    """Determinant of the second partials of (T phi, -U phi, psi).

    Its zeros are the parameters whose tangency points are the cusps of the
    boundary (in characteristic 0).
    """
    fld = fp.field
    t_form = BinaryForm.linear(fld, 1, 0)
    u_form = BinaryForm.linear(fld, 0, 1)
    comps = [t_form * fp.phi, -(u_form * fp.phi), fp.psi]
    rows = []
    for c in comps:
        rows.append([c.derivative_t().derivative_t(), c.derivative_t().derivative_u(),
                     c.derivative_u().derivative_u()])
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def singular_points(curve: BoundaryCurve) -> set[Point]:
    """Finite singular points of the boundary that are defined over the base field."""
    if curve.variant == POINT:
        return set()
    delta = curve.poly
    fld = curve.field
    if fld.kind == PRIME:
        return {pt for pt in curve_points(delta) if is_singular(delta, pt)}
    if fld.kind != RATIONAL:
        raise UnsupportedInMode("singular points need explicit roots")
    det = flex_form(curve.fp)
    if det.is_zero():
        raise IdentityCheckFailed("flex form vanishes identically in characteristic 0")
    out = set()
    for s in p1_roots(det):
        ell = moving_bisector(curve.fp, s)
        if ell is None:
            continue
        pt = tangency_point(curve.fp, ell)
        if is_singular(delta, pt):
            out.add(pt)
    return out


def moving_bisectors(fp: FieldPolynomials) -> set[Line]:
    """All moving bisectors over GF(p), one per slope with phi(t, u) != 0."""
    from .forms import p1_points

    if fp.field.kind != PRIME:
        raise UnsupportedInMode("enumeration needs a finite field")
    return {ell for s in p1_points(fp.field) if (ell := moving_bisector(fp, s)) is not None}


def tangent_lines(delta: MPoly, lines) -> set[Line]:
    """Lines among ``lines`` tangent to the curve at one of its GF(p)-points."""
    pts = curve_points(delta)
    out = set()
    for ell in lines:
        if any(tangency_check(delta, ell, pt) for pt in pts if ell.contains(pt)):
            out.add(ell)
    return out


def canonical_curves(field: Field) -> dict[str, MPoly]:
    """The deltoid (mu = -1) and cardioid (mu = 1) boundaries with center (0, 1/2)."""
    return {
        "deltoid": boundary(StandardFormField.of(field, 0, "1/2", -1)).poly,
        "cardioid": boundary(StandardFormField.of(field, 0, "1/2", 1)).poly,
    }
