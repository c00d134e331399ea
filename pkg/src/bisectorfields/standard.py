"""Standard form: axes as a pair of bisectors, center (h, k) and coefficient mu.

In standard form the shape and position polynomials are
``Phi = T^2 - mu U^2`` and ``Psi = 4 T U (k T + mu h U)``, so the triple
``(h, k, mu)`` determines the bisector field.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    CUBIC,
    LINEAR,
    QUADRATIC,
    FieldPolynomials,
    field_polynomials,
    reduce_dual,
)
from .errors import (
    NoNonParallelPair,
    NotAPair,
    NotASquare,
    NotStandardForm,
    ParallelPair,
    UnrealizableField,
    UnsupportedInMode,
    WrongClass,
)
from .fields import REAL, Field, FieldElement
from .forms import BinaryForm, P1Point, p1_roots
from .plane import AffineMap, Line, Point, Quadrilateral, intersect


def classify_triple(h: FieldElement, k: FieldElement, mu: FieldElement) -> str:
    if not h and not k:
        return LINEAR
    if h and k and h * h * mu == k * k:
        return QUADRATIC
    return CUBIC


@dataclass(frozen=True)
class StandardFormField:
    h: FieldElement
    k: FieldElement
    mu: FieldElement
    kind: str = ""

    def __post_init__(self):
        if not self.mu:
            raise ValueError("the coefficient mu must be nonzero")
        if not (self.h.field == self.k.field == self.mu.field):
            raise ValueError("h, k and mu must share a field")
        expected = classify_triple(self.h, self.k, self.mu)
        if not self.kind:
            object.__setattr__(self, "kind", expected)
        elif self.kind != expected:
            raise ValueError(f"class {self.kind!r} does not match triple (expected {expected!r})")

    @classmethod
    def of(cls, field: Field, h, k, mu) -> StandardFormField:
        return cls(field(h), field(k), field(mu))

    @property
    def field(self) -> Field:
        return self.mu.field

    @property
    def center(self) -> Point:
        return Point(self.h, self.k)

    def triple(self):
        return (self.h, self.k, self.mu)

    def __str__(self):
        return f"(h, k, mu) = ({self.h}, {self.k}, {self.mu}) [{self.kind}]"


def standard_polynomials(f: StandardFormField) -> tuple[BinaryForm, BinaryForm]:
    fld = f.field
    Phi = BinaryForm(fld, [1, 0, -f.mu])
    Psi = BinaryForm(fld, [0, 4 * f.k, 4 * f.mu * f.h, 0])
    return Phi, Psi


def polynomials_from_triple(f: StandardFormField) -> FieldPolynomials:
    fp = reduce_dual(*standard_polynomials(f))
    if fp.kind != f.kind:
        raise ValueError(f"class rule says {f.kind} but the reduced dual polynomial says {fp.kind}")
    return fp


def read_standard(Phi: BinaryForm, Psi: BinaryForm) -> StandardFormField:
    """Read (h, k, mu) from polynomials known up to a common scalar."""
    alpha, mid, gamma = Phi.coeffs
    c0, c1, c2, c3 = Psi.coeffs if Psi.degree == 3 else (Psi.field.zero,) * 4
    if not alpha or mid or not gamma or c0 or c3:
        raise NotStandardForm(f"Phi = {Phi}, Psi = {Psi} do not have the standard shape")
    mu = -gamma / alpha
    k = c1 / (4 * alpha)
    h = c2 / (4 * alpha * mu)
    return StandardFormField(h, k, mu)


def transform_polynomials(Phi: BinaryForm, Psi: BinaryForm, m: AffineMap):
    """Shape and position polynomials of the image of a field under ``m``.

    A line ``t X - u Y + v = 0`` maps to ``t' X - u' Y + v' = 0`` with
    ``t = a t' - c u'``, ``u = d u' - b t'`` and ``v = v' + e t' - f u'``.
    """
    fld = Phi.field
    Phi2 = Phi.compose_linear(m.a, -m.c, -m.b, m.d)
    Psi_c = Psi.compose_linear(m.a, -m.c, -m.b, m.d) if Psi.degree == 3 else BinaryForm.zero(fld, 3)
    shift = BinaryForm.linear(fld, m.e, -m.f)
    Psi2 = Psi_c - shift * Phi2
    return Phi2, Psi2


def image_standard(f: StandardFormField, m: AffineMap) -> StandardFormField:
    return read_standard(*transform_polynomials(*standard_polynomials(f), m))


def _pair_candidates(q: Quadrilateral):
    yield (q.A, q.A1)
    yield (q.B, q.B1)
    diags = q.diagonals()
    if diags is not None:
        yield diags


def axes_map(l1: Line, l2: Line) -> AffineMap:
    """Affine map sending ``l1`` to ``Y = 0`` and ``l2`` to ``X = 0``."""
    p = intersect(l1, l2)
    if not isinstance(p, Point):
        raise ParallelPair(f"{l1} and {l2} are parallel")
    fld = l1.field
    # columns (u, t) are the directions; the linear part is their inverse
    a, b, c, d = l1.u, l2.u, l1.t, l2.t
    det = a * d - b * c
    ia, ib, ic, id_ = d / det, -b / det, -c / det, a / det
    lin = AffineMap(ia, ib, ic, id_, fld.zero, fld.zero)
    return lin.compose(AffineMap.translation(fld, -p.x, -p.y))


def standardize(q: Quadrilateral) -> tuple[AffineMap, StandardFormField]:
    """Map ``q`` to standard form using the first non-parallel pair among
    (A, A1), (B, B1) and the diagonals."""
    fp = field_polynomials(q)
    for l1, l2 in _pair_candidates(q):
        if l1.is_parallel(l2):
            continue
        m = axes_map(l1, l2)
        f = read_standard(*transform_polynomials(fp.Phi, fp.Psi, m))
        if f.kind != fp.kind:
            raise ValueError("class changed under standardization")
        return m, f
    raise NoNonParallelPair("all candidate pairs are parallel")


def equal_standard(f1: StandardFormField, f2: StandardFormField) -> bool:
    return f1.triple() == f2.triple()


def well_centered_form(f: StandardFormField) -> BinaryForm:
    """``h T^3 + 3 k T^2 U + 3 h mu T U^2 + k mu U^3``."""
    return BinaryForm(f.field, [f.h, 3 * f.k, 3 * f.h * f.mu, f.k * f.mu])


def well_centered(f: StandardFormField) -> bool:
    if f.kind != CUBIC or f.field.kind == REAL:
        return True
    return bool(p1_roots(well_centered_form(f)))


def center_lines(f: StandardFormField) -> list[Line]:
    """Bisectors through the center of a cubic field, one per root of the well-centered form."""
    if f.kind != CUBIC:
        raise WrongClass("center lines are only enumerated for cubic fields")
    out = []
    for r in sorted(p1_roots(well_centered_form(f)), key=_p1_key):
        out.append(Line.of(r.t, r.u, r.u * f.k - r.t * f.h))
    return out


def _p1_key(pt: P1Point):
    return (0, pt.t.value) if pt.u else (1, 0)


def partner(f: StandardFormField, ell: Line) -> Line:
    """The line paired with ``ell`` in the field of ``f``.

    A non-null bisector of slope [t:u] pairs with the bisector of slope
    [mu u : t]; a null bisector pairs with its reflection through the center.
    """
    Phi, Psi = standard_polynomials(f)
    if Psi(ell.t, ell.u) - ell.v * Phi(ell.t, ell.u):
        raise ValueError(f"{ell} is not a bisector of {f}")
    if Phi(ell.t, ell.u):
        t2, u2 = f.mu * ell.u, ell.t
        v2 = Psi(t2, u2) / Phi(t2, u2)
        return Line.of(t2, u2, v2, f.field)
    # parallel line through 2c - m for any point m on ell
    c = f.center
    if ell.u:
        m = Point(f.field.zero, ell.v)
    else:
        m = Point(-ell.v, f.field.zero)
    mx, my = 2 * c.x - m.x, 2 * c.y - m.y
    return Line(ell.t, ell.u, ell.u * my - ell.t * mx)


def retarget(f: StandardFormField, mu2, pair: tuple[Line, Line]) -> AffineMap:
    """Affine map taking the pair (l, l1) to the axes X = 0 and Y = 0 and the
    field of ``f`` to a standard field with coefficient ``mu2``."""
    fld = f.field
    mu1, mu2 = f.mu, fld(mu2)
    ell, ell1 = pair
    t, u, t1, u1 = ell.t, ell.u, ell1.t, ell1.u
    if ell.is_parallel(ell1):
        raise ParallelPair(f"{ell} and {ell1} are parallel")
    if t * t1 != mu1 * u * u1:
        raise NotAPair(f"slopes [{t}:{u}] and [{t1}:{u1}] are not paired under mu = {mu1}")
    theta_sq = (mu1 * mu2).inverse()
    if not theta_sq.is_square():
        raise NotASquare(f"mu1 * mu2 = {mu1 * mu2} is not a square")
    theta = _sqrt_or_none(theta_sq)
    if theta is None:
        raise NotASquare(f"no explicit square root of {theta_sq}")
    lin = AffineMap(mu1 * theta * t, -mu1 * theta * u, -mu1 * u, t, fld.zero, fld.zero)
    p = intersect(lin(ell), lin(ell1))
    return AffineMap.translation(fld, -p.x, -p.y).compose(lin)


def scaling(field: Field, s) -> AffineMap:
    return AffineMap.of(field, s, 0, 0, s)


def _normalizer(f: StandardFormField, mu_target) -> AffineMap:
    """Map a well-centered cubic field to the standard field (0, 1/2, mu_target)."""
    ell = center_lines(f)[0]
    m = retarget(f, mu_target, (ell, partner(f, ell)))
    c = m(f.center)
    if c.x or not c.y:
        raise ValueError("retargeted center is not on the Y-axis away from the origin")
    return scaling(f.field, 1 / (2 * c.y)).compose(m)


def parabola_normalizer(f: StandardFormField) -> AffineMap:
    """Affine map carrying the boundary parabola of a quadratic field onto
    Y = X^2 and its null pencil onto lines parallel to the X-axis."""
    if f.kind != QUADRATIC:
        raise WrongClass(f"parabola normalizer needs a quadratic field, got {f.kind}")
    r = f.k / f.h
    k = f.k
    return AffineMap(r, -f.field.one, 8 * k * r, 8 * k, f.field.zero, -16 * k * k)


class Verdict(str, enum.Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not"
    UNDECIDED = "undecided"


def affinely_equivalent(f1: StandardFormField, f2: StandardFormField) -> Verdict:
    if f1.kind != f2.kind:
        return Verdict.NOT_EQUIVALENT
    if f1.kind in (LINEAR, QUADRATIC):
        return Verdict.EQUIVALENT
    if not (f1.mu * f2.mu).is_square():
        return Verdict.NOT_EQUIVALENT
    w1, w2 = well_centered(f1), well_centered(f2)
    if w1 and w2:
        return Verdict.EQUIVALENT
    if w1 != w2:
        # a bisector through the center is carried to one through the image center
        return Verdict.NOT_EQUIVALENT
    return Verdict.UNDECIDED


def equivalence_witness(f1: StandardFormField, f2: StandardFormField) -> AffineMap | None:
    """An explicit affine map sending the field of ``f1`` onto that of ``f2``,
    or ``None`` when none is constructible here."""
    if affinely_equivalent(f1, f2) != Verdict.EQUIVALENT:
        return None
    fld = f1.field
    try:
        if f1.kind == CUBIC:
            n1 = _normalizer(f1, f2.mu)
            n2 = _normalizer(f2, f2.mu)
            m = n2.inverse().compose(n1)
        elif f1.kind == QUADRATIC:
            m = parabola_normalizer(f2).inverse().compose(parabola_normalizer(f1))
        else:
            r1, r2 = _sqrt_or_none(f1.mu), _sqrt_or_none(f2.mu)
            if r1 is None or r2 is None:
                return None
            m = AffineMap.of(fld, 1, 0, 0, r2 / r1)
    except (NotASquare, UnrealizableField, UnsupportedInMode):
        return None
    if not _same_field(image_polys(f1, m), standard_polynomials(f2)):
        raise ValueError("constructed witness does not carry the fields onto each other")
    return m


def _sqrt_or_none(x):
    try:
        return x.sqrt()
    except UnsupportedInMode:
        return None


def image_polys(f: StandardFormField, m: AffineMap):
    return transform_polynomials(*standard_polynomials(f), m)


def _same_field(pp1, pp2) -> bool:
    from .core import _proportional

    return _proportional(pp1[0].coeffs + pp1[1].coeffs, pp2[0].coeffs + pp2[1].coeffs)


def quadrilateral_from_triple(f: StandardFormField) -> Quadrilateral:
    """A quadrilateral whose bisector field is the standard field ``f``.

    Cubic: A is Y = 0, A1 is X = 0 and B, B1 have slopes s and mu/s with
    4k = v_B + v_B1 and -4 h mu = t_B1 v_B + t_B v_B1. Quadratic: a trapezoid
    with B parallel to B1 along the null slope. Linear: a parallelogram with
    sides of slopes +-sqrt(mu) centered at the origin.
    """
    fld = f.field
    h, k, mu = f.triple()
    if f.kind == LINEAR:
        try:
            r = mu.sqrt()
        except UnsupportedInMode:
            r = None
        if r is None:
            raise UnrealizableField(f"linear field needs mu = {mu} to be a square with explicit root")
        return Quadrilateral(
            Line.of(r, 1, 1, fld), Line.of(-r, 1, 1, fld),
            Line.of(r, 1, -1, fld), Line.of(-r, 1, -1, fld),
        )
    A = Line.of(0, 1, 0, fld)
    A1 = Line.of(1, 0, 0, fld)
    if f.kind == QUADRATIC:
        tb = -k / h
        return Quadrilateral(A, Line.of(tb, 1, 0, fld), A1, Line.of(tb, 1, 4 * k, fld))
    limit = fld.p if fld.is_prime else 64
    for s_int in range(1, limit):
        s = fld(s_int)
        if not s or s * s == mu:
            continue
        vb = -4 * s * (h * mu + k * s) / (mu - s * s)
        return Quadrilateral(A, Line.of(s, 1, vb, fld), A1, Line.of(mu / s, 1, 4 * k - vb, fld))
    raise UnrealizableField(f"no slope s with s^2 != mu = {mu} in {fld}")
