"""Shape/position polynomials of a quadrilateral and the dual-curve bisector test."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import IdentityCheckFailed, NoFiniteDiagonalPoint, UnsupportedInMode
from .fields import PRIME, Field, FieldElement
from .forms import BinaryForm, gcd_forms, p1_roots
from .mpoly import MPoly
from .plane import Line, Point, Quadrilateral, centroid, intersect

LINEAR, QUADRATIC, CUBIC = "linear", "quadratic", "cubic"
CLASS_BY_DEGREE = {1: LINEAR, 2: QUADRATIC, 3: CUBIC}


def _side_factor(field: Field, line: Line) -> BinaryForm:
    # u_L*T - t_L*U vanishes exactly at the slope of L
    return BinaryForm.linear(field, line.u, -line.t)


def theta_factors(q: Quadrilateral) -> tuple[BinaryForm, BinaryForm, BinaryForm, BinaryForm]:
    """``(Theta_A, Theta_B, Theta_A1, Theta_B1)``.

    Theta_L omits the factor of side L from Theta; for B and B1 the product
    is taken from -Theta instead.
    """
    f = q.field
    fa, fb, fa1, fb1 = (_side_factor(f, s) for s in q.sides)
    return (fb * fa1 * fb1, -(fa * fa1 * fb1), fa * fb * fb1, -(fa * fb * fa1))


def shape_poly(q: Quadrilateral) -> BinaryForm:
    """Phi = alpha T^2 - 2 beta T U + gamma U^2, checked against its defining sums."""
    A, B, A1, B1 = q.sides
    alpha = (A.t * B.u * A1.u * B1.u - A.u * B.t * A1.u * B1.u
             + A.u * B.u * A1.t * B1.u - A.u * B.u * A1.u * B1.t)
    beta = A.t * B.u * A1.t * B1.u - A.u * B.t * A1.u * B1.t
    gamma = (A.t * B.t * A1.t * B1.u - A.t * B.t * A1.u * B1.t
             + A.t * B.u * A1.t * B1.t - A.u * B.t * A1.t * B1.t)
    phi = BinaryForm(q.field, [alpha, -2 * beta, gamma])

    thetas = theta_factors(q)
    f = q.field
    t_form = BinaryForm.linear(f, 1, 0)
    u_form = BinaryForm.linear(f, 0, 1)
    sum_t = _weighted_sum(f, [s.t for s in q.sides], thetas)
    sum_u = _weighted_sum(f, [s.u for s in q.sides], thetas)
    if t_form * phi != sum_t or u_form * phi != sum_u:
        raise IdentityCheckFailed("T*Phi or U*Phi disagrees with the Theta sums")
    return phi


def _weighted_sum(field, weights, forms) -> BinaryForm:
    total = BinaryForm.zero(field, forms[0].degree)
    for w, form in zip(weights, forms):
        total = total + form * w
    return total


def position_poly(q: Quadrilateral) -> BinaryForm:
    """Psi = sum of v_L * Theta_L over the sides; may be the zero form."""
    return _weighted_sum(q.field, [s.v for s in q.sides], theta_factors(q))


@dataclass(frozen=True)
class FieldPolynomials:
    """Shape and position polynomials with their reduced pair (phi, psi)."""

    Phi: BinaryForm
    Psi: BinaryForm
    phi: BinaryForm
    psi: BinaryForm

    @property
    def field(self) -> Field:
        return self.Phi.field

    @property
    def F_degree(self) -> int:
        return 1 + self.phi.degree

    @property
    def kind(self) -> str:
        return CLASS_BY_DEGREE[self.F_degree]

    def dual_value(self, t, u, v) -> FieldElement:
        """Psi(t, u) - v Phi(t, u)."""
        return self.Psi(t, u) - v * self.Phi(t, u)

    def reduced_value(self, t, u, v) -> FieldElement:
        """F(t, u, v) = psi(t, u) - v phi(t, u)."""
        return self.psi(t, u) - v * self.phi(t, u)


def reduce_dual(Phi: BinaryForm, Psi: BinaryForm) -> FieldPolynomials:
    """Divide out gcd(Phi, Psi); phi is scaled to leading coefficient 1."""
    if Phi.is_zero():
        raise ValueError("the shape polynomial is never zero")
    field = Phi.field
    if Psi.is_zero():
        return FieldPolynomials(Phi, Psi, BinaryForm.constant(field, 1), BinaryForm.zero(field, 1))
    g = gcd_forms(Phi, Psi)
    phi = Phi.divexact(g)
    psi = Psi.divexact(g)
    lead = phi.leading_coefficient().inverse()
    phi, psi = phi * lead, psi * lead
    if Phi * psi != Psi * phi:
        raise IdentityCheckFailed("Phi*psi != Psi*phi after reduction")
    return FieldPolynomials(Phi, Psi, phi, psi)


def field_polynomials(q: Quadrilateral) -> FieldPolynomials:
    return reduce_dual(shape_poly(q), position_poly(q))


def classify(q: Quadrilateral) -> str:
    return field_polynomials(q).kind


def is_bisector_dual(fp: FieldPolynomials, ell: Line) -> bool:
    """Bisector test through the dual curve: Psi(t,u) - v Phi(t,u) = 0."""
    return not fp.dual_value(ell.t, ell.u, ell.v)


def same_bisector_field(q1: Quadrilateral, q2: Quadrilateral) -> bool:
    """True iff (Phi1, Psi1) = lambda (Phi2, Psi2) for one nonzero lambda."""
    v1 = shape_poly(q1).coeffs + position_poly(q1).coeffs
    v2 = shape_poly(q2).coeffs + position_poly(q2).coeffs
    return _proportional(v1, v2)


def _proportional(v1, v2) -> bool:
    lam = None
    for a, b in zip(v1, v2):
        if bool(a) != bool(b):
            return False
        if a and lam is None:
            lam = a / b
    if lam is None:
        return True
    return all(a == lam * b for a, b in zip(v1, v2))


def is_null(fp: FieldPolynomials, ell: Line) -> bool:
    return not fp.Phi(ell.t, ell.u)


def null_slopes(fp: FieldPolynomials):
    """Slopes of the pencils of parallel bisectors: common P^1 zeros of Phi and Psi."""
    if fp.F_degree == 3:
        return set()
    common = fp.Phi.divexact(fp.phi)
    return p1_roots(common)


def count_parallel_pencils(fp: FieldPolynomials) -> int:
    try:
        n = len(null_slopes(fp))
    except UnsupportedInMode:
        # Phi has distinct roots, so the common factor splits into deg(common) slopes
        return 3 - fp.F_degree
    if n != 3 - fp.F_degree:
        raise IdentityCheckFailed(f"{n} pencils but deg F = {fp.F_degree}")
    return n


def diagonal_points(q: Quadrilateral) -> list[Point]:
    """Finite meeting points of the opposite pairs and of the diagonals."""
    pts = []
    pairs = list(q.opposite_pairs())
    diags = q.diagonals()
    if diags is not None:
        pairs.append(diags)
    for l1, l2 in pairs:
        if l1 == l2:
            continue
        p = intersect(l1, l2)
        if isinstance(p, Point):
            pts.append(p)
    return pts


def bisector_locus(q: Quadrilateral) -> MPoly:
    """The conic Phi(Y - k, X - h) - Phi(b - k, a - h) = 0 through the bisector midpoints."""
    pts = diagonal_points(q)
    if not pts:
        raise NoFiniteDiagonalPoint("no opposite pair or diagonal pair meets at a finite point")
    a_b = pts[0]
    c = centroid(q)
    phi = shape_poly(q)
    f = q.field
    X, Y = MPoly.gens_of(f, "XY")
    lhs = _form_at(phi, Y - c.y, X - c.x)
    rhs = phi(a_b.y - c.y, a_b.x - c.x)
    return lhs - rhs


def _form_at(form: BinaryForm, t, u):
    d = form.degree
    total = 0 * t
    for i, c in enumerate(form.coeffs):
        if c:
            total = total + t ** (d - i) * u ** i * c
    return total


def dual_line_set(fp: FieldPolynomials) -> set[Line]:
    """Every line over GF(p) on the dual curve."""
    if fp.field.kind != PRIME:
        raise UnsupportedInMode("line enumeration needs a finite field")
    from .kernels import dual_mask, mask_to_lines

    p = fp.field.p
    mask = dual_mask(p, [c.value for c in fp.Phi.coeffs], [c.value for c in fp.Psi.coeffs])
    return mask_to_lines(fp.field, mask)

