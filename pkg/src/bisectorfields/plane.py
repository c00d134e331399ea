"""Affine plane geometry over an exact field.

Lines are ``t*X - u*Y + v = 0`` in canonical form: ``u = 1``, or ``u = 0`` and
``t = 1``. Points at infinity only come out of :func:`intersect` and
:func:`mid_pair`; everything else works with finite points.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CoincidentPoints,
    IdenticalLines,
    InvalidQuadrilateral,
    SingularMap,
    VertexAtInfinity,
)
from .fields import Field, FieldElement
from .forms import P1Point


@dataclass(frozen=True)
class Line:
    t: FieldElement
    u: FieldElement
    v: FieldElement

    @classmethod
    def of(cls, t, u, v, field: Field | None = None) -> Line:
        """Canonical line through any nonzero scaling of ``(t, u, v)``."""
        if field is None:
            field = next(x.field for x in (t, u, v) if isinstance(x, FieldElement))
        t, u, v = field(t), field(u), field(v)
        if u:
            return cls(t / u, field.one, v / u)
        if not t:
            raise ValueError("(t, u) = (0, 0) does not define a line")
        return cls(field.one, field.zero, v / t)

    def __post_init__(self):
        if self.u:
            ok = self.u == 1
        else:
            ok = self.t == 1
        if not ok:
            raise ValueError(f"non-canonical line coefficients ({self.t}, {self.u}, {self.v}); use Line.of")

    @property
    def field(self) -> Field:
        return self.t.field

    @property
    def slope(self) -> P1Point:
        return P1Point(self.t, self.u)

    def contains(self, pt: Point) -> bool:
        return not (self.t * pt.x - self.u * pt.y + self.v)

    def is_parallel(self, other: Line) -> bool:
        return self.t == other.t and self.u == other.u

    def __str__(self):
        return f"{self.t}*X - {self.u}*Y + {self.v} = 0"


@dataclass(frozen=True)
class Point:
    x: FieldElement
    y: FieldElement

    @property
    def field(self) -> Field:
        return self.x.field

    def __str__(self):
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class PointAtInfinity:
    """The point at infinity shared by all lines with the given slope."""

    slope: P1Point

    def __str__(self):
        return f"inf{self.slope}"


PlanePoint = Point | PointAtInfinity


def line_through(p: Point, q: Point) -> Line:
    if p == q:
        raise CoincidentPoints(f"{p} = {q}")
    dx, dy = q.x - p.x, q.y - p.y
    # direction (dx, dy) satisfies t*dx - u*dy = 0 for t = dy, u = dx
    t, u = dy, dx
    return Line.of(t, u, u * p.y - t * p.x)


def intersect(l1: Line, l2: Line) -> PlanePoint:
    if l1 == l2:
        raise IdenticalLines(str(l1))
    den = l1.t * l2.u - l2.t * l1.u
    if not den:
        return PointAtInfinity(l1.slope)
    x = (l1.u * l2.v - l2.u * l1.v) / den
    y = (l1.t * l2.v - l2.t * l1.v) / den
    return Point(x, y)


def mid_pair(pair: tuple[Line, Line], ell: Line) -> PlanePoint | None:
    """Midpoint on ``ell`` of its crossings with the two lines of ``pair``.

    Exactly one crossing at infinity gives the point at infinity of ``ell``;
    both at infinity, or ``ell`` in the pair, gives ``None`` (undefined).
    """
    if ell in pair:
        return None
    a, b = intersect(ell, pair[0]), intersect(ell, pair[1])
    fa, fb = isinstance(a, Point), isinstance(b, Point)
    if not fa and not fb:
        return None
    if fa != fb:
        return PointAtInfinity(ell.slope)
    half = ell.field(1) / 2
    return Point((a.x + b.x) * half, (a.y + b.y) * half)


@dataclass(frozen=True)
class Quadrilateral:
    """Sides in opposite-pair order: (A, A1) and (B, B1) are the opposite pairs."""

    A: Line
    B: Line
    A1: Line
    B1: Line

    def __post_init__(self):
        sides = self.sides
        if len(set(sides)) != 4:
            raise InvalidQuadrilateral("the four sides must be distinct lines")
        for l1, l2 in self.adjacent_pairs():
            if l1.is_parallel(l2):
                raise InvalidQuadrilateral(f"adjacent sides {l1} and {l2} are parallel")
        p = intersect(self.A, self.B)
        if self.A1.contains(p) and self.B1.contains(p):
            raise InvalidQuadrilateral("all four sides pass through one point")

    @property
    def sides(self) -> tuple[Line, Line, Line, Line]:
        return (self.A, self.B, self.A1, self.B1)

    @property
    def field(self) -> Field:
        return self.A.field

    def adjacent_pairs(self):
        return ((self.A, self.B), (self.B, self.A1), (self.A1, self.B1), (self.B1, self.A))

    def vertices(self) -> tuple[Point, Point, Point, Point]:
        """A.B, B.A1, A1.B1, B1.A."""
        out = tuple(intersect(l1, l2) for l1, l2 in self.adjacent_pairs())
        if not all(isinstance(v, Point) for v in out):
            raise VertexAtInfinity("a vertex lies at infinity")
        return out

    def diagonals(self) -> tuple[Line, Line] | None:
        """The lines A.B--A1.B1 and B.A1--B1.A; ``None`` when a pair of vertices coincides."""
        v0, v1, v2, v3 = self.vertices()
        if v0 == v2 or v1 == v3:
            return None
        return (line_through(v0, v2), line_through(v1, v3))

    def opposite_pairs(self):
        return ((self.A, self.A1), (self.B, self.B1))


def bisects_direct(q: Quadrilateral, ell: Line) -> bool:
    """Definition-level bisector test: a side, parallel to an opposite pair,
    or crossing all four sides with equal midpoints on both opposite pairs."""
    if ell in q.sides:
        return True
    for l1, l2 in q.opposite_pairs():
        if l1.is_parallel(l2) and ell.is_parallel(l1):
            return True
    if any(ell.is_parallel(s) for s in q.sides):
        return False
    return mid_pair((q.A, q.A1), ell) == mid_pair((q.B, q.B1), ell)


def centroid(q: Quadrilateral) -> Point:
    vs = q.vertices()
    quarter = q.field(1) / 4
    return Point(sum((v.x for v in vs), q.field.zero) * quarter,
                 sum((v.y for v in vs), q.field.zero) * quarter)


def bisector_midpoint(q: Quadrilateral, ell: Line) -> PlanePoint | None:
    """The shared midpoint of a bisector, from whichever opposite pair defines it."""
    for pair in q.opposite_pairs():
        m = mid_pair(pair, ell)
        if isinstance(m, Point):
            return m
    return None


@dataclass(frozen=True)
class AffineMap:
    """``(x, y) -> (a x + b y + e, c x + d y + f)``."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement
    e: FieldElement
    f: FieldElement

    def __post_init__(self):
        if not self.det:
            raise SingularMap("linear part has zero determinant")

    @classmethod
    def of(cls, field: Field, a, b, c, d, e=0, f=0) -> AffineMap:
        return cls(*(field(x) for x in (a, b, c, d, e, f)))

    @classmethod
    def identity(cls, field: Field) -> AffineMap:
        return cls.of(field, 1, 0, 0, 1)

    @classmethod
    def translation(cls, field: Field, e, f) -> AffineMap:
        return cls.of(field, 1, 0, 0, 1, e, f)

    @property
    def field(self) -> Field:
        return self.a.field

    @property
    def det(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def __call__(self, obj):
        return apply_affine(self, obj)

    def compose(self, other: AffineMap) -> AffineMap:
        """``self o other`` (apply ``other`` first)."""
        return AffineMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.a * other.e + self.b * other.f + self.e,
            self.c * other.e + self.d * other.f + self.f,
        )

    def __matmul__(self, other: AffineMap) -> AffineMap:
        return self.compose(other)

    def inverse(self) -> AffineMap:
        inv = self.det.inverse()
        a, b, c, d = self.d * inv, -self.b * inv, -self.c * inv, self.a * inv
        return AffineMap(a, b, c, d, -(a * self.e + b * self.f), -(c * self.e + d * self.f))


def apply_affine(m: AffineMap, obj):
    if isinstance(obj, Point):
        return Point(m.a * obj.x + m.b * obj.y + m.e, m.c * obj.x + m.d * obj.y + m.f)
    if isinstance(obj, PointAtInfinity):
        # direction (u, t) of lines with slope [t:u]
        du, dt = obj.slope.u, obj.slope.t
        return PointAtInfinity(P1Point.of(m.c * du + m.d * dt, m.a * du + m.b * dt))
    if isinstance(obj, Line):
        # normal row (t, -u) times the inverse linear part
        inv = m.det.inverse()
        nx, ny = obj.t, -obj.u
        tx = (nx * m.d - ny * m.c) * inv
        ty = (-nx * m.b + ny * m.a) * inv
        v = obj.v - (tx * m.e + ty * m.f)
        return Line.of(tx, -ty, v)
    if isinstance(obj, Quadrilateral):
        return Quadrilateral(*(apply_affine(m, s) for s in obj.sides))
    raise TypeError(f"cannot apply an affine map to {type(obj).__name__}")


def all_lines(field: Field):
    """Every line of the plane over GF(p): ``u = 1`` lines by (t, v), then vertical lines by v."""
    els = field.elements()
    one, zero = field.one, field.zero
    for t in els:
        for v in els:
            yield Line(t, one, v)
    for v in els:
        yield Line(one, zero, v)
