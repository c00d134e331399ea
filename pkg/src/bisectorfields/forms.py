"""Binary forms in (T, U): arithmetic, gcd, roots in P^1 and discriminants.

A form of nominal degree d is stored as ``(c0, ..., cd)`` meaning
``c0*T^d + c1*T^(d-1)*U + ... + cd*U^d``. Leading zeros are kept, so a
form always remembers its degree; the zero form is just all-zero coefficients.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import BothZero, FieldMismatch, UnsupportedInMode, ZeroForm
from .fields import PRIME, Field, FieldElement


@dataclass(frozen=True)
class P1Point:
    """A point ``[t : u]`` of the projective line, normalised to u = 1 or (1, 0)."""

    t: FieldElement
    u: FieldElement

    @classmethod
    def of(cls, t, u) -> P1Point:
        if not u:
            if not t:
                raise ValueError("[0:0] is not a point of P^1")
            return cls(t.field.one, t.field.zero)
        return cls(t / u, u.field.one)

    @property
    def field(self) -> Field:
        return self.t.field

    def __str__(self):
        return f"[{self.t}:{self.u}]"


def p1_points(field: Field) -> list[P1Point]:
    """All p + 1 points of P^1(GF(p)): ``[a:1]`` in residue order, then ``[1:0]``."""
    one = field.one
    return [P1Point(a, one) for a in field.elements()] + [P1Point(one, field.zero)]


class BinaryForm:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = tuple(field(c) for c in coeffs)
        if not cs:
            raise ValueError("a form needs at least one coefficient")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm is immutable")

    def __reduce__(self):
        return (BinaryForm, (self.field, self.coeffs))

    # construction helpers
    @classmethod
    def constant(cls, field: Field, c=1) -> BinaryForm:
        return cls(field, [c])

    @classmethod
    def zero(cls, field: Field, degree: int) -> BinaryForm:
        return cls(field, [0] * (degree + 1))

    @classmethod
    def linear(cls, field: Field, a, b) -> BinaryForm:
        """``a*T + b*U``."""
        return cls(field, [a, b])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, t, u):
        d = self.degree
        total = self.field.zero
        for i, c in enumerate(self.coeffs):
            if c:
                total = total + c * t ** (d - i) * u ** i
        return total

    def _check(self, other: BinaryForm):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: BinaryForm) -> BinaryForm:
        self._check(other)
        if self.degree != other.degree:
            if other.is_zero():
                return self
            if self.is_zero():
                return other
            raise ValueError("cannot add forms of different degree")
        return BinaryForm(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> BinaryForm:
        return BinaryForm(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            self._check(other)
            out = [self.field.zero] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] = out[i + j] + a * b
            return BinaryForm(self.field, out)
        c = self.field(other)
        return BinaryForm(self.field, [c * a for a in self.coeffs])

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def u_valuation(self) -> int:
        """Largest m with U^m dividing the form (number of leading zero coefficients)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ZeroForm("the zero form is divisible by every power of U")

    def t_valuation(self) -> int:
        for i, c in enumerate(reversed(self.coeffs)):
            if c:
                return i
        raise ZeroForm("the zero form is divisible by every power of T")

    def dehomogenize(self) -> list[FieldElement]:
        """Coefficients of f(T, 1), highest power first."""
        return list(self.coeffs)

    def derivative_t(self) -> BinaryForm:
        d = self.degree
        if d == 0:
            return BinaryForm.constant(self.field, 0)
        return BinaryForm(self.field, [(d - i) * c for i, c in enumerate(self.coeffs[:-1])])

    def derivative_u(self) -> BinaryForm:
        if self.degree == 0:
            return BinaryForm.constant(self.field, 0)
        return BinaryForm(self.field, [i * c for i, c in enumerate(self.coeffs) if i > 0])

    def compose_linear(self, p, q, r, s) -> BinaryForm:
        """``f(p T + q U, r T + s U)``."""
        t_img = BinaryForm.linear(self.field, p, q)
        u_img = BinaryForm.linear(self.field, r, s)
        d = self.degree
        total = BinaryForm.zero(self.field, d)
        for i, c in enumerate(self.coeffs):
            if c:
                term = BinaryForm.constant(self.field, c)
                for _ in range(d - i):
                    term = term * t_img
                for _ in range(i):
                    term = term * u_img
                total = total + term
        return total

    def leading_coefficient(self) -> FieldElement:
        """First nonzero coefficient in T-descending order."""
        for c in self.coeffs:
            if c:
                return c
        raise ZeroForm("the zero form has no leading coefficient")

    def monic(self) -> BinaryForm:
        return self * self.leading_coefficient().inverse()

    def divexact(self, other: BinaryForm) -> BinaryForm:
        """Quotient of an exact division; raises ValueError if ``other`` does not divide."""
        self._check(other)
        if other.is_zero():
            raise ZeroForm("division by the zero form")
        if self.is_zero():
            return BinaryForm.zero(self.field, self.degree - other.degree)
        a, b = self.u_valuation(), other.u_valuation()
        if a < b:
            raise ValueError("divisor does not divide the form")
        q, r = _poly_divmod(list(self.coeffs[a:]), list(other.coeffs[b:]))
        if any(r):
            raise ValueError("divisor does not divide the form")
        return BinaryForm(self.field, [0] * (a - b) + q)

    def __str__(self):
        return format_form(self.coeffs)

    def __repr__(self):
        return f"BinaryForm({self}; {self.field})"


def format_form(coeffs, tvar="T", uvar="U") -> str:
    d = len(coeffs) - 1
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "*".join(
            s for s in (_power(tvar, d - i), _power(uvar, i)) if s
        )
        cs = str(c)
        if not mono:
            parts.append(cs)
        elif cs == "1":
            parts.append(mono)
        elif cs == "-1":
            parts.append("-" + mono)
        else:
            parts.append(f"{cs}*{mono}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _power(var, e):
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


# Univariate helpers on coefficient lists, highest power first.

def _strip(a):
    i = 0
    while i < len(a) - 1 and not a[i]:
        i += 1
    return a[i:]


def _poly_divmod(a, b):
    a, b = _strip(list(a)), _strip(list(b))
    if len(a) < len(b):
        return [b[0].field.zero], a
    inv = b[0].inverse()
    a = list(a)
    q = []
    for i in range(len(a) - len(b) + 1):
        c = a[i] * inv
        q.append(c)
        if c:
            for j in range(1, len(b)):
                a[i + j] = a[i + j] - c * b[j]
    rem = a[len(a) - len(b) + 1:]
    return q, rem or [b[0].field.zero]


def _poly_gcd(a, b):
    a, b = _strip(a), _strip(b)
    while any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, _strip(r)
    lead = a[0]
    return [c / lead for c in a]


def gcd_forms(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """A gcd of two binary forms, normalised so its first nonzero coefficient is 1.

    Common powers of U are split off first; the rest is Euclid on f(T, 1).
    """
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd of two zero forms")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    a, b = f.u_valuation(), g.u_valuation()
    m = min(a, b)
    core = _poly_gcd(list(f.coeffs[a:]), list(g.coeffs[b:]))
    return BinaryForm(f.field, [0] * m + core)


def p1_roots(f: BinaryForm) -> set[P1Point]:
    """All zeros of ``f`` in P^1 of its base field.

    GF(p): evaluation at every point. Q: rational-root enumeration on f(T, 1)
    plus the point at infinity. Emulated real mode is unsupported.
    """
    if f.is_zero():
        raise ZeroForm("every point is a root of the zero form")
    field = f.field
    if field.kind == PRIME:
        return {pt for pt in p1_points(field) if not f(pt.t, pt.u)}
    if field.kind != "rational":
        raise UnsupportedInMode("explicit roots are not available in real-emulated mode")
    roots = set()
    if not f.coeffs[0]:
        roots.add(P1Point(field.one, field.zero))
    affine = _strip(list(f.coeffs))
    for r in rational_roots([c.value for c in affine]):
        roots.add(P1Point(field(r), field.one))
    return roots


def rational_roots(coeffs) -> set[Fraction]:
    """Distinct rational roots of a polynomial given by Fraction coefficients."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[0] == 0:
        cs.pop(0)
    if len(cs) <= 1:
        return set()
    den = math.lcm(*(c.denominator for c in cs))
    ints = [int(c * den) for c in cs]
    roots = set()
    while ints[-1] == 0:
        roots.add(Fraction(0))
        ints.pop()
        if len(ints) == 1:
            return roots
    lead, const = ints[0], ints[-1]
    for num, dnm in product(_divisors(const), _divisors(lead)):
        if math.gcd(num, dnm) != 1:
            continue
        for cand in (Fraction(num, dnm), Fraction(-num, dnm)):
            if cand not in roots and _eval_int(ints, cand) == 0:
                roots.add(cand)
    return roots


def _eval_int(ints, x):
    acc = Fraction(0)
    for c in ints:
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def disc_quadratic(a, b, c):
    """Discriminant ``b^2 - 4ac`` of ``a T^2 + b T U + c U^2``; works for any ring-like coefficients."""
    return b * b - 4 * a * c


def disc_cubic(a, b, c, d):
    """Discriminant of ``a T^3 + b T^2 U + c T U^2 + d U^3``."""
    return 18 * a * b * c * d - 4 * b ** 3 * d + b * b * c * c - 4 * a * c ** 3 - 27 * a * a * d * d


def discriminant(coeffs):
    if len(coeffs) == 3:
        return disc_quadratic(*coeffs)
    if len(coeffs) == 4:
        return disc_cubic(*coeffs)
    raise ValueError("discriminants are implemented for degrees 2 and 3 only")
