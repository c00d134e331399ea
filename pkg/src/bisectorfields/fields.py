"""Exact field arithmetic over Q, GF(p) and an emulated real closed field.

Elements are immutable. The emulated real mode stores exact rationals and
only differs from Q in which elements count as squares: over a real closed
field every non-negative element is a square, so ``is_square`` is a sign test
there, while ``sqrt`` still refuses to invent irrational values.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, UnsupportedInMode

RATIONAL = "rational"
PRIME = "prime"
REAL = "real"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


@dataclass(frozen=True)
class Field:
    """Descriptor of the base field: ``rational``, ``prime`` (with ``p``) or ``real``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == PRIME:
            if self.p is None or not _is_prime(self.p) or self.p < 3:
                raise ValueError(f"GF(p) needs an odd prime p, got {self.p!r}")
        elif self.kind in (RATIONAL, REAL):
            if self.p is not None:
                raise ValueError(f"{self.kind} field takes no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime(self) -> bool:
        return self.kind == PRIME

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == PRIME else 0

    @property
    def zero(self) -> FieldElement:
        return self(0)

    @property
    def one(self) -> FieldElement:
        return self(1)

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in {self}")
            return value
        return FieldElement(self, self._normalize(value))

    def _normalize(self, value):
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool):
            value = int(value)
        if self.kind == PRIME:
            if isinstance(value, Fraction):
                if value.denominator % self.p == 0:
                    raise DivisionByZero(f"{value} has no image in GF({self.p})")
                return value.numerator * pow(value.denominator, -1, self.p) % self.p
            if isinstance(value, int):
                return value % self.p
        else:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
        raise TypeError(f"cannot interpret {value!r} as an element of {self}")

    def elements(self):
        """All elements in residue order; only finite fields are enumerable."""
        if self.kind != PRIME:
            raise UnsupportedInMode(f"{self} is infinite")
        return [FieldElement(self, a) for a in range(self.p)]

    def __str__(self) -> str:
        return f"prime:{self.p}" if self.kind == PRIME else self.kind

    @classmethod
    def parse(cls, text: str) -> Field:
        """Parse ``rational``, ``real`` or ``prime:P`` (also ``Q`` and ``GF(P)``)."""
        s = text.strip().lower()
        if s in ("rational", "q", "qq"):
            return QQ
        if s in ("real", "r", "real-emulated"):
            return RR
        if s.startswith("prime:"):
            return GF(int(s[6:]))
        if s.startswith("gf(") and s.endswith(")"):
            return GF(int(s[3:-1]))
        raise ValueError(f"unrecognised field descriptor {text!r}")


QQ = Field(RATIONAL)
RR = Field(REAL)


@functools.lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(PRIME, p)


class FieldElement:
    """An exact element of a :class:`Field`.

    Plain ``int`` (and, outside GF(p), ``Fraction``) operands are coerced,
    so expressions like ``18 * a * b`` work for any coefficient type.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __reduce__(self):
        return (FieldElement, (self.field, self.value))

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field._normalize(other)
        return NotImplemented

    def _wrap(self, value):
        if self.field.kind == PRIME:
            value %= self.field.p
        return FieldElement(self.field, value)

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.value + b)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.value - b)

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(b - self.value)

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.value * b)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def __pos__(self):
        return self

    def inverse(self) -> FieldElement:
        if not self.value:
            raise DivisionByZero(f"division by zero in {self.field}")
        if self.field.kind == PRIME:
            return FieldElement(self.field, pow(self.value, -1, self.field.p))
        return FieldElement(self.field, 1 / self.value)

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self * FieldElement(self.field, b).inverse()

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, b) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        if self.field.kind == PRIME:
            return FieldElement(self.field, pow(base.value, abs(n), self.field.p))
        return FieldElement(self.field, base.value ** abs(n))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self.value == self.field._normalize(other)
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def _ordered(self, other):
        if self.field.kind == PRIME:
            raise TypeError("GF(p) is not ordered")
        b = self._other(other)
        if b is NotImplemented:
            raise TypeError(f"cannot compare with {other!r}")
        return b

    def __lt__(self, other):
        return self.value < self._ordered(other)

    def __le__(self, other):
        return self.value <= self._ordered(other)

    def __gt__(self, other):
        return self.value > self._ordered(other)

    def __ge__(self, other):
        return self.value >= self._ordered(other)

    def is_zero(self) -> bool:
        return self.value == 0

    def is_square(self) -> bool:
        v = self.value
        if v == 0:
            return True
        kind = self.field.kind
        if kind == PRIME:
            p = self.field.p
            return pow(v, (p - 1) // 2, p) == 1
        if v < 0:
            return False
        if kind == REAL:
            return True
        return _rational_root(v) is not None

    def sqrt(self) -> FieldElement | None:
        """A square root in the field, or ``None`` when there is none.

        GF(p) returns the root lying in ``[0, p/2]``. The emulated real mode
        raises :class:`UnsupportedInMode` for positive non-square rationals,
        whose roots exist in the field but are not representable.
        """
        v = self.value
        kind = self.field.kind
        if kind == PRIME:
            p = self.field.p
            if v == 0:
                return self
            if pow(v, (p - 1) // 2, p) != 1:
                return None
            r = _tonelli_shanks(v, p)
            return FieldElement(self.field, min(r, p - r))
        if v < 0:
            return None
        r = _rational_root(v)
        if r is None and kind == REAL:
            raise UnsupportedInMode(f"sqrt({v}) is irrational; real mode stores rationals only")
        return None if r is None else FieldElement(self.field, r)

    def sign(self) -> int:
        if self.field.kind == PRIME:
            raise TypeError("GF(p) is not ordered")
        return (self.value > 0) - (self.value < 0)

    def to_fraction(self) -> Fraction:
        if self.field.kind == PRIME:
            raise TypeError("GF(p) elements have no rational value")
        return self.value

    def __int__(self):
        if self.field.kind == PRIME:
            return self.value
        if self.value.denominator != 1:
            raise ValueError(f"{self.value} is not an integer")
        return self.value.numerator

    def __float__(self):
        return float(self.value)

    def __str__(self):
        v = self.value
        if isinstance(v, Fraction):
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return str(v)

    def __repr__(self):
        return f"{self}@{self.field}"


def _rational_root(v: Fraction) -> Fraction | None:
    n, d = v.numerator, v.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _tonelli_shanks(a: int, p: int) -> int:
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
