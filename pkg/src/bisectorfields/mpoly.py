"""Sparse multivariate polynomials with exact field coefficients.

Used wherever a discriminant has polynomial coefficients (boundary curves in
X, Y) and for symbolic identity checks in parameters such as h, k, mu.
"""
from __future__ import annotations

from .errors import FieldMismatch
from .fields import Field, FieldElement


class MPoly:
    """Polynomial in the named variables ``gens`` over ``field``.

    ``terms`` maps exponent tuples to nonzero :class:`FieldElement` values.
    """

    __slots__ = ("field", "gens", "terms")

    def __init__(self, field: Field, gens, terms=None):
        gens = tuple(gens)
        clean = {}
        for exps, c in (terms or {}).items():
            c = field(c)
            if c:
                exps = tuple(exps)
                if len(exps) != len(gens):
                    raise ValueError("exponent tuple length does not match generators")
                clean[exps] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    def __reduce__(self):
        return (MPoly, (self.field, self.gens, self.terms))

    @classmethod
    def gen(cls, field: Field, gens, name: str) -> MPoly:
        gens = tuple(gens)
        exps = tuple(int(g == name) for g in gens)
        if sum(exps) != 1:
            raise ValueError(f"{name!r} is not one of {gens}")
        return cls(field, gens, {exps: 1})

    @classmethod
    def gens_of(cls, field: Field, gens) -> tuple[MPoly, ...]:
        return tuple(cls.gen(field, gens, g) for g in gens)

    @classmethod
    def const(cls, field: Field, gens, c) -> MPoly:
        gens = tuple(gens)
        return cls(field, gens, {(0,) * len(gens): c})

    def _lift(self, other):
        if isinstance(other, MPoly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            if other.gens != self.gens:
                raise ValueError(f"generator mismatch {self.gens} vs {other.gens}")
            return other
        if isinstance(other, FieldElement) or isinstance(other, int):
            return MPoly.const(self.field, self.gens, other)
        try:
            return MPoly.const(self.field, self.gens, self.field(other))
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MPoly(self.field, self.gens, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.field, self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return MPoly(self.field, self.gens, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MPoly.const(self.field, self.gens, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, c):
        c = self.field(c)
        inv = c.inverse()
        return MPoly(self.field, self.gens, {e: v * inv for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.field == other.field and self.gens == other.gens and self.terms == other.terms
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        return self.terms == lifted.terms

    def __hash__(self):
        return hash((self.field, self.gens, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coeff(self, exps) -> FieldElement:
        return self.terms.get(tuple(exps), self.field.zero)

    def __call__(self, *values):
        """Evaluate at field values (one per generator)."""
        if len(values) != len(self.gens):
            raise ValueError("wrong number of values")
        vals = [self.field(v) for v in values]
        total = self.field.zero
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term = term * v ** k
            total = total + term
        return total

    def subs(self, mapping: dict) -> MPoly:
        """Substitute generators by polynomials (all over a common generator set) or constants."""
        target = None
        for v in mapping.values():
            if isinstance(v, MPoly):
                target = v.gens
                break
        gens = target or self.gens
        images = []
        for g in self.gens:
            if g in mapping:
                v = mapping[g]
                images.append(v if isinstance(v, MPoly) else MPoly.const(self.field, gens, v))
            else:
                images.append(MPoly.gen(self.field, gens, g))
        result = MPoly(self.field, gens)
        cache = {}
        for e, c in self.terms.items():
            term = MPoly.const(self.field, gens, c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    term = term * cache[key]
            result = result + term
        return result

    def diff(self, name: str) -> MPoly:
        i = self.gens.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MPoly(self.field, self.gens, out)

    def homogenize(self, name: str) -> MPoly:
        """Homogenize with a new generator ``name`` appended."""
        d = self.total_degree()
        out = {e + (d - sum(e),): c for e, c in self.terms.items()}
        return MPoly(self.field, self.gens + (name,), out)

    def homogeneous_part(self, degree: int) -> MPoly:
        return MPoly(self.field, self.gens, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def lowest_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=-1)

    def leading_term(self):
        """(exponents, coefficient) of the lexicographically largest monomial."""
        e = max(self.terms)
        return e, self.terms[e]

    def normalized(self) -> MPoly:
        """Scale so the lexicographically leading coefficient is 1."""
        if not self.terms:
            return self
        _, c = self.leading_term()
        return self / c

    def is_scalar_multiple_of(self, other: MPoly) -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.normalized() == other.normalized()

    def monomial_key(self, exps) -> str:
        parts = []
        for g, k in zip(self.gens, exps):
            if k == 1:
                parts.append(g)
            elif k > 1:
                parts.append(f"{g}{k}")
        return "".join(parts) or "1"

    def coeff_dict(self) -> dict[str, str]:
        """``{"X4": "1", "X2Y2": "2", ...}`` in descending lexicographic order."""
        return {self.monomial_key(e): str(self.terms[e]) for e in sorted(self.terms, reverse=True)}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                g if k == 1 else f"{g}^{k}" for g, k in zip(self.gens, e) if k
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
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MPoly({self}; {self.field})"


def parse_monomial_key(key: str, gens) -> tuple[int, ...]:
    """Inverse of :meth:`MPoly.monomial_key` for single-letter generators."""
    exps = [0] * len(gens)
    if key == "1":
        return tuple(exps)
    i = 0
    while i < len(key):
        g = key[i]
        if g not in gens:
            raise ValueError(f"unknown generator {g!r} in {key!r}")
        j = i + 1
        while j < len(key) and key[j].isdigit():
            j += 1
        exps[gens.index(g)] += int(key[i + 1:j]) if j > i + 1 else 1
        i = j
    return tuple(exps)
