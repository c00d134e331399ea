"""GF(p) enumeration kernels, compiled when available.

``BACKEND`` is ``"cython"`` when the extension module imports and ``"python"``
otherwise. Set ``BISECTORFIELDS_PURE=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py as py_kernels
from .fields import Field
from .plane import Line

compiled_kernels = None
if not os.environ.get("BISECTORFIELDS_PURE"):
    try:
        from . import _kernels as compiled_kernels
    except ImportError:
        compiled_kernels = None

_impl = compiled_kernels or py_kernels
BACKEND = "cython" if compiled_kernels is not None else "python"

bisector_mask = _impl.bisector_mask
dual_mask = _impl.dual_mask
transport_mask = _impl.transport_mask
slope_counts = _impl.slope_counts


def line_index(p: int, line: Line) -> int:
    if line.u:
        return line.t.value * p + line.v.value
    return p * p + line.v.value


def index_line(field: Field, idx: int) -> Line:
    p = field.p
    if idx < p * p:
        return Line(field(idx // p), field.one, field(idx % p))
    return Line(field.one, field.zero, field(idx - p * p))


def mask_to_lines(field: Field, mask) -> set[Line]:
    return {index_line(field, i) for i, bit in enumerate(mask) if bit}


def lines_to_mask(field: Field, lines) -> bytearray:
    p = field.p
    out = bytearray(p * p + p)
    for line in lines:
        out[line_index(p, line)] = 1
    return out


def side_ints(q) -> list[int]:
    """The 12 residues (t, u, v) of A, B, A1, B1."""
    return [c.value for s in q.sides for c in (s.t, s.u, s.v)]


def affine_ints(m) -> tuple[int, ...]:
    return tuple(x.value for x in (m.a, m.b, m.c, m.d, m.e, m.f))
