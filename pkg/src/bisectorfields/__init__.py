"""Exact computation with bisector fields of quadrilaterals.

Lines are written ``t X - u Y + v = 0``. Everything is exact over Q or GF(p);
a real-emulated mode changes only the squareness rule.
"""
from ._version import __version__
from .boundary import BoundaryCurve, boundary, boundary_of_quadrilateral, singular_points
from .core import FieldPolynomials, classify, field_polynomials, is_bisector_dual
from .fields import GF, QQ, RR, Field, FieldElement
from .forms import BinaryForm, P1Point
from .kernels import BACKEND
from .plane import AffineMap, Line, Point, Quadrilateral, bisects_direct
from .standard import (
    StandardFormField,
    Verdict,
    affinely_equivalent,
    equivalence_witness,
    standardize,
    well_centered,
)

__all__ = [
    "__version__", "BACKEND",
    "Field", "FieldElement", "GF", "QQ", "RR",
    "BinaryForm", "P1Point",
    "Line", "Point", "Quadrilateral", "AffineMap", "bisects_direct",
    "FieldPolynomials", "field_polynomials", "classify", "is_bisector_dual",
    "StandardFormField", "Verdict", "standardize", "well_centered",
    "affinely_equivalent", "equivalence_witness",
    "BoundaryCurve", "boundary", "boundary_of_quadrilateral", "singular_points",
]
