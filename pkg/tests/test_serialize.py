import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bisectorfields import GF, QQ, RR, AffineMap, Line
from bisectorfields import serialize as ser
from bisectorfields.boundary import boundary
from bisectorfields.core import field_polynomials
from bisectorfields.errors import SchemaError
from bisectorfields.standard import StandardFormField

from conftest import random_quadrilateral, running_example


def test_line_and_quad_round_trip(rng):
    for fld in (QQ, GF(7), RR):
        for _ in range(10):
            q = random_quadrilateral(fld, rng)
            assert ser.quad_from_json(fld, ser.quad_to_json(q)) == q


def test_line_is_canonicalized():
    assert ser.line_from_json(QQ, {"t": "2", "u": "2", "v": "4"}) == Line.of(1, 1, 2, QQ)


def test_affine_round_trip():
    m = AffineMap.of(QQ, 2, "1/3", -1, 5, 7, "-2/9")
    obj = ser.affine_to_json(m)
    assert obj == {"m": [["2", "1/3"], ["-1", "5"]], "tr": ["7", "-2/9"]}
    assert ser.affine_from_json(QQ, obj) == m


def test_polynomials_round_trip(example_q):
    fp = field_polynomials(example_q)
    obj = ser.polynomials_to_json(fp)
    assert obj["class"] == "cubic" and obj["F_degree"] == 3
    assert ser.polynomials_from_json(QQ, obj) == fp


def test_boundary_json():
    quartic = ser.boundary_to_json(boundary(StandardFormField.of(QQ, 0, "1/2", -1)))
    assert quartic["variant"] == "quartic"
    assert quartic["coeffs"]["X4"] == "1" and quartic["coeffs"]["Y"] == "-8"
    assert ser.mpoly_from_json(QQ, quartic["coeffs"]) == boundary(StandardFormField.of(QQ, 0, "1/2", -1)).poly
    pt = ser.boundary_to_json(boundary(StandardFormField.of(QQ, 1, 2, 3)).__class__(
        "point", field_polynomials(running_example()), point=StandardFormField.of(QQ, 1, 2, 3).center))
    assert pt == {"variant": "point", "point": {"x": "1", "y": "2"}}


def test_standard_round_trip():
    f = StandardFormField.of(GF(11), 3, 4, 5)
    assert ser.standard_from_json(GF(11), ser.standard_to_json(f)) == f


@pytest.mark.parametrize("bad", [
    {"h": "1", "k": "1"},
    {"h": "1", "k": "1", "mu": "0"},
    {"h": "1", "k": "1", "mu": "1", "class": "cubic"},
    {"h": "x", "k": "1", "mu": "1"},
    {"h": True, "k": "1", "mu": "1"},
])
def test_standard_schema_errors(bad):
    with pytest.raises(SchemaError):
        ser.standard_from_json(QQ, bad)


def test_schema_errors():
    with pytest.raises(SchemaError):
        ser.loads("{not json")
    with pytest.raises(SchemaError):
        ser.line_from_json(QQ, {"t": "0", "u": "0", "v": "1"})
    with pytest.raises(SchemaError):
        ser.affine_from_json(QQ, {"m": [[1, 2], [2, 4]], "tr": [0, 0]})
    with pytest.raises(SchemaError):
        ser.read_document({"kind": "analysis"})
    with pytest.raises(SchemaError):
        ser.read_document({"field": "complex"})
    with pytest.raises(SchemaError):
        ser.form_from_json(QQ, {"degree": 2, "coeffs": ["1"]})


def test_document_header():
    doc = ser.document(GF(7), "analysis", {"x": 1})
    field, obj = ser.read_document(ser.dumps(doc))
    assert field == GF(7) and obj["format"] == "bisectorfields" and obj["kind"] == "analysis"


@given(st.integers(-50, 50), st.integers(1, 50), st.integers(-50, 50))
def test_emit_parse_emit_fixed_point(a, b, c):
    f = StandardFormField(QQ(a) / b, QQ(c), QQ(b))
    doc = ser.document(QQ, "standard", {"standard": ser.standard_to_json(f)})
    text = ser.dumps(doc)
    again = ser.dumps(ser.document(QQ, "standard", {
        "standard": ser.standard_to_json(ser.standard_from_json(QQ, ser.loads(text)["standard"]))}))
    assert text == again


def test_quad_emit_parse_emit(rng):
    for _ in range(20):
        q = random_quadrilateral(GF(13), rng)
        text = ser.dumps(ser.quad_to_json(q))
        assert ser.dumps(ser.quad_to_json(ser.quad_from_json(GF(13), ser.loads(text)))) == text
