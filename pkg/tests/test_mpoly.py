import pytest

from bisectorfields import GF, QQ
from bisectorfields.errors import FieldMismatch
from bisectorfields.mpoly import MPoly, parse_monomial_key


def xy(field=QQ):
    return MPoly.gens_of(field, "XY")


def test_arithmetic_and_degree():
    X, Y = xy()
    f = (X + Y) ** 2
    assert f == X * X + 2 * X * Y + Y * Y
    assert f.total_degree() == 2
    assert (f - f).is_zero()


def test_subs_and_diff():
    X, Y = xy()
    f = Y * Y - 2 * X * X - X / 2
    assert f.diff("X") == -4 * X - QQ(1) / 2
    assert f.subs({"X": QQ(1), "Y": QQ(2)}) == MPoly.const(QQ, "XY", QQ(3) / 2)
    g = f.subs({"X": X + 1})
    assert g.subs({"X": QQ(0), "Y": QQ(0)}) == f.subs({"X": QQ(1), "Y": QQ(0)})


def test_homogenize_and_parts():
    X, Y = xy()
    f = X**3 + X * Y + 1
    H = f.homogenize("Z")
    assert H.gens == ("X", "Y", "Z")
    assert H.total_degree() == 3
    assert all(sum(e) == 3 for e in H.terms)
    assert f.homogeneous_part(2) == X * Y
    assert f.lowest_degree() == 0


def test_scalar_multiple_and_normalized():
    X, Y = xy()
    f = 3 * X * X - 6 * Y
    assert f.is_scalar_multiple_of(X * X - 2 * Y)
    assert not f.is_scalar_multiple_of(X * X + 2 * Y)
    assert f.normalized().leading_term()[1] == 1


def test_field_mismatch():
    X, _ = xy(QQ)
    Xp, _ = xy(GF(5))
    with pytest.raises(FieldMismatch):
        X + Xp


def test_prime_field_reduction():
    X, Y = xy(GF(3))
    assert (X + Y) ** 3 == X**3 + Y**3


def test_coeff_dict_round_trip():
    X, Y = xy()
    f = X**2 * Y - QQ(1) / 3 * Y + 7
    d = f.coeff_dict()
    back = MPoly(QQ, "XY", {parse_monomial_key(k, "XY"): QQ(v) for k, v in d.items()})
    assert back == f


def test_immutable():
    X, _ = xy()
    with pytest.raises(AttributeError):
        X.terms = {}
