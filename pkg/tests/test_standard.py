import itertools
import random

import pytest

from bisectorfields import GF, QQ, RR, AffineMap, Line, Quadrilateral
from bisectorfields.census import brute_force_bisectors
from bisectorfields.core import field_polynomials
from bisectorfields.errors import NotASquare, ParallelPair, WrongClass
from bisectorfields.plane import centroid
from bisectorfields.standard import (
    StandardFormField,
    Verdict,
    affinely_equivalent,
    center_lines,
    equal_standard,
    equivalence_witness,
    image_standard,
    parabola_normalizer,
    partner,
    quadrilateral_from_triple,
    retarget,
    scaling,
    standardize,
    well_centered,
    well_centered_form,
)

from conftest import random_quadrilateral


def S(h, k, mu, field=QQ):
    return StandardFormField.of(field, h, k, mu)


def L(t, u, v, field=QQ):
    return Line.of(t, u, v, field)


def random_affine(field, rng):
    while True:
        vals = [rng.randint(-4, 4) for _ in range(6)]
        if vals[0] * vals[3] - vals[1] * vals[2]:
            m = AffineMap.of(field, *vals)
            if m.det:
                return m


def test_class_rule():
    assert S(0, 0, 3).kind == "linear"
    assert S(1, 1, 1).kind == "quadratic"
    assert S(2, 4, 4).kind == "quadratic"
    assert S(1, 1, 2).kind == "cubic"
    assert S(0, 1, 1).kind == "cubic"
    with pytest.raises(ValueError):
        S(1, 1, 0)
    with pytest.raises(ValueError):
        StandardFormField(QQ(0), QQ(0), QQ(1), "cubic")


def test_standardize_running_example(example_q):
    m, f = standardize(example_q)
    assert m == AffineMap.identity(QQ)
    assert f.triple() == (QQ("-1/8"), QQ(0), QQ(2))


def test_standardize_unit_square():
    sq = Quadrilateral(L(0, 1, -1), L(1, 0, -1), L(0, 1, 1), L(1, 0, 1))
    m, f = standardize(sq)
    assert f.kind == "linear"
    assert m(centroid(sq)) == f.center


def test_standardize_is_affine_invariant(rng):
    for fld in (QQ, GF(11)):
        done = 0
        while done < 15:
            q = random_quadrilateral(fld, rng)
            m = random_affine(fld, rng)
            _, f1 = standardize(q)
            _, f2 = standardize(m(q))
            assert f1.kind == f2.kind
            if f1.kind == "cubic":
                assert (f1.mu * f2.mu).is_square()
                assert well_centered(f1) == well_centered(f2)
            done += 1


def test_standardize_recovers_triple(rng):
    for _ in range(30):
        f = S(rng.randint(-5, 5), rng.randint(-5, 5), rng.choice([-3, -1, 2, 5]))
        if f.kind == "linear":
            continue
        q = quadrilateral_from_triple(f)
        assert standardize(q)[1] == f


def test_equal_standard():
    assert equal_standard(S(0, "1/2", -1), S(0, "1/2", -1))
    assert not equal_standard(S(0, "1/2", -1), S(0, "1/2", 1))


def test_distinct_triples_give_distinct_sets_gf7():
    F = GF(7)
    seen = {}
    for h, k, mu in itertools.product(range(7), range(7), range(1, 7)):
        f = S(h, k, mu, F)
        if f.kind == "linear" and not F(mu).is_square():
            continue
        lines = frozenset(brute_force_bisectors(quadrilateral_from_triple(f)))
        assert lines not in seen, (f, seen.get(lines))
        seen[lines] = f


def test_retarget_examples():
    axes = (L(0, 1, 0), L(1, 0, 0))
    f = S(0, 1, 1)
    m = retarget(f, 1, axes)
    assert m.det
    F = GF(7)
    g = S(1, 2, 1, F)
    m7 = retarget(g, 2, (L(0, 1, 0, F), L(1, 0, 0, F)))
    assert image_standard(g, m7).mu == F(2)
    with pytest.raises(NotASquare):
        retarget(f, 2, axes)
    with pytest.raises(ParallelPair):
        retarget(f, 1, (L(0, 1, 0), L(0, 1, 3)))


@pytest.mark.parametrize("p", [5, 7, 11])
def test_retarget_transports_bisector_sets(p):
    F = GF(p)
    rng = random.Random(p)
    squares = [x for x in range(1, p) if F(x).is_square()]
    for _ in range(6):
        f = S(rng.randrange(p), rng.randrange(1, p), rng.randrange(1, p), F)
        if f.kind != "cubic":
            continue
        mu2 = F(rng.choice(squares)) * f.mu
        axes = (L(0, 1, 0, F), L(1, 0, 0, F))
        m = retarget(f, mu2, axes)
        g = image_standard(f, m)
        assert g.mu == mu2
        src = brute_force_bisectors(quadrilateral_from_triple(f))
        dst = brute_force_bisectors(quadrilateral_from_triple(g))
        assert {m(ell) for ell in src} == dst


def test_scaling_keeps_mu():
    f = S(1, 3, 5)
    g = image_standard(f, scaling(QQ, 3))
    assert g.mu == f.mu and g.h == 3 * f.h and g.k == 3 * f.k


def test_equivalence_examples():
    assert affinely_equivalent(S(0, "1/2", -1, RR), S(0, "1/2", -4, RR)) == Verdict.EQUIVALENT
    assert affinely_equivalent(S(0, "1/2", -1, RR), S(0, "1/2", 4, RR)) == Verdict.NOT_EQUIVALENT
    assert affinely_equivalent(S(0, "1/2", 2), S(0, "1/2", 3)) == Verdict.NOT_EQUIVALENT
    F = GF(7)
    assert affinely_equivalent(S(0, 1, 1, F), S(0, 1, 2, F)) == Verdict.EQUIVALENT
    assert affinely_equivalent(S(0, 0, 1), S(0, 0, 5)) == Verdict.EQUIVALENT
    assert affinely_equivalent(S(1, 1, 1), S(2, 6, 9)) == Verdict.EQUIVALENT
    assert affinely_equivalent(S(1, 1, 1), S(1, 1, 2)) == Verdict.NOT_EQUIVALENT


def test_undecided_and_mixed_gf7():
    F = GF(7)
    bad = [f for f in (S(h, k, mu, F) for h, k, mu in itertools.product(range(7), range(7), range(1, 7)))
           if f.kind == "cubic" and not well_centered(f)]
    assert S(1, 1, 2, F) in bad
    same = [g for g in bad if (g.mu * bad[0].mu).is_square() and g != bad[0]]
    assert affinely_equivalent(bad[0], same[0]) == Verdict.UNDECIDED
    good = S(0, 1, bad[0].mu, F)
    assert well_centered(good)
    assert affinely_equivalent(bad[0], good) == Verdict.NOT_EQUIVALENT


def test_well_centered_examples():
    assert not well_centered(S(1, 1, 2, GF(7)))
    assert well_centered(S("-1/8", 0, 2))
    assert well_centered_form(S("-1/8", 0, 2)).coeffs[0] == QQ("-1/8")
    # (1, 1, 1) over Q is quadratic, and non-cubic fields are always well centered
    assert S(1, 1, 1).kind == "quadratic"
    assert well_centered(S(1, 1, 1))
    assert well_centered(S(1, 0, -7, RR))


def test_center_lines_pass_through_center():
    f = S("-1/8", 0, 2)
    lines = center_lines(f)
    assert lines == [L(0, 1, 0)]
    for ell in lines:
        assert ell.contains(f.center)
    with pytest.raises(WrongClass):
        center_lines(S(1, 1, 1))


def test_partner_is_bisector_and_antipodal():
    f = S(1, 2, 3)
    q = quadrilateral_from_triple(f)
    fp = field_polynomials(q)
    for ell in center_lines(f) + [q.A, q.B]:
        pl = partner(f, ell)
        assert not fp.dual_value(pl.t, pl.u, pl.v)
        assert partner(f, pl) == ell


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_witnesses_transport_sets(p):
    F = GF(p)
    rng = random.Random(7 * p)
    wc = [f for f in (S(h, k, mu, F) for h, k, mu in itertools.product(range(p), repeat=3) if mu)
          if f.kind == "cubic" and well_centered(f)]
    for _ in range(4):
        f1, f2 = rng.sample(wc, 2)
        m = equivalence_witness(f1, f2)
        if not (f1.mu * f2.mu).is_square():
            assert m is None
            continue
        assert m is not None
        src = brute_force_bisectors(quadrilateral_from_triple(f1))
        dst = brute_force_bisectors(quadrilateral_from_triple(f2))
        assert {m(ell) for ell in src} == dst


def test_parabola_normalizer_rejects_cubic():
    with pytest.raises(WrongClass):
        parabola_normalizer(S(1, 1, 2))
    m = parabola_normalizer(S(1, 1, 1))
    assert m.det
