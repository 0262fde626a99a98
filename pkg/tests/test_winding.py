import math
import random

import pytest

from mixedtori.config import DEFAULT
from mixedtori.errors import InconsistentAcrossAngles, NotConvenient, RootOnUnitCircle
from mixedtori.mixedpoly import MixedPolynomial, parse
from mixedtori.newton import newton_boundary, support
from mixedtori.winding import (
    PHI_SIDE,
    MultiplicityTable,
    annulus_radii,
    face_restriction,
    face_roots,
    multiplicity_table,
    winding_oracle,
    winding_profile,
)

from conftest import TWO_FACE, THREE_FACE, FOUR_FACE

EXPECTED = {
    TWO_FACE: ((0, 2, 4), (6, -2, 0), (2, 2), (8, -2)),
    THREE_FACE: ((0, -1, 1, 5), (9, 6, 2, 0), (-1, 2, 4), (3, 4, 2)),
    FOUR_FACE: ((0, 1, 2, 3, 4), (0, 0, 0, 0, 0), (1, 1, 1, 1), (0, 0, 0, 0)),
}


@pytest.mark.parametrize("text", [TWO_FACE, THREE_FACE, FOUR_FACE])
def test_fixture_tables(text):
    ms_t, ms_phi, w, wp = EXPECTED[text]
    tab = multiplicity_table(parse(text))
    assert tab.ms_t == ms_t and tab.ms_phi == ms_phi
    prof = winding_profile(tab)
    assert prof.w == w and prof.wprime == wp
    assert sum(prof.w) == tab.ms_t[-1] and sum(prof.wprime) == tab.ms_phi[0]
    assert tab.ms_t[0] == 0 and tab.ms_phi[-1] == 0
    assert all(len(a) == DEFAULT.t_samples for a in tab.t_angles)


def test_certified_sets():
    assert winding_profile(multiplicity_table(parse(THREE_FACE))).certified_nonempty == {1, 2, 3}
    assert winding_profile(multiplicity_table(parse(FOUR_FACE))).certified_nonempty == {1, 2, 3, 4}
    zero = winding_profile(MultiplicityTable((0, 0), (0, 0)))
    assert zero.w == (0,) and zero.wprime == (0,) and zero.certified_nonempty == frozenset()


def test_not_convenient():
    with pytest.raises(NotConvenient):
        multiplicity_table(parse("u v + u^3 v"))


def test_unit_circle_root_is_tagged():
    with pytest.raises(RootOnUnitCircle) as exc:
        multiplicity_table(parse("u^2 - ~u^2 + v^3"))
    assert exc.value.details["vertex"] == 1
    assert exc.value.details["side"] == "t"


def test_angle_dependence_is_an_error():
    # at the vertex (1, 1) the t-restriction is (e^{it} + 2 e^{-it}) u + 2 ~u e^{it};
    # its root modulus 2 / |e^{it} + 2 e^{-it}| crosses 1 as t varies
    p = parse("v^4 + u v + 2 u ~v + 2 ~u v + u^4")
    with pytest.raises(InconsistentAcrossAngles) as exc:
        multiplicity_table(p)
    assert exc.value.details["vertex"] == 1
    assert set(exc.value.details["values"]) == {1, -1}


def test_cancelled_leading_coefficient_is_resampled():
    # at t = 0 the u-coefficient (v - ~v) vanishes; the entry must still come out
    p = parse("v^3 + u v - u ~v + 3 ~u v + u^3")
    tab = multiplicity_table(p)
    assert all(0.0 not in a for a in tab.t_angles[1:2])
    assert tab.ms_t[1] == -1


@pytest.mark.parametrize("text", [TWO_FACE, THREE_FACE, FOUR_FACE])
def test_oracle_matches_formula(text):
    p = parse(text)
    b = newton_boundary(support(p))
    prof = winding_profile(multiplicity_table(p, b))
    for i in range(1, b.N + 1):
        for t in (0.0, 1.0, 2.0):
            assert winding_oracle(p, i, t, b=b) == prof.w_at(i)
            assert winding_oracle(p, i, t, side=PHI_SIDE, b=b) == prof.wprime_at(i)


def test_oracle_examples():
    p = parse(THREE_FACE)
    assert winding_oracle(p, 2, 0.0) == 2
    p = parse(TWO_FACE)
    assert [winding_oracle(p, 1, t) for t in (0, 1, 2)] == [2, 2, 2]


def test_monomial_restriction_degree():
    # a monomial u^a ~u^b times a unit has degree a - b on every circle
    from mixedtori.mixedpoly import UniMixedPoly
    from mixedtori.multiplicity import adaptive_degree

    for a, b in ((3, 1), (0, 4), (2, 2)):
        for t in (0.0, 1.3, 4.0):
            g = UniMixedPoly.from_terms("u", {(a, b): complex(math.cos(t), math.sin(t))})
            assert annulus_radii(g) == (0.5, 2.0)
            for radius in (0.5, 2.0):
                assert adaptive_degree(g, radius) == a - b


def test_root_count_parity():
    for text in (TWO_FACE, THREE_FACE, FOUR_FACE):
        p = parse(text)
        b = newton_boundary(support(p))
        prof = winding_profile(multiplicity_table(p, b))
        for i in range(1, b.N + 1):
            for t in (0.37, 1.9):
                fr = face_roots(face_restriction(p, b, i, t))
                n = len(fr.roots)
                assert n >= abs(prof.w_at(i)) and (n - abs(prof.w_at(i))) % 2 == 0
                assert fr.consistent is True


def _random_holomorphic(rng):
    # convenient: pure powers on both axes plus random interior terms
    a = rng.randint(1, 7)
    b = rng.randint(1, 7)
    terms = {(a, 0, 0, 0): 1.0, (0, b, 0, 0): 1.0}
    for _ in range(rng.randint(0, 5)):
        x, y = rng.randint(0, 7), rng.randint(0, 7)
        if x + y > 0:
            terms[(x, y, 0, 0)] = complex(rng.gauss(0, 1), rng.gauss(0, 1))
    return MixedPolynomial.from_terms(terms)


def test_holomorphic_sanity():
    rng = random.Random(42)
    for _ in range(20):
        p = _random_holomorphic(rng)
        b = newton_boundary(support(p))
        tab = multiplicity_table(p, b)
        assert tab.ms_t == tuple(v.x for v in b.vertices)
        assert tab.ms_phi == tuple(v.y for v in b.vertices)
