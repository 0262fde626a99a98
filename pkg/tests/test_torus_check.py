import cmath
import math
import random

import numpy as np
import pytest

from mixedtori.config import DEFAULT
from mixedtori.mixedpoly import MixedPolynomial, evaluate, face_function, parse
from mixedtori.newton import Face, LatticePoint, newton_boundary, support
from mixedtori.torus_check import (
    CERTIFIED_EXACT,
    CERTIFIED_NUMERIC,
    INCONCLUSIVE,
    NO_VIOLATION,
    VIOLATED,
    check_gamma_nice,
    real_jacobian,
    spot_check_face_nondegeneracy,
    torus_min_modulus,
)

from conftest import TWO_FACE, THREE_FACE, FOUR_FACE


def boundary(text):
    p = parse(text)
    return p, newton_boundary(support(p))


def test_min_modulus_examples():
    mn, _ = torus_min_modulus(parse("v^9"), 64)
    assert mn == 1.0
    mn, (phi, t) = torus_min_modulus(parse("u^3 + u^2 ~u"), 256)
    assert mn < 1e-12
    assert math.cos(phi) == pytest.approx(0, abs=1e-9)
    p, b = boundary(THREE_FACE)
    mn, _ = torus_min_modulus(face_function(p, [b.vertices[2]]), 256)
    assert mn > 0.1


def test_min_modulus_never_exceeds_grid():
    rng = random.Random(1)
    for _ in range(10):
        terms = {}
        for _ in range(4):
            a = rng.randint(0, 3)
            c = rng.randint(0, 3)
            terms[(a, c, 3 - a, 3 - c)] = complex(rng.gauss(0, 1), rng.gauss(0, 1))
        f = MixedPolynomial.from_terms(terms)
        G = 32
        mn, (phi, t) = torus_min_modulus(f, G)
        ang = 2 * np.pi * np.arange(G) / G
        vals = np.abs(evaluate(f, np.exp(1j * ang)[:, None], np.exp(1j * ang)[None, :]))
        assert mn <= vals.min() + 1e-15
        assert abs(evaluate(f, cmath.exp(1j * phi), cmath.exp(1j * t))) == pytest.approx(mn, abs=1e-12)


def test_monomial_min_is_exact():
    for c in (0.3 + 0.4j, -2.0, 1e-3j):
        mn, _ = torus_min_modulus(MixedPolynomial.from_terms({(2, 1, 1, 3): c}), 16)
        assert abs(mn - abs(c)) <= 1e-12


def test_grid_must_be_reasonable():
    with pytest.raises(ValueError):
        torus_min_modulus(parse("u"), 4)


def test_three_face_vertices_certified():
    p, b = boundary(THREE_FACE)
    rep = check_gamma_nice(p, b)
    assert [v.status for v in rep.vertices] == [CERTIFIED_EXACT] * 4
    assert rep.vertices[2].method == "semiholomorphic"
    assert rep.vertices[2].unit_margin > 0.1
    assert rep.gamma_nice == "certified"
    assert rep.convenient


def test_four_face_all_monomial():
    p, b = boundary(FOUR_FACE)
    rep = check_gamma_nice(p, b, faces=False)
    assert all(v.status == CERTIFIED_EXACT and v.method == "monomial" for v in rep.vertices)


def test_violation_witness():
    p, b = boundary("u^3 + u v + ~u v + v^3")
    rep = check_gamma_nice(p, b, faces=False)
    v1 = rep.vertices[1]
    assert v1.status == VIOLATED
    phi, t = v1.witness
    assert math.cos(phi) == pytest.approx(0, abs=1e-9)
    assert abs(evaluate(face_function(p, [b.vertices[1]]), cmath.exp(1j * phi), cmath.exp(1j * t))) < DEFAULT.tol_vanish
    assert rep.gamma_nice == VIOLATED and rep.violated


def test_numeric_path_statuses():
    # neither semiholomorphic variable: u ~v + 3 ~u v + u v has |.| >= 1 on the torus
    p, b = boundary("v^3 + u ~v + 3 ~u v + u v + u^3")
    rep = check_gamma_nice(p, b, faces=False)
    assert rep.vertices[1].method == "grid"
    assert rep.vertices[1].status == CERTIFIED_NUMERIC
    # u ~v + ~u v = 2 Re(u ~v) vanishes on a curve of the torus
    p, b = boundary("v^3 + u ~v + ~u v + u^3")
    rep = check_gamma_nice(p, b, faces=False)
    assert rep.vertices[1].method == "grid"
    assert rep.vertices[1].status == VIOLATED
    # |(1 + d) e^{ia} + e^{-ia}| has minimum d; d = 1e-7 sits inside the band
    p, b = boundary("v^3 + (1.0000001) u ~v + ~u v + u^3")
    rep = check_gamma_nice(p, b, faces=False)
    assert rep.vertices[1].status == INCONCLUSIVE
    assert rep.vertices[1].min_modulus == pytest.approx(1e-7, rel=1e-3)
    assert rep.gamma_nice == INCONCLUSIVE


def test_all_monomial_vertices_are_exact():
    rng = random.Random(8)
    for _ in range(10):
        a, c = rng.randint(1, 6), rng.randint(1, 6)
        x = rng.randint(1, a - 1) if a > 1 else 0
        text = f"v^{c + 2} + u^{x} ~v^{1} + u^{a + 2}" if x else f"v^{c} + u^{a}"
        p, b = boundary(text)
        rep = check_gamma_nice(p, b, faces=False)
        assert all(v.status == CERTIFIED_EXACT for v in rep.vertices)


def test_spot_check_examples():
    p, b = boundary(THREE_FACE)
    assert spot_check_face_nondegeneracy(p, b.face(1)).status == NO_VIOLATION
    p, b = boundary("u^2 - 2 u v + v^2")  # (u - v)^2: every zero is singular
    fc = spot_check_face_nondegeneracy(p, b.face(1))
    assert fc.status == VIOLATED
    assert abs(fc.witness["u"] - fc.witness["v"]) < 1e-6
    # (u v)^2 has no zeros in (C*)^2 at all, so nothing can be found
    p = parse("u^2 v^2")
    face = Face(1, LatticePoint(2, 2), LatticePoint(2, 2), (LatticePoint(2, 2),))
    assert spot_check_face_nondegeneracy(p, face).status == NO_VIOLATION


def test_real_jacobian_matches_finite_differences():
    f = parse("u^2 ~v + 3 ~u v^2 - i u v")
    u, v = 0.7 - 0.2j, -0.4 + 1.1j
    J = real_jacobian(f, u, v)
    eps = 1e-6
    dirs = [(eps, 0), (1j * eps, 0), (0, eps), (0, 1j * eps)]
    for k, (du, dv) in enumerate(dirs):
        d = (evaluate(f, u + du, v + dv) - evaluate(f, u - du, v - dv)) / (2 * eps)
        assert J[0, k] == pytest.approx(d.real, abs=1e-6)
        assert J[1, k] == pytest.approx(d.imag, abs=1e-6)


def test_fixture_reports():
    for text in (TWO_FACE, THREE_FACE, FOUR_FACE):
        p, b = boundary(text)
        rep = check_gamma_nice(p, b)
        assert rep.gamma_nice == "certified"
        assert rep.nondegeneracy_asserted
        assert all(f.status == NO_VIOLATION for f in rep.faces)
