"""Numerical checks of the hypotheses behind the criteria.

Vertex face functions must not vanish on the unit torus ``|u| = |v| = 1``; by
weighted homogeneity this is the same as having no zeros in ``(C*)^2``.  When a
vertex function is semiholomorphic in one of the variables it splits off a
monomial in that variable and the question reduces to one-variable roots, which
is decided exactly up to root-finding accuracy.  Otherwise we fall back to a
grid search with local refinement.

Non-degeneracy on the 1-faces is only spot-checked.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .config import DEFAULT, Config
from .errors import NumericalError
from .mixedpoly import (
    UBAR,
    VBAR,
    U,
    V,
    HomUniMixedPoly,
    MixedPolynomial,
    face_function,
    semiholomorphic_kind,
)
from .multiplicity import associated_roots
from .newton import Face, NewtonBoundary, is_convenient
from .winding import face_restriction, face_roots

CERTIFIED_EXACT = "certified-exact"
CERTIFIED_NUMERIC = "certified-numeric"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"
NO_VIOLATION = "no-violation-found"


@dataclass(frozen=True)
class VertexCheck:
    index: int
    point: tuple[int, int]
    status: str
    method: str
    min_modulus: float | None
    witness: tuple[float, float] | None = None
    unit_margin: float | None = None


@dataclass(frozen=True)
class FaceCheck:
    index: int
    status: str
    zeros_checked: int
    witness: dict | None = None


@dataclass(frozen=True)
class HypothesisReport:
    vertices: tuple[VertexCheck, ...]
    faces: tuple[FaceCheck, ...]
    convenient: bool
    gamma_nice: str
    nondegeneracy_asserted: bool

    @property
    def violated(self) -> bool:
        return self.gamma_nice == VIOLATED

    def caveats(self) -> list[str]:
        out = []
        if not self.convenient:
            out.append("Newton boundary is not convenient")
        for v in self.vertices:
            if v.status == VIOLATED:
                out.append(f"vertex {v.index} face function vanishes on the unit torus at (phi, t) = {v.witness}")
            elif v.status == INCONCLUSIVE:
                out.append(f"vertex {v.index} torus check inconclusive (min modulus {v.min_modulus:.3g})")
            elif v.status == CERTIFIED_NUMERIC:
                out.append(f"vertex {v.index} nonvanishing certified numerically only")
        for f in self.faces:
            if f.status == VIOLATED:
                out.append(f"face {f.index} has a singular zero in (C*)^2")
            elif f.status == INCONCLUSIVE:
                out.append(f"face {f.index} non-degeneracy spot check inconclusive")
        if self.nondegeneracy_asserted:
            out.append("non-degeneracy on 1-faces asserted (spot-checked)")
        return out


def _torus_terms(f: MixedPolynomial):
    """Collapse ``f`` on the torus to ``sum C_{a,b} e^{i(a phi + b t)}``."""
    acc: dict[tuple[int, int], complex] = {}
    for m in f:
        key = (m.nu1 - m.mu1, m.nu2 - m.mu2)
        acc[key] = acc.get(key, 0j) + m.coeff
    keys = sorted(k for k, c in acc.items() if c != 0)
    c = np.array([acc[k] for k in keys], dtype=np.complex128)
    a = np.array([k[0] for k in keys], dtype=np.int64)
    b = np.array([k[1] for k in keys], dtype=np.int64)
    return c, a, b


def _torus_value(c, a, b, phi: float, t: float) -> complex:
    return complex(np.sum(c * np.exp(1j * (a * phi + b * t))))


def _polish(c, a, b, phi, t, val, iters: int = 30):
    """Gauss-Newton on (Re, Im) of the torus function; keeps only improvements."""
    for _ in range(iters):
        z = _torus_value(c, a, b, phi, t)
        e = c * np.exp(1j * (a * phi + b * t))
        dphi = complex(np.sum(1j * a * e))
        dt = complex(np.sum(1j * b * e))
        J = np.array([[dphi.real, dt.real], [dphi.imag, dt.imag]])
        step = np.linalg.lstsq(J, -np.array([z.real, z.imag]), rcond=None)[0]
        nphi, nt = phi + step[0], t + step[1]
        nval = abs(_torus_value(c, a, b, nphi, nt))
        if not nval < val:
            break
        phi, t, val = nphi, nt, nval
    return phi, t, val


def torus_min_modulus(face_fn: MixedPolynomial, grid: int = 256, cfg: Config = DEFAULT) -> tuple[float, tuple[float, float]]:
    """Smallest ``|face_fn(e^{i phi}, e^{i t})|`` found, and where.

    Grid search over ``grid x grid`` angles, then coordinate descent with step
    halving from the best grid point, then a Gauss-Newton polish.  Every stage
    only accepts improvements, so the result never exceeds the grid minimum.
    """
    if grid < 8:
        raise ValueError("grid must be at least 8")
    c, a, b = _torus_terms(face_fn)
    if len(c) == 0:
        return 0.0, (0.0, 0.0)
    if len(c) == 1:
        return float(abs(c[0])), (0.0, 0.0)
    best, j, k = kernels.torus_grid_min(c, a, b, grid)
    phi = 2 * math.pi * j / grid
    t = 2 * math.pi * k / grid
    h = 2 * math.pi / grid
    for _ in range(cfg.descent_iters):
        moved = False
        for dphi, dt in ((h, 0.0), (-h, 0.0), (0.0, h), (0.0, -h)):
            val = abs(_torus_value(c, a, b, phi + dphi, t + dt))
            if val < best:
                best, phi, t, moved = val, phi + dphi, t + dt, True
        if not moved:
            h /= 2
    phi, t, best = _polish(c, a, b, phi, t, best)
    return float(best), (float(phi % (2 * math.pi)), float(t % (2 * math.pi)))


def _split_semiholomorphic(f: MixedPolynomial):
    """Return ``(G, side)`` with ``f = monomial * G``, ``G`` homogeneous in one variable.

    ``side`` is ``"u"`` if ``G`` is in ``(u, ~u)`` and ``"v"`` otherwise; ``None``
    when ``f`` is not semiholomorphic in either variable.
    """
    kind = semiholomorphic_kind(f)
    if kind & {V, VBAR}:
        side = U
        coeffs = {m.nu1: m.coeff for m in f}
        degree = f.monomials[0].nu1 + f.monomials[0].mu1
    elif kind & {U, UBAR}:
        side = V
        coeffs = {m.nu2: m.coeff for m in f}
        degree = f.monomials[0].nu2 + f.monomials[0].mu2
    else:
        return None
    return HomUniMixedPoly.from_coeffs(degree, coeffs, side), side


def _check_vertex(p: MixedPolynomial, index: int, point, cfg: Config) -> VertexCheck:
    f = face_function(p, [point])
    pt = (point[0], point[1])
    c, _, _ = _torus_terms(f)
    if len(c) <= 1:
        mod = float(abs(c[0])) if len(c) else 0.0
        status = CERTIFIED_EXACT if mod > 0 else VIOLATED
        return VertexCheck(index, pt, status, "monomial", mod, None if mod > 0 else (0.0, 0.0))
    split = _split_semiholomorphic(f)
    if split is not None:
        G, side = split
        if G.nu_min == G.nu_max:
            # one surviving term in G: |f| is constant on the torus
            return VertexCheck(index, pt, CERTIFIED_EXACT, "monomial", float(abs(G.coeffs[0][1])))
        try:
            roots = associated_roots(G, cfg)
        except NumericalError:
            roots = None
        if roots is not None:
            margins = [abs(abs(z) - 1.0) for z in roots]
            worst = int(np.argmin(margins))
            margin = float(margins[worst])
            if margin > cfg.tol_unit:
                return VertexCheck(index, pt, CERTIFIED_EXACT, "semiholomorphic", None, None, margin)
            # w / ~w = e^{2 i theta} = sigma on the unit circle
            z = roots[worst]
            theta = math.atan2(z.imag, z.real) / 2 % (2 * math.pi)
            witness = (theta, 0.0) if side == U else (0.0, theta)
            val = abs(complex(np.sum(_torus_values(f, *witness))))
            status = VIOLATED if val < cfg.tol_vanish else INCONCLUSIVE
            return VertexCheck(index, pt, status, "semiholomorphic", float(val), witness, margin)
    mn, where = torus_min_modulus(f, cfg.grid, cfg)
    if mn < cfg.tol_vanish:
        return VertexCheck(index, pt, VIOLATED, "grid", mn, where)
    status = CERTIFIED_NUMERIC if mn >= cfg.inconclusive_band * cfg.tol_vanish else INCONCLUSIVE
    return VertexCheck(index, pt, status, "grid", mn)


def _torus_values(f: MixedPolynomial, phi: float, t: float):
    c, a, b = _torus_terms(f)
    return c * np.exp(1j * (a * phi + b * t))


def _bivariate_wirtinger(f: MixedPolynomial, u: complex, v: complex):
    ub, vb = u.conjugate(), v.conjugate()
    du = dub = dv = dvb = 0j
    for m in f:
        base = m.coeff
        if m.nu1:
            du += base * m.nu1 * u ** (m.nu1 - 1) * ub**m.mu1 * v**m.nu2 * vb**m.mu2
        if m.mu1:
            dub += base * m.mu1 * u**m.nu1 * ub ** (m.mu1 - 1) * v**m.nu2 * vb**m.mu2
        if m.nu2:
            dv += base * m.nu2 * u**m.nu1 * ub**m.mu1 * v ** (m.nu2 - 1) * vb**m.mu2
        if m.mu2:
            dvb += base * m.mu2 * u**m.nu1 * ub**m.mu1 * v**m.nu2 * vb ** (m.mu2 - 1)
    return du, dub, dv, dvb


def real_jacobian(f: MixedPolynomial, u: complex, v: complex) -> np.ndarray:
    """2 x 4 Jacobian of ``(Re f, Im f)`` in ``(x1, y1, x2, y2)``."""
    du, dub, dv, dvb = _bivariate_wirtinger(f, complex(u), complex(v))
    cols = [du + dub, 1j * (du - dub), dv + dvb, 1j * (dv - dvb)]
    return np.array([[z.real for z in cols], [z.imag for z in cols]])


def _gradient_scale(f: MixedPolynomial, u: complex, v: complex) -> float:
    au, av = abs(u), abs(v)
    return sum(
        abs(m.coeff) * au ** m.lattice_point[0] * av ** m.lattice_point[1]
        * (m.lattice_point[0] / au + m.lattice_point[1] / av)
        for m in f
    )


def spot_check_face_nondegeneracy(p: MixedPolynomial, face: Face, cfg: Config = DEFAULT) -> FaceCheck:
    """Look for singular zeros of the face function on a few slices ``|v| = 1``.

    Zeros are found per slice with :func:`mixedtori.winding.face_roots`; at each
    one the real Jacobian must have rank 2.  Finding no violation is evidence,
    not proof.
    """
    f = face_function(p, face.points)
    if len(_torus_terms(f)[0]) <= 1:
        return FaceCheck(face.index, NO_VIOLATION, 0)
    K = cfg.spot_t_samples
    checked = 0
    unsure = False
    b = NewtonBoundary((face.start, face.end), (Face(1, face.start, face.end, face.points),))
    for k in range(K):
        t = 2 * math.pi * (k + 0.31) / K
        g = face_restriction(f, b, 1, t, cfg=cfg)
        try:
            fr = face_roots(g, cfg)
        except NumericalError:
            unsure = True
            continue
        if fr.consistent is False:
            unsure = True
        v = complex(math.cos(t), math.sin(t))
        for u in fr.roots:
            checked += 1
            J = real_jacobian(f, u, v)
            sv = np.linalg.svd(J, compute_uv=False)
            scale = _gradient_scale(f, u, v)
            ratio = float(sv[-1] / scale) if scale > 0 else 0.0
            if ratio < cfg.tol_rank:
                return FaceCheck(
                    face.index,
                    VIOLATED,
                    checked,
                    {"u": u, "v": v, "sigma_ratio": ratio},
                )
    return FaceCheck(face.index, INCONCLUSIVE if unsure else NO_VIOLATION, checked)


def check_gamma_nice(p: MixedPolynomial, b: NewtonBoundary, cfg: Config = DEFAULT, faces: bool = True) -> HypothesisReport:
    """Torus checks at every vertex (extreme ones included) and face spot checks."""
    verts = tuple(_check_vertex(p, i, pt, cfg) for i, pt in enumerate(b.vertices))
    statuses = {v.status for v in verts}
    if VIOLATED in statuses:
        overall = VIOLATED
    elif INCONCLUSIVE in statuses:
        overall = INCONCLUSIVE
    else:
        overall = "certified"
    fchecks = tuple(spot_check_face_nondegeneracy(p, fc, cfg) for fc in b.faces) if faces else ()
    asserted = bool(fchecks) and all(fc.status == NO_VIOLATION for fc in fchecks)
    return HypothesisReport(verts, fchecks, is_convenient(b), overall, asserted)
