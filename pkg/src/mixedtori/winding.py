"""Vertex multiplicity tables, per-face winding numbers and their oracles."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT, Config
from .errors import (
    DegenerateSpecialization,
    IndeterminateSign,
    InconsistentAcrossAngles,
    NotConvenient,
    NumericalError,
    RootOnUnitCircle,
    VanishesOnCircle,
)
from .mixedpoly import (
    MixedPolynomial,
    UniMixedPoly,
    face_function,
    specialize_phi,
    specialize_t,
    wirtinger_at,
)
from .multiplicity import adaptive_degree, signed_multiplicity_at_zero, simple_root_sign
from .newton import NewtonBoundary, is_convenient, newton_boundary, support

T_SIDE = "t"
PHI_SIDE = "phi"
GOLDEN_ANGLE = math.pi * (3 - math.sqrt(5))


@dataclass(frozen=True)
class MultiplicityTable:
    """Signed multiplicities of the vertex restrictions, indexed by vertex ``0..N``."""

    ms_t: tuple[int, ...]
    ms_phi: tuple[int, ...]
    t_angles: tuple[tuple[float, ...], ...] = ()
    phi_angles: tuple[tuple[float, ...], ...] = ()
    methods_t: tuple[str, ...] = ()
    methods_phi: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.ms_t) != len(self.ms_phi) or not self.ms_t:
            raise ValueError("ms_t and ms_phi must be nonempty and of equal length")

    @property
    def N(self) -> int:
        return len(self.ms_t) - 1


@dataclass(frozen=True)
class WindingProfile:
    """Per-face winding numbers; ``w[i - 1]`` belongs to face ``i``."""

    w: tuple[int, ...]
    wprime: tuple[int, ...]
    W_in: tuple[int, ...]
    W_out: tuple[int, ...]
    certified_nonempty: frozenset[int]

    @property
    def N(self) -> int:
        return len(self.w)

    def w_at(self, i: int) -> int:
        return self.w[i - 1]

    def wprime_at(self, i: int) -> int:
        return self.wprime[i - 1]


def _vertex_sides(p: MixedPolynomial, point, side: str):
    """Face function of one vertex and its lattice-predicted bi-degree on ``side``."""
    f = face_function(p, [point])
    if side == T_SIDE:
        pred = (max(m.nu1 for m in f), max(m.mu1 for m in f))
    else:
        pred = (max(m.nu2 for m in f), max(m.mu2 for m in f))
    return f, pred


def _entry(p, vertex: int, point, side: str, cfg: Config):
    f, pred = _vertex_sides(p, point, side)
    spec = specialize_t if side == T_SIDE else specialize_phi
    K = cfg.t_samples
    values, methods, used = [], [], []
    failures = 0
    for k in range(K):
        angle = 2 * math.pi * k / K
        tries = 0
        while True:
            h = spec(f, angle, cfg.tol_zero)
            if not h.is_zero() and h.bidegree == pred:
                break
            failures += 1
            tries += 1
            if failures > cfg.max_angle_replacements:
                raise DegenerateSpecialization(
                    f"vertex {vertex} ({side}): specialization degenerates at "
                    f"{failures} sampled angles",
                    vertex=vertex,
                    side=side,
                )
            angle = (2 * math.pi * k / K + tries * GOLDEN_ANGLE) % (2 * math.pi)
        try:
            res = signed_multiplicity_at_zero(h, cfg)
        except RootOnUnitCircle as exc:
            raise exc.tagged(vertex=vertex, side=side, angle=angle) from None
        values.append(res.ms)
        methods.append(res.method)
        used.append(angle)
    if len(set(values)) != 1:
        raise InconsistentAcrossAngles(
            f"vertex {vertex} ({side}): multiplicities {values} differ across angles",
            vertex=vertex,
            side=side,
            values=values,
            angles=used,
        )
    return values[0], methods[0], tuple(used)


def multiplicity_table(p: MixedPolynomial, b: NewtonBoundary | None = None, cfg: Config = DEFAULT) -> MultiplicityTable:
    if b is None:
        b = newton_boundary(support(p))
    if not is_convenient(b):
        raise NotConvenient("the Newton boundary does not meet both coordinate axes")
    cols = {}
    for side in (T_SIDE, PHI_SIDE):
        cols[side] = [_entry(p, i, pt, side, cfg) for i, pt in enumerate(b.vertices)]
    t, ph = cols[T_SIDE], cols[PHI_SIDE]
    return MultiplicityTable(
        ms_t=tuple(e[0] for e in t),
        ms_phi=tuple(e[0] for e in ph),
        t_angles=tuple(e[2] for e in t),
        phi_angles=tuple(e[2] for e in ph),
        methods_t=tuple(e[1] for e in t),
        methods_phi=tuple(e[1] for e in ph),
    )


def winding_profile(tab: MultiplicityTable) -> WindingProfile:
    N = tab.N
    w = tuple(tab.ms_t[i] - tab.ms_t[i - 1] for i in range(1, N + 1))
    wp = tuple(tab.ms_phi[i - 1] - tab.ms_phi[i] for i in range(1, N + 1))
    cert = frozenset(i for i in range(1, N + 1) if max(abs(w[i - 1]), abs(wp[i - 1])) > 0)
    return WindingProfile(
        w=w,
        wprime=wp,
        W_in=tuple(tab.ms_t[1:]),
        W_out=tuple(tab.ms_phi[:-1]),
        certified_nonempty=cert,
    )


# -- annulus oracle ---------------------------------------------------------------


def _circle_min(h: UniMixedPoly, samples: int = 4096) -> float:
    theta = 2 * np.pi * np.arange(samples) / samples
    return float(np.abs(h.evaluate(np.exp(1j * theta))).min())


def annulus_radii(g: UniMixedPoly, samples: int = 4096) -> tuple[float, float]:
    """Radii ``r < R`` such that every root of ``g`` in ``C*`` has ``r < |w| < R``.

    Uses the extreme graded pieces: on ``|w| = R`` the top piece dominates once
    ``R`` exceeds the sum of the lower coefficients over its minimum on the unit
    circle, and symmetrically near 0.
    """
    lo, hi = g.degree_range()
    if lo == hi:
        return 0.5, 2.0
    weight = {}
    for (p, q), c in g.terms:
        weight[p + q] = weight.get(p + q, 0.0) + abs(c)
    # halve the sampled minima: sampling overestimates the true minimum
    m_hi = 0.5 * _circle_min(g.graded(hi), samples)
    m_lo = 0.5 * _circle_min(g.graded(lo), samples)
    if m_hi <= 1e-9 * weight[hi] or m_lo <= 1e-9 * weight[lo]:
        raise VanishesOnCircle("an extreme graded piece vanishes on the unit circle")
    below = sum(a for d, a in weight.items() if d < hi)
    above = sum(a for d, a in weight.items() if d > lo)
    R = 2.0 * max(1.0, below / m_hi)
    r = 0.5 * min(1.0, m_lo / above)
    return r, R


def face_restriction(p: MixedPolynomial, b: NewtonBoundary, face_index: int, angle: float, side: str = T_SIDE, cfg: Config = DEFAULT) -> UniMixedPoly:
    """``g_i`` with ``v = e^{i angle}`` (t side) or ``u = e^{i angle}`` (phi side)."""
    f = face_function(p, b.face(face_index).points)
    spec = specialize_t if side == T_SIDE else specialize_phi
    return spec(f, angle, cfg.tol_zero)


def winding_oracle(p: MixedPolynomial, face_index: int, t: float, cfg: Config = DEFAULT, side: str = T_SIDE, b: NewtonBoundary | None = None) -> int:
    """Winding of the face link measured as degree at a large circle minus a small one.

    On the t side this is ``w[i]``; on the phi side, ``wprime[i]``.
    """
    if b is None:
        b = newton_boundary(support(p))
    g = face_restriction(p, b, face_index, t, side, cfg)
    r, R = annulus_radii(g)
    return adaptive_degree(g, R, cfg) - adaptive_degree(g, r, cfg)


# -- roots of a face restriction in C* ---------------------------------------------


@dataclass(frozen=True)
class FaceRoots:
    roots: tuple[complex, ...]
    signs: tuple[int | None, ...]
    expected_total: int | None
    consistent: bool | None


def _newton2(g: UniMixedPoly, z: complex, iters: int = 60) -> complex:
    """Newton's method on ``g`` viewed as a map R^2 -> R^2 (least squares steps)."""
    best = z
    best_val = abs(g.evaluate(z))
    for _ in range(iters):
        val = g.evaluate(z)
        a, bb = wirtinger_at(g, z)
        J = np.array([[(a + bb).real, (1j * (a - bb)).real], [(a + bb).imag, (1j * (a - bb)).imag]])
        step = np.linalg.lstsq(J, -np.array([val.real, val.imag]), rcond=None)[0]
        z = z + complex(step[0], step[1])
        if z == 0 or not np.isfinite(z):
            break
        cur = abs(g.evaluate(z))
        if cur < best_val:
            best, best_val = z, cur
        if abs(complex(step[0], step[1])) <= 1e-15 * abs(z):
            break
    return best


def face_roots(g: UniMixedPoly, cfg: Config = DEFAULT, n_radii: int = 160, n_angles: int = 256, refinements: int = 2) -> FaceRoots:
    """Zeros of ``g`` in ``C*`` from a polar-grid minimum search plus Newton.

    The search is heuristic.  ``consistent`` reports whether the sum of the
    root signs matches the annulus winding (``None`` when a sign is degenerate
    or the winding could not be measured).  On a mismatch the grid is refined
    up to ``refinements`` times.
    """
    for _ in range(refinements):
        res = _face_roots_once(g, cfg, n_radii, n_angles)
        if res.consistent is not False:
            return res
        n_radii, n_angles = 2 * n_radii, 2 * n_angles
    return _face_roots_once(g, cfg, n_radii, n_angles)


def _face_roots_once(g: UniMixedPoly, cfg: Config, n_radii: int, n_angles: int) -> FaceRoots:
    r, R = annulus_radii(g)
    rad = np.exp(np.linspace(math.log(r), math.log(R), n_radii))
    ang = 2 * np.pi * np.arange(n_angles) / n_angles
    W = rad[:, None] * np.exp(1j * ang)[None, :]
    A = np.abs(g.evaluate(W))
    core = A[1:-1, :]
    is_min = np.ones_like(core, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == 0 and dj == 0:
                continue
            shifted = np.roll(A, -dj, axis=1)[1 + di : A.shape[0] - 1 + di, :]
            is_min &= core <= shifted
    found: list[complex] = []
    for i, j in zip(*np.nonzero(is_min)):
        z = _newton2(g, complex(W[i + 1, j]))
        mod = abs(z)
        if not (r < mod < R):
            continue
        size = sum(abs(c) * mod ** (p + q) for (p, q), c in g.terms)
        if abs(g.evaluate(z)) >= cfg.tol_root * size:
            continue
        if any(abs(z - y) <= 1e-6 * (1 + mod) for y in found):
            continue
        found.append(z)
    found.sort(key=lambda z: (abs(z), math.atan2(z.imag, z.real)))
    signs = []
    for z in found:
        try:
            signs.append(simple_root_sign(g, z, cfg.with_overrides(tol_root=math.inf)))
        except IndeterminateSign:
            signs.append(None)
    try:
        expected = adaptive_degree(g, R, cfg) - adaptive_degree(g, r, cfg)
    except NumericalError:
        expected = None
    if expected is None or any(s is None for s in signs):
        consistent = None
    else:
        consistent = sum(signs) == expected
    return FaceRoots(tuple(found), tuple(signs), expected, consistent)
