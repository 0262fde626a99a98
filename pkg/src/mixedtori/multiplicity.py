"""Signed multiplicity at the origin of homogeneous mixed univariate polynomials.

A homogeneous ``h(w, ~w)`` of degree ``d`` and bi-degree ``(m, n)`` factors as

    c * w^(d-n) * ~w^(d-m) * prod_i (w - s_i ~w),

where the ``s_i`` are the ``m + n - d`` roots of the ordinary polynomial
``P(s) = sum_nu c_nu s^(nu - nu_min)``.  Each factor ``w - s ~w`` has degree +1
on a circle around 0 if ``|s| < 1`` and -1 if ``|s| > 1``, which gives

    ms = m - n + #{|s_i| < 1} - #{|s_i| > 1}.

:func:`degree_oracle` measures the same integer independently, as the winding
number of ``h`` along a circle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .config import DEFAULT, Config
from .errors import (
    AliasingSuspected,
    IndeterminateSign,
    NotARoot,
    RootFindingFailed,
    RootOnUnitCircle,
    VanishesOnCircle,
    ZeroPolynomial,
)
from .mixedpoly import HomUniMixedPoly, UniMixedPoly, wirtinger_at

LEMMA51 = "lemma51"
SEMIHOLO = "semiholo-fast"
CONSTANT = "constant"


@dataclass(frozen=True)
class MultiplicityResult:
    ms: int
    bidegree: tuple[int, int]
    degree: int
    roots: tuple[complex, ...]
    inside: tuple[bool, ...]
    epsilon_sum: int
    method: str
    leading: complex

    def reconstruct(self) -> HomUniMixedPoly:
        """Expand ``c w^(d-n) ~w^(d-m) prod (w - s_i ~w)`` back into coefficients."""
        m, n = self.bidegree
        d = self.degree
        if self.method == CONSTANT:
            return HomUniMixedPoly.from_coeffs(0, {0: self.leading})
        # np.poly gives the monic product, highest power first
        prod = np.poly(np.array(self.roots, dtype=complex)) if self.roots else np.array([1.0 + 0j])
        k = len(self.roots)
        coeffs = {(d - n) + (k - j): self.leading * prod[j] for j in range(k + 1)}
        return HomUniMixedPoly.from_coeffs(d, coeffs)


def _as_hom(h) -> HomUniMixedPoly:
    return h.homogeneous() if isinstance(h, UniMixedPoly) else h


def _horner(a: np.ndarray, z: complex) -> tuple[complex, complex]:
    """Value and derivative of ``sum a[j] z^j`` (``a`` in ascending order)."""
    p = 0j
    dp = 0j
    for coef in a[::-1]:
        dp = dp * z + p
        p = p * z + coef
    return p, dp


def _companion_roots(a: np.ndarray) -> np.ndarray:
    k = len(a) - 1
    monic = a[:k] / a[k]
    comp = np.zeros((k, k), dtype=np.complex128)
    comp[1:, :-1] = np.eye(k - 1)
    comp[:, -1] = -monic
    return np.linalg.eigvals(comp)


def _aberth_roots(a: np.ndarray, max_iter: int) -> np.ndarray:
    k = len(a) - 1
    r = abs(a[0] / a[k]) ** (1.0 / k)
    z = r * np.exp(1j * (2 * np.pi * np.arange(k) / k + 0.4))
    for _ in range(max_iter):
        done = True
        for i in range(k):
            p, dp = _horner(a, z[i])
            if p == 0:
                continue
            ratio = p / dp if dp != 0 else p
            repulse = np.sum(1.0 / (z[i] - np.delete(z, i)))
            step = ratio / (1 - ratio * repulse)
            z[i] -= step
            if abs(step) > 1e-15 * (1 + abs(z[i])):
                done = False
        if done:
            return z
    raise RootFindingFailed(f"Aberth iteration did not converge in {max_iter} iterations")


def associated_roots(h, cfg: Config = DEFAULT) -> tuple[complex, ...]:
    """Roots of ``P(s) = sum_nu c_nu s^(nu - nu_min)``, polished and residual-checked."""
    h = _as_hom(h)
    if h.is_zero() or h.nu_max == h.nu_min:
        raise ValueError("need m + n - d >= 1 (at least two distinct w-exponents)")
    lo = h.nu_min
    k = h.nu_max - lo
    a = np.zeros(k + 1, dtype=np.complex128)
    for nu, c in h.coeffs:
        a[nu - lo] = c
    if k <= cfg.companion_max_degree:
        raw = _companion_roots(a)
    else:
        raw = _aberth_roots(a, cfg.aberth_max_iter)
    norm = float(np.abs(a).sum())
    roots = []
    for z in raw:
        z = complex(z)
        p, dp = _horner(a, z)
        if dp != 0:
            z2 = z - p / dp
            p2, _ = _horner(a, z2)
            if abs(p2) < abs(p):
                z, p = z2, p2
        resid = abs(p) / (1.0 + norm * max(1.0, abs(z)) ** k)
        if not resid < cfg.tol_residual:
            raise RootFindingFailed(f"root {z} has scaled residual {resid:.3g}")
        roots.append(complex(z))
    roots.sort(key=lambda z: (abs(z), math.atan2(z.imag, z.real)))
    return tuple(roots)


def signed_multiplicity_at_zero(h, cfg: Config = DEFAULT, fast_paths: bool = True) -> MultiplicityResult:
    """Signed multiplicity at 0 of a nonzero homogeneous mixed polynomial.

    Raises :class:`RootOnUnitCircle` when an associated root lies within
    ``cfg.tol_unit`` of the unit circle, i.e. when ``h`` vanishes somewhere in
    ``C*`` and the multiplicity at 0 is not isolated.
    """
    h = _as_hom(h)
    if h.is_zero():
        raise ZeroPolynomial("signed multiplicity of the zero polynomial is undefined")
    d = h.degree
    m, n = h.bidegree
    lead = h.coeffs[-1][1]
    if d == 0:
        return MultiplicityResult(0, (0, 0), 0, (), (), 0, CONSTANT, lead)
    if fast_paths and (m == 0 or n == 0):
        return MultiplicityResult(m - n, (m, n), d, (), (), 0, SEMIHOLO, lead)
    if m + n - d == 0:
        return MultiplicityResult(m - n, (m, n), d, (), (), 0, LEMMA51, lead)
    roots = associated_roots(h, cfg)
    inside = []
    for z in roots:
        gap = float(abs(z)) - 1.0
        if abs(gap) <= cfg.tol_unit:
            raise RootOnUnitCircle(f"associated root {z} lies on the unit circle", z)
        inside.append(bool(gap < 0))
    eps = sum(1 if flag else -1 for flag in inside)
    return MultiplicityResult(m - n + eps, (m, n), d, roots, tuple(inside), eps, LEMMA51, lead)


def degree_oracle(h: UniMixedPoly, radius: float, samples: int = 4096, cfg: Config = DEFAULT) -> int:
    """Winding number of ``h`` along the circle ``|w| = radius``.

    Sums principal-branch argument increments over ``samples`` uniform steps.
    The nonvanishing check is relative to ``sum |c| radius^(p+q)`` so that tiny
    and huge radii are treated alike.
    """
    if h.is_zero():
        raise VanishesOnCircle("the zero polynomial vanishes everywhere")
    c, p, q = h.arrays()
    a = c * float(radius) ** (p + q)
    scale = float(np.abs(a).sum())
    total, max_step, lo, _ = kernels.circle_walk(a, p - q, samples)
    if not lo > cfg.tol_vanish * scale:
        raise VanishesOnCircle(f"|h| drops to {lo:.3g} on the circle of radius {radius}")
    turns = total / (2 * math.pi)
    deg = round(turns)
    defect = abs(turns - deg)
    if defect >= 0.1 or max_step >= math.pi / 2:
        raise AliasingSuspected(
            f"winding sum not resolved with {samples} samples "
            f"(defect {defect:.3g}, max step {max_step:.3g})",
            defect,
            max_step,
        )
    return int(deg)


def adaptive_degree(h: UniMixedPoly, radius: float, cfg: Config = DEFAULT, samples: int | None = None) -> int:
    """:func:`degree_oracle`, doubling the sample count while aliasing is suspected."""
    n = samples or cfg.oracle_samples
    while True:
        try:
            return degree_oracle(h, radius, n, cfg)
        except AliasingSuspected:
            if n >= cfg.oracle_max_samples:
                raise
            n *= 2


def simple_root_sign(h: UniMixedPoly, alpha: complex, cfg: Config = DEFAULT) -> int:
    """+1 for a positive simple root, -1 for a negative one."""
    val = h.evaluate(alpha)
    if not abs(val) < cfg.tol_root:
        raise NotARoot(f"|h({alpha})| = {abs(val):.3g} is not below {cfg.tol_root}")
    dw, dwb = wirtinger_at(h, alpha)
    gap = abs(dw) - abs(dwb)
    if abs(gap) <= cfg.tol_sign:
        raise IndeterminateSign(f"Wirtinger moduli agree to {abs(gap):.3g} at {alpha}")
    return 1 if gap > 0 else -1
