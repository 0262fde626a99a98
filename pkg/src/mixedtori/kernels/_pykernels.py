"""numpy implementations of the numeric inner loops (fallback backend)."""
from __future__ import annotations

import numpy as np


def torus_grid_min(c, p, q, table):
    """Minimum of ``|sum_m c_m e^{i p_m phi} e^{i q_m t}|`` over the uniform grid.

    ``table`` holds the ``G``-th roots of unity; returns ``(min, j, k)`` with the
    minimizer at ``phi = 2 pi j / G``, ``t = 2 pi k / G``.
    """
    G = len(table)
    idx = np.arange(G)
    vals = np.zeros((G, G), dtype=np.complex128)
    for cm, pm, qm in zip(c, p, q):
        ephi = cm * table[(pm * idx) % G]
        et = table[(qm * idx) % G]
        vals += ephi[:, None] * et[None, :]
    a2 = vals.real**2 + vals.imag**2
    flat = int(np.argmin(a2))
    j, k = divmod(flat, G)
    return float(np.sqrt(a2[j, k])), j, k


def circle_walk(a, s, table):
    """Walk ``sum_m a_m e^{i s_m theta}`` once around the circle.

    Returns ``(total, max_step, min_abs, max_abs)``: the summed principal-branch
    argument increments over the ``len(table)`` uniform steps, the largest single
    increment, and the extreme moduli seen.
    """
    S = len(table)
    idx = np.arange(S)
    vals = np.zeros(S, dtype=np.complex128)
    for am, sm in zip(a, s):
        vals += am * table[(sm * idx) % S]
    closed = np.append(vals, vals[0])
    d = closed[1:] * np.conj(closed[:-1])
    steps = np.arctan2(d.imag, d.real)
    mod = np.abs(vals)
    return float(steps.sum()), float(np.abs(steps).max()), float(mod.min()), float(mod.max())
