"""Numeric inner loops, compiled when available.

The Cython extension ``_ckernels`` is used when it was built; otherwise (or
when ``MIXEDTORI_PURE_PYTHON`` is set) the numpy versions in ``_pykernels`` are
used.  Both take the same arguments and return the same tuples.
"""
from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from . import _pykernels as python_kernels

try:
    from . import _ckernels as compiled_kernels
except ImportError:  # extension not built
    compiled_kernels = None

if compiled_kernels is not None and not os.environ.get("MIXEDTORI_PURE_PYTHON"):
    active = compiled_kernels
    BACKEND = "cython"
else:
    active = python_kernels
    BACKEND = "python"


@lru_cache(maxsize=32)
def _roots_of_unity(n: int) -> np.ndarray:
    table = np.exp(2j * np.pi * np.arange(n) / n)
    table.setflags(write=False)
    return table


def roots_of_unity(n: int) -> np.ndarray:
    return _roots_of_unity(int(n))


def _i64(x) -> np.ndarray:
    return np.ascontiguousarray(x, dtype=np.int64)


def _c128(x) -> np.ndarray:
    return np.ascontiguousarray(x, dtype=np.complex128)


def torus_grid_min(c, p, q, grid: int, backend=None):
    impl = backend or active
    return impl.torus_grid_min(_c128(c), _i64(p), _i64(q), roots_of_unity(grid))


def circle_walk(a, s, samples: int, backend=None):
    impl = backend or active
    return impl.circle_walk(_c128(a), _i64(s), roots_of_unity(samples))


__all__ = [
    "BACKEND",
    "active",
    "circle_walk",
    "compiled_kernels",
    "python_kernels",
    "roots_of_unity",
    "torus_grid_min",
]
