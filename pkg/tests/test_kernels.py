import os
import subprocess
import sys

import numpy as np
import pytest

from mixedtori import kernels

needs_compiled = pytest.mark.skipif(kernels.compiled_kernels is None, reason="extension not built")


def _random_terms(rng, m, lo=-6, hi=7):
    c = rng.normal(size=m) + 1j * rng.normal(size=m)
    p = rng.integers(lo, hi, size=m)
    q = rng.integers(lo, hi, size=m)
    return c, p, q


def test_python_grid_min_matches_brute_force():
    rng = np.random.default_rng(0)
    c, p, q = _random_terms(rng, 5)
    G = 48
    ang = 2 * np.pi * np.arange(G) / G
    vals = sum(cm * np.exp(1j * pm * ang)[:, None] * np.exp(1j * qm * ang)[None, :] for cm, pm, qm in zip(c, p, q))
    mn, j, k = kernels.torus_grid_min(c, p, q, G, backend=kernels.python_kernels)
    assert mn == pytest.approx(np.abs(vals).min(), abs=1e-12)
    assert abs(vals[j, k]) == pytest.approx(mn, abs=1e-12)


def test_circle_walk_counts_winding():
    for s in (-3, 0, 1, 5):
        total, step, lo, hi = kernels.circle_walk([2.0], [s], 64, backend=kernels.python_kernels)
        assert total / (2 * np.pi) == pytest.approx(s, abs=1e-9)
        assert lo == pytest.approx(2.0) and hi == pytest.approx(2.0)


@needs_compiled
def test_backends_agree_grid_min():
    rng = np.random.default_rng(1)
    for G in (16, 64, 257):
        for _ in range(20):
            c, p, q = _random_terms(rng, int(rng.integers(1, 7)))
            a = kernels.torus_grid_min(c, p, q, G, backend=kernels.python_kernels)
            b = kernels.torus_grid_min(c, p, q, G, backend=kernels.compiled_kernels)
            assert a[0] == pytest.approx(b[0], abs=1e-12)
            # ties may resolve differently; the reported point must attain the minimum either way
            if (a[1], a[2]) != (b[1], b[2]):
                ang = 2 * np.pi / G
                val = sum(cm * np.exp(1j * (pm * b[1] + qm * b[2]) * ang) for cm, pm, qm in zip(c, p, q))
                assert abs(val) == pytest.approx(a[0], abs=1e-12)


@needs_compiled
def test_backends_agree_circle_walk():
    rng = np.random.default_rng(2)
    for S in (64, 1024, 4096):
        for _ in range(20):
            m = int(rng.integers(1, 6))
            a = rng.normal(size=m) + 1j * rng.normal(size=m)
            s = rng.integers(-10, 11, size=m)
            x = kernels.circle_walk(a, s, S, backend=kernels.python_kernels)
            y = kernels.circle_walk(a, s, S, backend=kernels.compiled_kernels)
            assert x == pytest.approx(y, abs=1e-9)


def test_roots_of_unity_cached_and_readonly():
    t = kernels.roots_of_unity(12)
    assert t is kernels.roots_of_unity(12)
    assert not t.flags.writeable
    assert abs(t[3] - 1j) < 1e-15


def test_pure_python_switch():
    env = dict(os.environ, MIXEDTORI_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from mixedtori import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
    if kernels.compiled_kernels is not None and not os.environ.get("MIXEDTORI_PURE_PYTHON"):
        assert kernels.BACKEND == "cython"


def test_results_identical_across_backends():
    code = (
        "from mixedtori.mixedpoly import parse;"
        "from mixedtori.winding import multiplicity_table;"
        "t = multiplicity_table(parse('u^3 + u^2 ~u - i u ~u^2 + v^3'));"
        "print(t.ms_t, t.ms_phi)"
    )
    outs = set()
    for flag in ("", "1"):
        env = dict(os.environ)
        env.pop("MIXEDTORI_PURE_PYTHON", None)
        if flag:
            env["MIXEDTORI_PURE_PYTHON"] = flag
        r = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        outs.add(r.stdout)
    assert len(outs) == 1
