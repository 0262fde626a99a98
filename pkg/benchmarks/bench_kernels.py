"""Time the compiled and numpy kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from mixedtori import kernels
from mixedtori.analysis import analyze

THREE_FACE = "u^5 + u^2 ~u^2 v + u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2 + ~u v^6 + v^9"


def cases(rng):
    c = rng.normal(size=6) + 1j * rng.normal(size=6)
    p = rng.integers(-8, 9, size=6)
    q = rng.integers(-8, 9, size=6)
    yield "torus_grid_min G=256", lambda b: kernels.torus_grid_min(c, p, q, 256, backend=b)
    yield "torus_grid_min G=1024", lambda b: kernels.torus_grid_min(c, p, q, 1024, backend=b)
    yield "circle_walk S=4096", lambda b: kernels.circle_walk(c, p, 4096, backend=b)
    yield "circle_walk S=65536", lambda b: kernels.circle_walk(c, p, 65536, backend=b)


def best(fn, repeat):
    n, _ = timeit.Timer(fn).autorange()
    return min(timeit.repeat(fn, number=n, repeat=repeat)) / n


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", kernels.python_kernels)]
    if kernels.compiled_kernels is not None:
        backends.append(("cython", kernels.compiled_kernels))
    else:
        print("compiled extension not built; timing numpy only")
    print(f"{'kernel':<24}" + "".join(f"{name:>14}" for name, _ in backends) + ("     speedup" if len(backends) == 2 else ""))
    for label, run in cases(np.random.default_rng(0)):
        times = [best(lambda b=b: run(b), args.repeat) for _, b in backends]
        row = f"{label:<24}" + "".join(f"{t * 1e3:>11.3f} ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)
    t = best(lambda: analyze(THREE_FACE), 3)
    print(f"end-to-end analyze (three_face, {kernels.BACKEND} backend): {t * 1e3:.1f} ms")


if __name__ == "__main__":
    main()
