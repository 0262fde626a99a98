"""Support, Newton boundary and convenience of a mixed polynomial.

All geometry here is exact integer arithmetic on lattice points.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import EmptySupport
from .mixedpoly import MixedPolynomial


class LatticePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class Face:
    """Compact 1-face number ``index`` (1-based, left to right) of the boundary."""

    index: int
    start: LatticePoint
    end: LatticePoint
    points: tuple[LatticePoint, ...]

    @property
    def normal(self) -> tuple[int, int]:
        """Primitive inward normal ``(w1, w2)``, both entries positive."""
        a, b = self.start.y - self.end.y, self.end.x - self.start.x
        g = math.gcd(a, b)
        return (a // g, b // g)

    @property
    def level(self) -> int:
        w1, w2 = self.normal
        return w1 * self.start.x + w2 * self.start.y


@dataclass(frozen=True)
class NewtonBoundary:
    vertices: tuple[LatticePoint, ...]
    faces: tuple[Face, ...]

    @property
    def N(self) -> int:
        return len(self.faces)

    def face(self, i: int) -> Face:
        return self.faces[i - 1]


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def support(p: MixedPolynomial) -> frozenset[LatticePoint]:
    return frozenset(LatticePoint(*m.lattice_point) for m in p.monomials)


def _staircase(points: Iterable) -> list[LatticePoint]:
    """Pareto-minimal points, sorted by increasing x (hence decreasing y)."""
    out: list[LatticePoint] = []
    for pt in sorted(set(points)):
        if not out or pt.y < out[-1].y:
            out.append(pt)
    return out


def newton_boundary(s: Iterable) -> NewtonBoundary:
    """Vertices and compact faces of the Newton polygon of the point set ``s``.

    The compact faces are the lower convex chain of the staircase of
    Pareto-minimal points.  Support points in the relative interior of an edge
    are attached to that face and never become vertices.
    """
    pts = [LatticePoint(int(x), int(y)) for x, y in s]
    if not pts:
        raise EmptySupport("the support is empty")
    if any(x < 0 or y < 0 for x, y in pts):
        raise ValueError("lattice points must have nonnegative coordinates")
    chain: list[LatticePoint] = []
    for pt in _staircase(pts):
        # pop while the turn is not strictly counter-clockwise (drops collinear points)
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], pt) <= 0:
            chain.pop()
        chain.append(pt)
    unique = sorted(set(pts))
    faces = []
    for i, (a, b) in enumerate(zip(chain, chain[1:]), start=1):
        on = tuple(q for q in unique if a.x <= q.x <= b.x and _cross(a, b, q) == 0)
        faces.append(Face(i, a, b, on))
    return NewtonBoundary(tuple(chain), tuple(faces))


def is_convenient(b: NewtonBoundary) -> bool:
    return b.vertices[0].x == 0 and b.vertices[-1].y == 0
