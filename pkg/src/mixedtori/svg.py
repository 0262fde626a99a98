"""SVG drawing of a Newton polygon."""
from __future__ import annotations

from .newton import NewtonBoundary

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _f(x: float) -> str:
    return f"{x:.2f}"


def render_polygon_svg(b: NewtonBoundary, support, unit: float = 32.0) -> str:
    """Axes, support dots, boundary chain with face labels, and the shaded region above it."""
    pts = sorted({(int(x), int(y)) for x, y in support} | {tuple(v) for v in b.vertices})
    xmax = max(x for x, _ in pts) + 2
    ymax = max(y for _, y in pts) + 2
    m = 40.0
    W = xmax * unit + 2 * m
    H = ymax * unit + 2 * m

    def X(x):
        return m + x * unit

    def Y(y):
        return H - m - y * unit

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(W)}" height="{_f(H)}" '
        f'viewBox="0 0 {_f(W)} {_f(H)}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    v = b.vertices
    region = [(v[0].x, ymax)] + [(p.x, p.y) for p in v] + [(xmax, v[-1].y), (xmax, ymax)]
    out.append(
        '<polygon class="region" fill="#cfe3f7" stroke="none" points="'
        + " ".join(f"{_f(X(x))},{_f(Y(y))}" for x, y in region)
        + '"/>'
    )
    out.append(f'<line class="axis" x1="{_f(X(0))}" y1="{_f(Y(0))}" x2="{_f(X(xmax))}" y2="{_f(Y(0))}" stroke="black"/>')
    out.append(f'<line class="axis" x1="{_f(X(0))}" y1="{_f(Y(0))}" x2="{_f(X(0))}" y2="{_f(Y(ymax))}" stroke="black"/>')
    for x in range(xmax):
        out.append(f'<text x="{_f(X(x))}" y="{_f(Y(0) + 16)}" font-size="10" text-anchor="middle">{x}</text>')
    for y in range(1, ymax):
        out.append(f'<text x="{_f(X(0) - 8)}" y="{_f(Y(y) + 4)}" font-size="10" text-anchor="end">{y}</text>')
    if len(v) > 1:
        out.append(
            '<polyline class="chain" fill="none" stroke="#1f4e96" stroke-width="2" points="'
            + " ".join(f"{_f(X(p.x))},{_f(Y(p.y))}" for p in v)
            + '"/>'
        )
    for face in b.faces:
        mx = (face.start.x + face.end.x) / 2
        my = (face.start.y + face.end.y) / 2
        label = "Δ¹" + str(face.index).translate(_SUB)
        out.append(
            f'<text class="face-label" x="{_f(X(mx) - 6)}" y="{_f(Y(my) + 14)}" font-size="12" '
            f'text-anchor="end">{label}</text>'
        )
    for x, y in pts:
        if (x, y) in {tuple(u) for u in support}:
            out.append(f'<circle class="support" cx="{_f(X(x))}" cy="{_f(Y(y))}" r="3.5" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
