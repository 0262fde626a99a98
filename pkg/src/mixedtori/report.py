"""Structured (JSON) and plain-text renderings of an :class:`Analysis`."""
from __future__ import annotations

import json
import math

from . import __version__
from .analysis import Analysis
from .criteria import CriterionOutcome, TorusStatus
from .mixedpoly import format_polynomial
from .torus_check import HypothesisReport

SCHEMA = "mixedtori/1"


def _real(x: float):
    if not math.isfinite(x):
        return repr(x)
    return float(f"{x:.12g}")


def clean(obj):
    """Reduce to JSON types; reals rounded to 12 significant digits."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return int(obj)
    if isinstance(obj, float):
        return _real(obj)
    if isinstance(obj, complex):
        return {"re": _real(obj.real), "im": _real(obj.imag)}
    if isinstance(obj, dict):
        return {str(k): clean(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [clean(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [clean(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalar
        return clean(obj.item())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(doc: dict) -> str:
    return json.dumps(clean(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _outcome(o: CriterionOutcome) -> dict:
    return {
        "criterion": o.criterion,
        "fired": o.fired,
        "essential_tori": o.essential_tori,
        "evidence": [
            {
                "torus": e.torus,
                "quantity": e.quantity,
                "index": e.index,
                "value": e.value,
                "op": e.op,
                "bound": e.bound,
                "text": str(e),
            }
            for e in o.evidence
        ],
        "caveats": list(o.caveats),
        "reason": o.reason,
    }


def _hypotheses(h: HypothesisReport) -> dict:
    return {
        "convenient": h.convenient,
        "gamma_nice": h.gamma_nice,
        "nondegeneracy": "asserted (spot-checked)" if h.nondegeneracy_asserted else "not asserted",
        "vertices": [
            {
                "index": v.index,
                "point": list(v.point),
                "status": v.status,
                "method": v.method,
                "min_modulus": v.min_modulus,
                "witness": None if v.witness is None else {"phi": v.witness[0], "t": v.witness[1]},
                "unit_margin": v.unit_margin,
            }
            for v in h.vertices
        ],
        "faces": [
            {"index": f.index, "status": f.status, "zeros_checked": f.zeros_checked, "witness": f.witness}
            for f in h.faces
        ],
    }


def to_struct(a: Analysis) -> dict:
    doc: dict = {
        "schema": SCHEMA,
        "version": __version__,
        "input": a.text,
        "config": a.cfg.as_dict(),
        "status": a.status,
        "exit_code": a.exit_code,
        "errors": [e.record() for e in a.errors],
    }
    if a.poly is not None:
        doc["polynomial"] = format_polynomial(a.poly)
    if a.support is not None:
        doc["support"] = sorted([list(pt) for pt in a.support])
    if a.boundary is not None:
        b = a.boundary
        doc["boundary"] = {
            "N": b.N,
            "vertices": [list(v) for v in b.vertices],
            "faces": [
                {
                    "index": f.index,
                    "start": list(f.start),
                    "end": list(f.end),
                    "normal": list(f.normal),
                    "points": [list(q) for q in f.points],
                }
                for f in b.faces
            ],
        }
    if a.hypotheses is not None:
        doc["hypotheses"] = _hypotheses(a.hypotheses)
    if a.table is not None:
        t = a.table
        doc["table"] = {
            "ms_t": t.ms_t,
            "ms_phi": t.ms_phi,
            "methods_t": t.methods_t,
            "methods_phi": t.methods_phi,
            "t_angles": t.t_angles,
            "phi_angles": t.phi_angles,
        }
    if a.profile is not None:
        pr = a.profile
        doc["profile"] = {
            "w": pr.w,
            "wprime": pr.wprime,
            "W_in": pr.W_in,
            "W_out": pr.W_out,
            "certified_nonempty": pr.certified_nonempty,
        }
    if a.outcomes:
        doc["criteria"] = [_outcome(o) for o in a.outcomes]
    if a.verdict is not None:
        v = a.verdict
        doc["verdict"] = {
            "tori": v.tori,
            "essential": v.essential,
            "non_hyperbolic": v.non_hyperbolic,
            "reducible_or_toroidal": v.reducible_or_toroidal,
            "fired": list(v.fired),
            "caveats": list(v.caveats),
        }
    return doc


def _ints(xs) -> str:
    return "[" + ", ".join(str(x) for x in xs) + "]"


def to_text(a: Analysis) -> str:
    lines = [f"mixedtori {__version__}"]
    if a.poly is not None:
        lines.append(f"f = {format_polynomial(a.poly)}")
    elif a.text is not None:
        lines.append(f"input: {a.text}")
    if a.boundary is not None:
        b = a.boundary
        lines.append("Newton boundary: " + " - ".join(f"({v.x},{v.y})" for v in b.vertices) + f"  (N = {b.N})")
    if a.hypotheses is not None:
        h = a.hypotheses
        lines.append(f"convenient: {'yes' if h.convenient else 'no'}; gamma-nice: {h.gamma_nice}")
        for v in h.vertices:
            lines.append(f"  vertex {v.index} {tuple(v.point)}: {v.status} ({v.method})")
        for f in h.faces:
            lines.append(f"  face {f.index}: {f.status}")
    if a.table is not None:
        lines.append(f"ms_t   = {_ints(a.table.ms_t)}")
        lines.append(f"ms_phi = {_ints(a.table.ms_phi)}")
    if a.profile is not None:
        pr = a.profile
        lines.append(f"w      = {_ints(pr.w)}")
        lines.append(f"w'     = {_ints(pr.wprime)}")
        lines.append(f"certified nonempty faces: {_ints(sorted(pr.certified_nonempty))}")
    for o in a.outcomes:
        mark = "fired" if o.fired else "not fired"
        tori = f" tori {_ints(sorted(o.essential_tori))}" if o.essential_tori else ""
        why = f" ({o.reason})" if o.reason and not o.fired else ""
        lines.append(f"{o.criterion}: {mark}{tori}{why}")
        for e in o.evidence:
            lines.append(f"    {e}")
    if a.verdict is not None:
        v = a.verdict
        ess = ", ".join(f"dV_{i}" for i in sorted(v.essential)) or "none named"
        lines.append(f"essential tori: {ess}")
        lines.append(f"non-hyperbolic: {v.non_hyperbolic}; reducible or toroidal: {v.reducible_or_toroidal}")
        for c in v.caveats:
            lines.append(f"  caveat: {c}")
    for e in a.errors:
        lines.append(f"error [{e.code}]: {e}")
    return "\n".join(lines) + "\n"


def nested_struct(results: tuple[TorusStatus, ...]) -> dict:
    return {
        "schema": SCHEMA,
        "version": __version__,
        "tori": [{"index": r.index, "status": r.status, "branch": r.branch} for r in results],
    }


def nested_text(results: tuple[TorusStatus, ...]) -> str:
    return "".join(f"torus {r.index}: {r.status} [{r.branch}]\n" for r in results)
