"""Essential-torus criteria on the multiplicity data, and the abstract nested-tori test.

Torus ``i`` means the boundary of the ``i``-th solid torus of the nested
decomposition, separating the links of faces ``1..i`` from faces ``i+1..N``.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass, field

from .errors import InvalidSpec
from .winding import MultiplicityTable, WindingProfile

THM11 = "thm1.1"
THM12_I = "thm1.2(i)"
THM12_II = "thm1.2(ii)"
THM12_III = "thm1.2(iii)"
THM13 = "thm1.3"

ESSENTIAL = "essential"
NOT_ESSENTIAL = "not-essential"
UNKNOWN = "unknown"

CERTIFIED_SET_CAVEAT = (
    "index set is the certified-nonempty subset (nonzero winding); "
    "faces with zero winding may still carry link components"
)

_OPS = {">": operator.gt, ">=": operator.ge, "==": operator.eq}


@dataclass(frozen=True)
class Evidence:
    """One instantiated inequality ``|quantity[index]| op bound``."""

    torus: int | None
    quantity: str
    index: int
    value: int
    op: str
    bound: int

    def holds(self) -> bool:
        return _OPS[self.op](self.value, self.bound)

    def audit(self, tab: MultiplicityTable | None, prof: WindingProfile | None) -> bool:
        """Recompute the value from the source data and re-check the inequality."""
        if self.quantity == "count":
            src = len([i for i in range(1, prof.N + 1) if max(abs(prof.w_at(i)), abs(prof.wprime_at(i))) > 0])
        elif self.quantity == "ms_t":
            src = abs(tab.ms_t[self.index])
        elif self.quantity == "ms_phi":
            src = abs(tab.ms_phi[self.index])
        elif self.quantity == "w":
            src = abs(prof.w_at(self.index))
        elif self.quantity == "wprime":
            src = abs(prof.wprime_at(self.index))
        else:
            return False
        return src == self.value and self.holds()

    def __str__(self) -> str:
        if self.quantity == "count":
            return f"#{{i : w or w' nonzero}} = {self.value} {self.op} {self.bound}"
        return f"|{self.quantity}[{self.index}]| = {self.value} {self.op} {self.bound}"


@dataclass(frozen=True)
class CriterionOutcome:
    criterion: str
    fired: bool
    essential_tori: frozenset[int] = frozenset()
    evidence: tuple[Evidence, ...] = ()
    caveats: tuple[str, ...] = ()
    reason: str | None = None

    def audit(self, tab, prof) -> bool:
        if self.fired and not self.evidence:
            return False
        return all(e.audit(tab, prof) for e in self.evidence)


def fast_criterion(tab: MultiplicityTable) -> CriterionOutcome:
    N = tab.N
    if N < 2:
        return CriterionOutcome(THM11, False, reason="requires N >= 2")
    tori, ev = set(), []
    for i in range(1, N):
        a, b = abs(tab.ms_t[i]), abs(tab.ms_phi[i])
        if min(a, b) > 1:
            tori.add(i)
            ev += [Evidence(i, "ms_t", i, a, ">", 1), Evidence(i, "ms_phi", i, b, ">", 1)]
    return CriterionOutcome(THM11, bool(tori), frozenset(tori), tuple(ev))


def general_criterion(tab: MultiplicityTable, prof: WindingProfile, indices=None) -> tuple[CriterionOutcome, ...]:
    """The three branches, evaluated over ``indices`` (default: the certified set).

    Returns one outcome per branch, in order (i), (ii), (iii).
    """
    I = sorted(prof.certified_nonempty if indices is None else indices)
    n = len(I)
    ids = (THM12_I, THM12_II, THM12_III)
    if n < 3:
        return tuple(
            CriterionOutcome(c, False, caveats=(CERTIFIED_SET_CAVEAT,), reason="requires n >= 3") for c in ids
        )

    def aw(i):
        return abs(prof.w_at(i))

    def awp(i):
        return abs(prof.wprime_at(i))

    # (i): torus i_1
    ev1: list[Evidence] = []
    i1 = I[0]
    later = next((j for j in I[1:] if awp(j) > 0), None)
    if abs(tab.ms_t[i1]) > 1 and later is not None:
        ev1 = [Evidence(i1, "ms_t", i1, abs(tab.ms_t[i1]), ">", 1), Evidence(i1, "wprime", later, awp(later), ">", 0)]

    # (ii): torus i_k with 1 < k < n - 1 (positions counted from 1)
    ev2: list[Evidence] = []
    tori2 = set()
    for k in range(1, n - 2):
        ik = I[k]
        left = next((j for j in I[: k + 1] if aw(j) > 0), None)
        right = next((j for j in I[k + 1 :] if awp(j) > 0), None)
        if left is not None and right is not None:
            tori2.add(ik)
            ev2 += [Evidence(ik, "w", left, aw(left), ">", 0), Evidence(ik, "wprime", right, awp(right), ">", 0)]

    # (iii): torus i_{n-1}, reading the vertex as (i_n) - 1
    ev3: list[Evidence] = []
    i_n, i_prev = I[-1], I[-2]
    earlier = next((j for j in reversed(I[:-1]) if aw(j) > 0), None)
    if abs(tab.ms_phi[i_n - 1]) > 1 and earlier is not None:
        ev3 = [
            Evidence(i_prev, "ms_phi", i_n - 1, abs(tab.ms_phi[i_n - 1]), ">", 1),
            Evidence(i_prev, "w", earlier, aw(earlier), ">", 0),
        ]

    cav = (CERTIFIED_SET_CAVEAT,)
    return (
        CriterionOutcome(THM12_I, bool(ev1), frozenset([i1]) if ev1 else frozenset(), tuple(ev1), cav),
        CriterionOutcome(THM12_II, bool(tori2), frozenset(tori2), tuple(ev2), cav),
        CriterionOutcome(THM12_III, bool(ev3), frozenset([i_prev]) if ev3 else frozenset(), tuple(ev3), cav),
    )


def count_criterion(prof: WindingProfile) -> CriterionOutcome:
    count = sum(1 for i in range(1, prof.N + 1) if max(abs(prof.w_at(i)), abs(prof.wprime_at(i))) > 0)
    ev = Evidence(None, "count", 0, count, ">=", 4)
    if ev.holds():
        return CriterionOutcome(THM13, True, frozenset(), (ev,))
    return CriterionOutcome(THM13, False, reason=f"faces with nonzero winding: {count} < 4")


# -- abstract nested links --------------------------------------------------------


@dataclass(frozen=True)
class NestedComponent:
    wrap: int
    winding: int
    is_knot: bool
    is_trivial_knot: bool | None = None


@dataclass(frozen=True)
class NestedLinkSpec:
    components: tuple[NestedComponent, ...]

    def __post_init__(self):
        if len(self.components) < 2:
            raise InvalidSpec(f"need n >= 2 components, got {len(self.components)}")
        for k, c in enumerate(self.components, start=1):
            if c.wrap < 0:
                raise InvalidSpec(f"component {k}: wrap must be nonnegative")
            if c.wrap < abs(c.winding):
                raise InvalidSpec(f"component {k}: wrap {c.wrap} < |winding| {abs(c.winding)}")

    @property
    def n(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class TorusStatus:
    index: int
    status: str
    branch: str


def _and(a, b):
    if a is False or b is False:
        return False
    if a is None or b is None:
        return None
    return True


def _or(a, b):
    if a is True or b is True:
        return True
    if a is None or b is None:
        return None
    return False


def _nontrivial(c: NestedComponent):
    # a link with several components is never the trivial knot
    if not c.is_knot:
        return True
    if c.is_trivial_knot is None:
        return None
    return not c.is_trivial_knot


def _wraps_enough(c: NestedComponent):
    return _or(c.wrap > 1, _and(c.wrap == 1, _nontrivial(c)))


def nested_characterization(spec: NestedLinkSpec) -> tuple[TorusStatus, ...]:
    comps = spec.components
    n = spec.n
    out = []
    for i in range(1, n):
        if i == 1 and n == 2:
            branch = "i=1, n=2"
            val = _and(_wraps_enough(comps[0]), _wraps_enough(comps[1]))
        elif i == 1:
            branch = "i=1, n>=3"
            val = _and(_wraps_enough(comps[0]), any(c.wrap > 0 for c in comps[1:]))
        elif i == n - 1:
            branch = "i=n-1"
            val = _and(any(c.wrap > 0 for c in comps[: n - 1]), _wraps_enough(comps[n - 1]))
        else:
            branch = "1<i<n-1"
            val = any(c.wrap > 0 for c in comps[:i]) and any(c.wrap > 0 for c in comps[i:])
        status = UNKNOWN if val is None else (ESSENTIAL if val else NOT_ESSENTIAL)
        out.append(TorusStatus(i, status, branch))
    return tuple(out)


# -- verdict ------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    tori: dict = field(default_factory=dict)
    non_hyperbolic: str = UNKNOWN
    reducible_or_toroidal: str = UNKNOWN
    essential: frozenset[int] = frozenset()
    outcomes: tuple[CriterionOutcome, ...] = ()
    hypotheses: object = None
    caveats: tuple[str, ...] = ()

    @property
    def fired(self) -> tuple[str, ...]:
        return tuple(o.criterion for o in self.outcomes if o.fired)


def assemble_verdict(tab: MultiplicityTable, prof: WindingProfile, outcomes, hyp=None) -> Verdict:
    outcomes = tuple(outcomes)
    essential = frozenset().union(*(o.essential_tori for o in outcomes)) if outcomes else frozenset()
    any_fired = any(o.fired for o in outcomes)
    toroidal = any(o.fired for o in outcomes if o.criterion == THM13) or bool(essential)
    tori = {i: (ESSENTIAL if i in essential else UNKNOWN) for i in range(1, tab.N)}
    caveats: list[str] = []
    for o in outcomes:
        if o.fired:
            caveats += [c for c in o.caveats if c not in caveats]
    if hyp is not None:
        caveats += hyp.caveats()
    return Verdict(
        tori=tori,
        non_hyperbolic="yes" if any_fired else UNKNOWN,
        reducible_or_toroidal="yes" if toroidal else UNKNOWN,
        essential=essential,
        outcomes=outcomes,
        hypotheses=hyp,
        caveats=tuple(caveats),
    )


_BOOLS = {"true": True, "false": False, "yes": True, "no": False}


def parse_nested_spec(text: str) -> NestedLinkSpec:
    """Read ``n=<int>`` then one ``wrap= winding= knot= trivial=`` line per component.

    Blank lines and ``#`` comments are ignored; ``trivial`` may be ``unknown``
    or omitted.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("n="):
        raise InvalidSpec("first line must be n=<int>")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise InvalidSpec(f"bad component count {lines[0][2:]!r}") from None
    rows = lines[1:]
    if len(rows) != n:
        raise InvalidSpec(f"n={n} but {len(rows)} component lines given")
    comps = []
    for k, row in enumerate(rows, start=1):
        fields = {}
        for tok in row.split():
            key, sep, val = tok.partition("=")
            if not sep:
                raise InvalidSpec(f"component {k}: expected key=value, got {tok!r}")
            fields[key.strip().lower()] = val.strip().lower()
        extra = set(fields) - {"wrap", "winding", "knot", "trivial"}
        if extra:
            raise InvalidSpec(f"component {k}: unknown keys {sorted(extra)}")
        try:
            wrap = int(fields["wrap"])
            winding = int(fields["winding"])
            knot = _BOOLS[fields["knot"]]
            triv = fields.get("trivial", "unknown")
            trivial = None if triv == "unknown" else _BOOLS[triv]
        except KeyError as exc:
            raise InvalidSpec(f"component {k}: missing or invalid {exc.args[0]!r}") from None
        except ValueError as exc:
            raise InvalidSpec(f"component {k}: {exc}") from None
        comps.append(NestedComponent(wrap, winding, knot, trivial))
    return NestedLinkSpec(tuple(comps))
