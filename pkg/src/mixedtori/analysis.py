"""End-to-end analysis of one polynomial, keeping whatever was computed before a failure."""
from __future__ import annotations

from dataclasses import dataclass, field

from .config import DEFAULT, Config
from .criteria import (
    CriterionOutcome,
    Verdict,
    assemble_verdict,
    count_criterion,
    fast_criterion,
    general_criterion,
)
from .errors import HypothesisViolation, InputError, MixedToriError, NotConvenient
from .mixedpoly import MixedPolynomial, parse
from .newton import LatticePoint, NewtonBoundary, is_convenient, newton_boundary, support
from .torus_check import HypothesisReport, check_gamma_nice
from .winding import MultiplicityTable, WindingProfile, multiplicity_table, winding_profile

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_HYPOTHESIS = 2


@dataclass
class Analysis:
    text: str | None
    cfg: Config
    poly: MixedPolynomial | None = None
    support: frozenset[LatticePoint] | None = None
    boundary: NewtonBoundary | None = None
    hypotheses: HypothesisReport | None = None
    table: MultiplicityTable | None = None
    profile: WindingProfile | None = None
    outcomes: tuple[CriterionOutcome, ...] = ()
    verdict: Verdict | None = None
    errors: list[MixedToriError] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        if any(isinstance(e, InputError) for e in self.errors):
            return EXIT_INPUT
        if self.errors or (self.hypotheses is not None and self.hypotheses.violated):
            return EXIT_HYPOTHESIS
        return EXIT_OK

    @property
    def status(self) -> str:
        return {EXIT_OK: "ok", EXIT_INPUT: "input-error", EXIT_HYPOTHESIS: "hypothesis-violation"}[self.exit_code]


def analyze(poly: str | MixedPolynomial, cfg: Config = DEFAULT, spot_check: bool = True) -> Analysis:
    """Run the whole pipeline; errors are recorded on the result, not raised."""
    text = poly if isinstance(poly, str) else None
    out = Analysis(text, cfg)
    try:
        out.poly = parse(poly) if isinstance(poly, str) else poly
        out.support = support(out.poly)
        out.boundary = newton_boundary(out.support)
        out.hypotheses = check_gamma_nice(out.poly, out.boundary, cfg, faces=spot_check)
        if not is_convenient(out.boundary):
            raise NotConvenient("the Newton boundary does not meet both coordinate axes")
        out.table = multiplicity_table(out.poly, out.boundary, cfg)
        out.profile = winding_profile(out.table)
        out.outcomes = (
            fast_criterion(out.table),
            *general_criterion(out.table, out.profile),
            count_criterion(out.profile),
        )
        out.verdict = assemble_verdict(out.table, out.profile, out.outcomes, out.hypotheses)
    except (InputError, HypothesisViolation) as exc:
        out.errors.append(exc)
    except MixedToriError as exc:
        # numerical breakdowns are reported like hypothesis failures
        out.errors.append(exc)
    return out
