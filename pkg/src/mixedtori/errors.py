"""Exception hierarchy.

Input problems derive from :class:`InputError`; failures of the hypotheses under
which the criteria hold (unit-circle roots, angle-dependent multiplicities,
vanishing vertex functions, non-convenience) derive from
:class:`HypothesisViolation`.
"""
from __future__ import annotations


class MixedToriError(Exception):
    """Base class for every error raised by the package."""

    code = "error"

    def record(self) -> dict:
        out = {"error": self.code, "message": str(self)}
        out.update(getattr(self, "details", {}))
        return out


class InputError(MixedToriError, ValueError):
    code = "input-error"


class PolynomialSyntaxError(InputError):
    code = "syntax-error"

    def __init__(self, text: str, pos: int, expected: str):
        self.text = text
        self.pos = pos
        self.expected = expected
        self.details = {"position": pos, "expected": expected}
        found = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(f"at position {pos}: expected {expected}, found {found}")


class NonzeroConstantTerm(InputError):
    code = "nonzero-constant-term"


class NegativeExponent(PolynomialSyntaxError):
    code = "negative-exponent"

    def __init__(self, text: str, pos: int):
        super().__init__(text, pos, "nonnegative exponent")


class EmptySupport(InputError):
    code = "empty-support"


class ZeroPolynomial(InputError):
    code = "zero-polynomial"


class InvalidSpec(InputError):
    code = "invalid-spec"


class HypothesisViolation(MixedToriError):
    code = "hypothesis-violation"


class NotConvenient(HypothesisViolation):
    code = "not-convenient"


class RootOnUnitCircle(HypothesisViolation):
    code = "root-on-unit-circle"

    def __init__(self, message: str, root: complex | None = None, **context):
        self.root = root
        self.details = dict(context)
        if root is not None:
            self.details["root"] = complex(root)
        super().__init__(message)

    def tagged(self, **context) -> "RootOnUnitCircle":
        ctx = {k: v for k, v in self.details.items() if k != "root"}
        ctx.update(context)
        where = ", ".join(f"{k}={v}" for k, v in context.items())
        return RootOnUnitCircle(f"{self.args[0]} ({where})", self.root, **ctx)


class InconsistentAcrossAngles(HypothesisViolation):
    code = "inconsistent-across-angles"

    def __init__(self, message: str, **context):
        self.details = dict(context)
        super().__init__(message)


class DegenerateSpecialization(HypothesisViolation):
    code = "degenerate-specialization"

    def __init__(self, message: str, **context):
        self.details = dict(context)
        super().__init__(message)


class GammaNicenessViolated(HypothesisViolation):
    code = "gamma-niceness-violated"

    def __init__(self, message: str, **context):
        self.details = dict(context)
        super().__init__(message)


class NumericalError(MixedToriError, ArithmeticError):
    code = "numerical-error"


class RootFindingFailed(NumericalError):
    code = "root-finding-failed"


class VanishesOnCircle(NumericalError):
    code = "vanishes-on-circle"


class AliasingSuspected(NumericalError):
    code = "aliasing-suspected"

    def __init__(self, message: str, defect: float, max_step: float):
        self.defect = defect
        self.max_step = max_step
        self.details = {"defect": defect, "max_step": max_step}
        super().__init__(message)


class NotARoot(NumericalError):
    code = "not-a-root"


class IndeterminateSign(NumericalError):
    code = "indeterminate-sign"
