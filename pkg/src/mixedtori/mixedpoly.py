"""Mixed polynomials in two complex variables and their one-variable restrictions.

A mixed polynomial is a finite sum ``c * u^nu1 * v^nu2 * ~u^mu1 * ~v^mu2`` where
``~u`` and ``~v`` stand for the complex conjugates of ``u`` and ``v``.  Exponent
quadruples are always ordered ``(nu1, nu2, mu1, mu2)``.

Restricting one variable to the unit circle produces a mixed polynomial in a
single variable ``w`` (:class:`UniMixedPoly`); restricting a vertex face
function produces a homogeneous one (:class:`HomUniMixedPoly`).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .errors import (
    InputError,
    NegativeExponent,
    NonzeroConstantTerm,
    PolynomialSyntaxError,
)

Quad = tuple[int, int, int, int]

# semiholomorphic tags use the input grammar's spelling
U, UBAR, V, VBAR = "u", "~u", "v", "~v"


def _check_finite(c: complex) -> None:
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise InputError(f"non-finite coefficient {c!r}")


@dataclass(frozen=True)
class MixedMonomial:
    coeff: complex
    nu1: int
    nu2: int
    mu1: int
    mu2: int

    def __post_init__(self):
        if self.coeff == 0:
            raise InputError("zero-coefficient monomials are not stored")
        _check_finite(self.coeff)
        if min(self.nu1, self.nu2, self.mu1, self.mu2) < 0:
            raise InputError("exponents must be nonnegative")

    @property
    def exponents(self) -> Quad:
        return (self.nu1, self.nu2, self.mu1, self.mu2)

    @property
    def lattice_point(self) -> tuple[int, int]:
        """Total ``u``- and ``v``-degree ``(nu1 + mu1, nu2 + mu2)``."""
        return (self.nu1 + self.mu1, self.nu2 + self.mu2)


@dataclass(frozen=True)
class MixedPolynomial:
    monomials: tuple[MixedMonomial, ...] = ()

    def __post_init__(self):
        keys = [m.exponents for m in self.monomials]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise InputError("monomials must be sorted with unique exponent quadruples")
        if keys and keys[0] == (0, 0, 0, 0):
            raise NonzeroConstantTerm("mixed polynomials are normalized to have no constant term")

    @classmethod
    def from_terms(cls, terms: Mapping[Quad, complex] | Iterable[tuple[Quad, complex]]) -> "MixedPolynomial":
        """Collect like terms and drop exact zeros."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Quad, complex] = {}
        for quad, c in items:
            quad = tuple(int(e) for e in quad)
            acc[quad] = acc.get(quad, 0j) + complex(c)
        monos = tuple(MixedMonomial(c, *q) for q, c in sorted(acc.items()) if c != 0)
        return cls(monos)

    @classmethod
    def zero(cls) -> "MixedPolynomial":
        return cls(())

    def is_zero(self) -> bool:
        return not self.monomials

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def terms(self) -> dict[Quad, complex]:
        return {m.exponents: m.coeff for m in self.monomials}

    def __add__(self, other: "MixedPolynomial") -> "MixedPolynomial":
        return MixedPolynomial.from_terms(
            [(m.exponents, m.coeff) for m in self] + [(m.exponents, m.coeff) for m in other]
        )

    def __neg__(self) -> "MixedPolynomial":
        return MixedPolynomial.from_terms([(m.exponents, -m.coeff) for m in self])

    def __sub__(self, other: "MixedPolynomial") -> "MixedPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MixedPolynomial):
            prod = []
            for a in self:
                for b in other:
                    quad = tuple(x + y for x, y in zip(a.exponents, b.exponents))
                    prod.append((quad, a.coeff * b.coeff))
            return MixedPolynomial.from_terms(prod)
        scalar = complex(other)
        return MixedPolynomial.from_terms([(m.exponents, m.coeff * scalar) for m in self])

    __rmul__ = __mul__

    def conj(self) -> "MixedPolynomial":
        """Complex conjugate polynomial: conjugated coefficients, ``nu`` and ``mu`` swapped."""
        return MixedPolynomial.from_terms(
            [((m.mu1, m.mu2, m.nu1, m.nu2), m.coeff.conjugate()) for m in self]
        )

    def evaluate(self, u, v):
        return evaluate(self, u, v)

    def __str__(self) -> str:
        return format_polynomial(self)


# -- one-variable restrictions ------------------------------------------------


def _drop_small(acc: dict, tol: float) -> tuple:
    return tuple(sorted((k, c) for k, c in acc.items() if abs(c) >= tol and c != 0))


@dataclass(frozen=True)
class UniMixedPoly:
    """``sum c_{p,q} w^p ~w^q``; ``side`` records whether ``w`` stands for ``u`` or ``v``."""

    side: str
    terms: tuple[tuple[tuple[int, int], complex], ...] = ()

    def __post_init__(self):
        if self.side not in (U, V):
            raise InputError(f"side must be 'u' or 'v', got {self.side!r}")
        for (p, q), c in self.terms:
            if p < 0 or q < 0:
                raise InputError("exponents must be nonnegative")
            if c == 0:
                raise InputError("zero coefficients are not stored")
            _check_finite(c)

    @classmethod
    def from_terms(cls, side: str, terms, tol: float = 0.0) -> "UniMixedPoly":
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], complex] = {}
        for (p, q), c in items:
            key = (int(p), int(q))
            acc[key] = acc.get(key, 0j) + complex(c)
        return cls(side, _drop_small(acc, tol))

    def is_zero(self) -> bool:
        return not self.terms

    def coeffs(self) -> dict[tuple[int, int], complex]:
        return dict(self.terms)

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Coefficients and ``(p, q)`` exponent arrays, for the numeric kernels."""
        c = np.array([c for _, c in self.terms], dtype=np.complex128)
        p = np.array([k[0] for k, _ in self.terms], dtype=np.int64)
        q = np.array([k[1] for k, _ in self.terms], dtype=np.int64)
        return c, p, q

    @property
    def bidegree(self) -> tuple[int, int]:
        if not self.terms:
            return (0, 0)
        return (max(k[0] for k, _ in self.terms), max(k[1] for k, _ in self.terms))

    def degree_range(self) -> tuple[int, int]:
        if not self.terms:
            raise InputError("zero polynomial has no degree")
        tot = [p + q for (p, q), _ in self.terms]
        return min(tot), max(tot)

    def graded(self, degree: int) -> "UniMixedPoly":
        return UniMixedPoly(self.side, tuple((k, c) for k, c in self.terms if sum(k) == degree))

    def is_homogeneous(self) -> bool:
        return len({p + q for (p, q), _ in self.terms}) <= 1

    def homogeneous(self) -> "HomUniMixedPoly":
        return HomUniMixedPoly.from_uni(self)

    def evaluate(self, w):
        w = np.asarray(w, dtype=np.complex128)
        wb = np.conj(w)
        out = np.zeros_like(w)
        for (p, q), c in self.terms:
            out = out + c * w**p * wb**q
        return complex(out) if out.ndim == 0 else out

    def __call__(self, w):
        return self.evaluate(w)

    def __mul__(self, other):
        if isinstance(other, UniMixedPoly):
            if other.side != self.side:
                raise InputError("cannot multiply polynomials in different variables")
            prod = [
                ((a[0] + b[0], a[1] + b[1]), ca * cb)
                for a, ca in self.terms
                for b, cb in other.terms
            ]
            return UniMixedPoly.from_terms(self.side, prod)
        s = complex(other)
        return UniMixedPoly.from_terms(self.side, [(k, c * s) for k, c in self.terms])

    __rmul__ = __mul__

    def conj(self) -> "UniMixedPoly":
        return UniMixedPoly.from_terms(self.side, [((q, p), c.conjugate()) for (p, q), c in self.terms])


@dataclass(frozen=True)
class HomUniMixedPoly:
    """Homogeneous ``sum_nu c_nu w^nu ~w^(degree - nu)``.

    The zero polynomial is represented with ``degree == 0`` and no coefficients.
    """

    degree: int
    coeffs: tuple[tuple[int, complex], ...]
    side: str = U

    def __post_init__(self):
        for nu, c in self.coeffs:
            if not 0 <= nu <= self.degree:
                raise InputError(f"exponent {nu} outside 0..{self.degree}")
            if c == 0:
                raise InputError("zero coefficients are not stored")
            _check_finite(c)
        if not self.coeffs and self.degree != 0:
            raise InputError("the zero polynomial carries degree 0")

    @classmethod
    def from_uni(cls, h: UniMixedPoly) -> "HomUniMixedPoly":
        if h.is_zero():
            return cls(0, (), h.side)
        lo, hi = h.degree_range()
        if lo != hi:
            raise InputError(f"not homogeneous: total degrees span {lo}..{hi}")
        return cls(hi, tuple(sorted((p, c) for (p, q), c in h.terms)), h.side)

    @classmethod
    def from_coeffs(cls, degree: int, coeffs: Mapping[int, complex], side: str = U) -> "HomUniMixedPoly":
        return cls(degree, tuple(sorted((int(k), complex(c)) for k, c in coeffs.items() if c != 0)), side)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def nu_min(self) -> int:
        return self.coeffs[0][0]

    @property
    def nu_max(self) -> int:
        return self.coeffs[-1][0]

    @property
    def bidegree(self) -> tuple[int, int]:
        """``(m, n)``: highest power of ``w`` and highest power of ``~w``."""
        if self.is_zero():
            return (0, 0)
        return (self.nu_max, self.degree - self.nu_min)

    def to_uni(self) -> UniMixedPoly:
        return UniMixedPoly(self.side, tuple(((nu, self.degree - nu), c) for nu, c in self.coeffs))

    def evaluate(self, w):
        return self.to_uni().evaluate(w)


# -- evaluation and restriction -------------------------------------------------


def evaluate(p: MixedPolynomial, u, v):
    """Value of ``p`` at ``(u, v)``; accepts scalars or broadcastable arrays."""
    if np.ndim(u) == 0 and np.ndim(v) == 0:
        u, v = complex(u), complex(v)
        ub, vb = u.conjugate(), v.conjugate()
        return sum(
            (m.coeff * u**m.nu1 * v**m.nu2 * ub**m.mu1 * vb**m.mu2 for m in p.monomials),
            0j,
        )
    u = np.asarray(u, dtype=np.complex128)
    v = np.asarray(v, dtype=np.complex128)
    out = np.zeros(np.broadcast(u, v).shape, dtype=np.complex128)
    for m in p.monomials:
        out += m.coeff * u**m.nu1 * v**m.nu2 * np.conj(u) ** m.mu1 * np.conj(v) ** m.mu2
    return out


def face_function(p: MixedPolynomial, points) -> MixedPolynomial:
    """Sub-sum of the monomials whose lattice point lies in ``points``."""
    pts = {tuple(pt) for pt in points}
    return MixedPolynomial(tuple(m for m in p.monomials if m.lattice_point in pts))


def specialize_t(p_face: MixedPolynomial, t: float, tol_zero: float = 1e-12) -> UniMixedPoly:
    """Substitute ``v = e^{it}``: a mixed polynomial in ``u`` alone."""
    acc: dict[tuple[int, int], complex] = {}
    for m in p_face.monomials:
        key = (m.nu1, m.mu1)
        acc[key] = acc.get(key, 0j) + m.coeff * cmath.exp(1j * (m.nu2 - m.mu2) * t)
    return UniMixedPoly(U, _drop_small(acc, tol_zero))


def specialize_phi(p_face: MixedPolynomial, phi: float, tol_zero: float = 1e-12) -> UniMixedPoly:
    """Substitute ``u = e^{i phi}``: a mixed polynomial in ``v`` alone."""
    acc: dict[tuple[int, int], complex] = {}
    for m in p_face.monomials:
        key = (m.nu2, m.mu2)
        acc[key] = acc.get(key, 0j) + m.coeff * cmath.exp(1j * (m.nu1 - m.mu1) * phi)
    return UniMixedPoly(V, _drop_small(acc, tol_zero))


def wirtinger_at(h: UniMixedPoly, alpha: complex) -> tuple[complex, complex]:
    """``(dh/dw, dh/d~w)`` at ``alpha``, differentiating term by term."""
    a = complex(alpha)
    ab = a.conjugate()
    dw = 0j
    dwb = 0j
    for (p, q), c in h.terms:
        if p:
            dw += p * c * a ** (p - 1) * ab**q
        if q:
            dwb += q * c * a**p * ab ** (q - 1)
    return dw, dwb


def semiholomorphic_kind(p: MixedPolynomial) -> frozenset[str]:
    """Variables ``x`` for which ``p`` does not involve the conjugate partner of ``x``."""
    kinds = set()
    if all(m.mu1 == 0 for m in p):
        kinds.add(U)
    if all(m.nu1 == 0 for m in p):
        kinds.add(UBAR)
    if all(m.mu2 == 0 for m in p):
        kinds.add(V)
    if all(m.nu2 == 0 for m in p):
        kinds.add(VBAR)
    return frozenset(kinds)


# -- parsing -------------------------------------------------------------------

_VAR_INDEX = {"u": 0, "v": 1, "~u": 2, "~v": 3, "ub": 2, "vb": 3}
_FACTOR_START = set("0123456789(iuv~")


class _ExactComplex:
    __slots__ = ("re", "im")

    def __init__(self, re=Fraction(0), im=Fraction(0)):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __mul__(self, o):
        return _ExactComplex(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __add__(self, o):
        return _ExactComplex(self.re + o.re, self.im + o.im)

    def scaled(self, s: int):
        return _ExactComplex(self.re * s, self.im * s)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))


class _Parser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def error(self, expected: str):
        raise PolynomialSyntaxError(self.s, self.i, expected)

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def poly(self) -> dict:
        acc: dict[Quad, _ExactComplex] = {}
        self.ws()
        sign = 1
        # a leading sign is accepted as a convenience
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
            self.ws()
        while True:
            quad, coeff = self.term()
            acc[quad] = acc.get(quad, _ExactComplex()) + coeff.scaled(sign)
            self.ws()
            ch = self.peek()
            if ch in ("+", "-") and ch:
                sign = -1 if ch == "-" else 1
                self.i += 1
                self.ws()
                continue
            if ch:
                self.error("'+', '-' or end of input")
            return acc

    def term(self):
        exps = [0, 0, 0, 0]
        coeff = _ExactComplex(1)
        if self.peek() not in _FACTOR_START or not self.peek():
            self.error("a coefficient or a variable")
        while True:
            coeff = self.factor(exps, coeff)
            save = self.i
            self.ws()
            ch = self.peek()
            if ch == "*":
                self.i += 1
                self.ws()
                if not self.peek() or self.peek() not in _FACTOR_START:
                    self.error("a coefficient or a variable after '*'")
                continue
            if ch and ch in _FACTOR_START:
                continue
            self.i = save
            return tuple(exps), coeff

    def factor(self, exps: list, coeff: _ExactComplex) -> _ExactComplex:
        ch = self.peek()
        if ch.isdigit():
            return coeff * _ExactComplex(self.number())
        if ch == "(":
            return coeff * self.paren_coeff()
        if ch == "i":
            self.i += 1
            return coeff * _ExactComplex(0, 1)
        name = self.var()
        power = 1
        save = self.i
        self.ws()
        if self.peek() == "^":
            self.i += 1
            self.ws()
            if self.peek() == "-":
                raise NegativeExponent(self.s, self.i)
            if not self.peek().isdigit():
                self.error("an unsigned integer exponent")
            power = self.uint()
        else:
            self.i = save
        exps[_VAR_INDEX[name]] += power
        return coeff

    def var(self) -> str:
        s, i = self.s, self.i
        if s.startswith("~u", i) or s.startswith("~v", i):
            self.i += 2
            return s[i : i + 2]
        if s.startswith("ub", i) or s.startswith("vb", i):
            self.i += 2
            return s[i : i + 2]
        if self.peek() in ("u", "v") and self.peek():
            self.i += 1
            return s[i]
        self.error("'u', 'v', '~u', '~v', 'ub' or 'vb'")

    def uint(self) -> int:
        start = self.i
        while self.peek().isdigit() and self.peek():
            self.i += 1
        if start == self.i:
            self.error("digits")
        return int(self.s[start : self.i])

    def number(self) -> Fraction:
        start = self.i
        self.uint()
        if self.peek() == ".":
            self.i += 1
            self.uint()
        return Fraction(self.s[start : self.i])

    def paren_coeff(self) -> _ExactComplex:
        self.i += 1
        self.ws()
        sign = 1
        if self.peek() in ("+", "-") and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
            self.ws()
        if self.peek() == "i":
            self.i += 1
            val = _ExactComplex(0, sign)
            has_imag = True
        elif self.peek().isdigit() and self.peek():
            x = self.number() * sign
            self.ws()
            if self.peek() == "i":
                self.i += 1
                val = _ExactComplex(0, x)
                has_imag = True
            else:
                val = _ExactComplex(x)
                has_imag = False
        else:
            self.error("a number or 'i'")
        self.ws()
        if not has_imag and self.peek() in ("+", "-") and self.peek():
            s2 = -1 if self.peek() == "-" else 1
            self.i += 1
            self.ws()
            mag = Fraction(1)
            if self.peek().isdigit() and self.peek():
                mag = self.number()
                self.ws()
            if self.peek() != "i":
                self.error("'i'")
            self.i += 1
            val = val + _ExactComplex(0, s2 * mag)
            self.ws()
        if self.peek() != ")":
            self.error("')'")
        self.i += 1
        return val


def parse(text: str) -> MixedPolynomial:
    """Parse the plain-text polynomial syntax, e.g. ``"u^4 + ~u u^2 v + u^2 ~v^2 + v^6"``.

    Whitespace juxtaposition and ``*`` both multiply; ``~u``/``ub`` and
    ``~v``/``vb`` are the conjugate variables; ``i`` is the imaginary unit and
    ``(a+bi)`` a complex literal.  Literals are combined exactly before a single
    conversion to double precision, so ``"u - u"`` is the zero polynomial.
    """
    acc = _Parser(text).poly()
    const = acc.pop((0, 0, 0, 0), None)
    if const is not None and not const.is_zero():
        raise NonzeroConstantTerm(f"nonzero constant term {const.to_complex()} in {text!r}")
    return MixedPolynomial.from_terms({q: c.to_complex() for q, c in acc.items() if not c.is_zero()})


# -- printing ------------------------------------------------------------------


def _num(x: float) -> str:
    """Positional decimal text of the shortest round-tripping repr of ``x >= 0``."""
    x = float(x)
    if x.is_integer() and x < 1e16:
        return str(int(x))
    return format(Decimal(repr(x)), "f")


def _monomial_text(quad: Quad) -> str:
    out = []
    for name, e in zip(("u", "~u", "v", "~v"), (quad[0], quad[2], quad[1], quad[3])):
        if e == 1:
            out.append(name)
        elif e > 1:
            out.append(f"{name}^{e}")
    return " ".join(out)


def _term_text(c: complex, quad: Quad, first: bool) -> str:
    re, im = c.real, c.imag
    if im == 0:
        sign = "-" if re < 0 else "+"
        body = "" if abs(re) == 1 else _num(abs(re))
        if first and sign == "-":
            body, sign = f"(-{_num(abs(re))})", "+"
    elif re == 0:
        sign = "-" if im < 0 else "+"
        body = "i" if abs(im) == 1 else f"{_num(abs(im))} i"
        if first and sign == "-":
            mag = "" if abs(im) == 1 else _num(abs(im))
            body, sign = f"(0-{mag}i)", "+"
    else:
        sign = "+"
        mag = "" if abs(im) == 1 else _num(abs(im))
        body = f"({'-' if re < 0 else ''}{_num(abs(re))}{'+' if im > 0 else '-'}{mag}i)"
    text = " ".join(x for x in (body, _monomial_text(quad)) if x)
    return text if first else f"{sign} {text}"


def format_polynomial(p: MixedPolynomial) -> str:
    """Canonical text that :func:`parse` maps back to the same polynomial."""
    if p.is_zero():
        return "0"
    parts = [_term_text(m.coeff, m.exponents, i == 0) for i, m in enumerate(p.monomials)]
    return " ".join(parts)


def format_uni(h: UniMixedPoly) -> str:
    if h.is_zero():
        return "0"
    w = h.side
    parts = []
    for (p, q), c in h.terms:
        mono = " ".join(
            x for x in (
                "" if p == 0 else (w if p == 1 else f"{w}^{p}"),
                "" if q == 0 else (f"~{w}" if q == 1 else f"~{w}^{q}"),
            ) if x
        )
        parts.append(f"({c.real:.12g}{c.imag:+.12g}i){' ' + mono if mono else ''}")
    return " + ".join(parts)
