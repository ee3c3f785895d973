"""Cartier operators on R = S/I and the standard gauge.

Elements of R are kept in normal form: F_p-linear combinations of monomials
outside I. The level-e generators are ψ_{e,γ} = ψ_e ∘ x^γ, where γ runs over
the principal generator and the extra generators of (I^[q] : I), q = p^e, and

    ψ_e(c x^α) = c x^{(α+1)/q - 1}   if q divides every α_j + 1, else 0.

Coefficients live in F_p, so the q-th root of c is c itself.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Iterable, Mapping, Optional

from .errors import MismatchError, PreconditionError
from .frobenius import colon_formula
from .monomial import Monomial, MonomialIdeal, SymbolicMonomial, contains
from .syntax import format_monomial

NEG_INF = -math.inf


class RingElement:
    """Element of S/I over F_p, always in normal form."""

    __slots__ = ("ideal", "p", "terms")

    def __init__(self, ideal: MonomialIdeal, p: int, terms: Mapping = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            m = tuple(m)
            if len(m) != ideal.n:
                raise MismatchError("term lives in the wrong number of variables")
            acc[m] = (acc.get(m, 0) + c) % p
        gens = ideal.gens
        clean = {
            m: c
            for m, c in acc.items()
            if c and not any(all(x <= y for x, y in zip(g, m)) for g in gens)
        }
        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ring elements are immutable")

    @classmethod
    def monomial(cls, ideal, p, exps, coeff=1) -> "RingElement":
        return cls(ideal, p, {tuple(exps): coeff})

    @classmethod
    def one(cls, ideal, p) -> "RingElement":
        return cls.monomial(ideal, p, (0,) * ideal.n)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if not isinstance(other, RingElement) or other.ideal != self.ideal or other.p != self.p:
            raise MismatchError("ring elements of different rings")

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and self.ideal == other.ideal
            and self.p == other.p
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ideal, self.p, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        return RingElement(self.ideal, self.p, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return RingElement(self.ideal, self.p, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.ideal, self.p, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        out = []
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                out.append((tuple(x + y for x, y in zip(a, b)), c * d))
        return RingElement(self.ideal, self.p, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = RingElement.one(self.ideal, self.p)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def frobenius(self, q: int) -> "RingElement":
        """r^q, which in characteristic p just raises exponents (c^q = c in F_p)."""
        return RingElement(self.ideal, self.p, {tuple(a * q for a in m): c for m, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), reverse=True):
            mono = format_monomial(m)
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


@dataclass(frozen=True)
class CartierGenerator:
    e: int
    gamma: SymbolicMonomial
    kind: str  # "PRINCIPAL" or "EXTRA"

    def exponent(self, p: int) -> Monomial:
        return self.gamma.at(p**self.e)

    def label(self, p: int) -> str:
        return format_monomial(self.exponent(p))


def cartier_generators(I: MonomialIdeal, p: int, e: int) -> list[CartierGenerator]:
    if e < 1:
        raise PreconditionError("level e must be >= 1")
    pres = colon_formula(I)
    out = [CartierGenerator(e, pres.principal, "PRINCIPAL")]
    out += [CartierGenerator(e, g, "EXTRA") for g in pres.extra]
    return out


def principal_generator(I: MonomialIdeal, e: int = 1) -> CartierGenerator:
    return CartierGenerator(e, colon_formula(I).principal, "PRINCIPAL")


def psi_monomial(alpha: tuple, gamma: tuple, q: int) -> Optional[tuple]:
    """Exponent of ψ_e(x^{α+γ}), or None when it vanishes."""
    out = []
    for a, g in zip(alpha, gamma):
        s = a + g + 1
        if s % q:
            return None
        out.append(s // q - 1)
    return tuple(out)


def psi(r: RingElement, gamma: Iterable[int], q: int) -> RingElement:
    """ψ_e ∘ x^γ applied to r, with q = p^e and γ concrete."""
    gamma = tuple(gamma)
    out = []
    for m, c in r.terms.items():
        img = psi_monomial(m, gamma, q)
        if img is not None:
            out.append((img, c))
    return RingElement(r.ideal, r.p, out)


def psi_eval(g: CartierGenerator, p: int, r: RingElement) -> RingElement:
    if r.p != p:
        raise MismatchError("characteristic mismatch")
    return psi(r, g.exponent(p), p**g.e)


def gauge(r: RingElement):
    """Standard gauge: max-norm of the exponents in normal form; -inf for 0."""
    if r.is_zero():
        return NEG_INF
    return max(max(m) for m in r.terms)


def default_bound_constant(p: int, e: int) -> Fraction:
    return Fraction(1, p**e * (p - 1))


def normal_monomials(I: MonomialIdeal, below: int):
    """All exponent vectors with entries < ``below`` that are not in I."""
    gens = I.gens
    for m in cartesian(range(below), repeat=I.n):
        if not any(all(x <= y for x, y in zip(g, m)) for g in gens):
            yield m


@dataclass
class GaugeReport:
    p: int
    e: int
    constant: Fraction
    checked: int = 0
    min_slack: Optional[Fraction] = None
    violations: list = field(default_factory=list)
    max_violations: int = 20
    violation_count: int = 0

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def record(self, gen_label, r, lhs, rhs):
        self.checked += 1
        if lhs == NEG_INF:
            return
        slack = rhs - lhs
        if self.min_slack is None or slack < self.min_slack:
            self.min_slack = slack
        if slack < 0:
            self.violation_count += 1
            if len(self.violations) < self.max_violations:
                self.violations.append((gen_label, r, lhs, rhs))


def check_gauge_bound(
    I: MonomialIdeal,
    p: int,
    e: int,
    samples: Optional[Iterable[RingElement]] = None,
    constant: Optional[Fraction] = None,
) -> GaugeReport:
    """Check δ(ψ_{e,γ}(r)) <= δ(r)/p^e + constant for every generator and sample.

    ``constant`` defaults to 1/(p^e (p-1)). Without samples, every normal
    monomial with max-norm < 2p^e is used. Comparisons are exact rationals.
    """
    q = p**e
    constant = default_bound_constant(p, e) if constant is None else Fraction(constant)
    report = GaugeReport(p, e, constant)
    gens = [(g.label(p), tuple(g.exponent(p))) for g in cartier_generators(I, p, e)]
    if samples is None:
        # monomials are the bulk case; skip building RingElements for them
        for m in normal_monomials(I, 2 * q):
            rhs = Fraction(max(m), q) + constant
            for label, gamma in gens:
                img = psi_monomial(m, gamma, q)
                if img is not None and contains(I, Monomial(img)):
                    img = None
                report.record(label, m, NEG_INF if img is None else max(img), rhs)
        return report
    for r in samples:
        d = gauge(r)
        rhs = (Fraction(d, q) + constant) if d != NEG_INF else None
        for label, gamma in gens:
            lhs = gauge(psi(r, gamma, q))
            if rhs is None:
                report.checked += 1
                if lhs != NEG_INF:
                    raise PreconditionError("ψ of zero must be zero")
                continue
            report.record(label, r, lhs, rhs)
    return report


def f_split_check(I: MonomialIdeal, p: int) -> bool:
    """ψ_{1,u}(1) == 1 for the principal level-one generator."""
    one = RingElement.one(I, p)
    return psi_eval(principal_generator(I, 1), p, one) == one


__all__ = [
    "RingElement",
    "CartierGenerator",
    "cartier_generators",
    "principal_generator",
    "psi",
    "psi_monomial",
    "psi_eval",
    "gauge",
    "check_gauge_bound",
    "default_bound_constant",
    "normal_monomials",
    "GaugeReport",
    "f_split_check",
    "NEG_INF",
]
