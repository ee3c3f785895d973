"""Colon ideals (I^[q] : I) of squarefree monomial ideals, for all q at once.

For I = I_1 ∩ ... ∩ I_s with face ideals I_j,

    (I^[q] : I) = ∩_j (I_j^[q] + (x^{α_j})^{q-1}),

which only involves exponents 0, q-1 and q, so it is computed once as a
symbolic ideal. The minimal generators then fall into three groups: those of
I^[q], the single "principal" generator (x^1)^{q-1} over the used variables,
and everything else. The Frobenius algebra of E_R is principally generated
exactly when nothing else shows up.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product as cartesian
from math import prod
from typing import Optional

from .errors import InvariantError, PreconditionError
from .monomial import (
    Monomial,
    MonomialIdeal,
    SymbolicIdeal,
    SymbolicMonomial,
    SymExp,
    colon,
    contains,
    frobenius_power,
    ideal_sum,
    instantiate,
    intersect_all,
    product,
)
from .simplicial import (
    Decomposition,
    FaceIdeal,
    bits,
    height_profile,
    is_cohen_macaulay,
    is_gorenstein,
    popcount,
    primary_decomposition,
)
from .syntax import format_monomial


class Tag(str, Enum):
    IN_FROBENIUS_POWER = "IN_FROBENIUS_POWER"
    PRINCIPAL_PART = "PRINCIPAL_PART"
    EXTRA = "EXTRA"


class Case(str, Enum):
    IA = "IA"
    IB = "IB"
    II = "II"
    III = "III"


@dataclass(frozen=True)
class ColonPresentation:
    symbolic: SymbolicIdeal
    tags: tuple  # one Tag per generator of ``symbolic``
    decomposition: Decomposition

    @property
    def extra(self) -> tuple[SymbolicMonomial, ...]:
        return tuple(g for g, t in zip(self.symbolic.gens, self.tags) if t is Tag.EXTRA)

    @property
    def principal(self) -> SymbolicMonomial:
        return next(g for g, t in zip(self.symbolic.gens, self.tags) if t is Tag.PRINCIPAL_PART)

    def at(self, q: int) -> MonomialIdeal:
        return instantiate(self.symbolic, q)


@dataclass(frozen=True)
class ClassificationReport:
    ideal: MonomialIdeal
    decomposition: Decomposition
    case_tag: Case
    finitely_generated: bool
    mu: int
    colon: ColonPresentation
    gorenstein: bool
    cohen_macaulay: bool
    p: int


def _require_squarefree(I: MonomialIdeal):
    if not isinstance(I, MonomialIdeal) or not I.is_squarefree():
        raise PreconditionError("expected a squarefree monomial ideal")
    if I.is_zero() or I.is_unit():
        raise PreconditionError("expected a proper nonzero ideal")


def face_colon(alpha: FaceIdeal) -> SymbolicIdeal:
    """I_α^[q] + (x^α)^{q-1}; height one collapses to (x^{q-1})."""
    n, s = alpha.n, alpha.support
    gens = [SymbolicMonomial(SymExp.Q if i == j else SymExp.ZERO for i in range(n)) for j in bits(s)]
    gens.append(SymbolicMonomial(SymExp.QM1 if s >> i & 1 else SymExp.ZERO for i in range(n)))
    return SymbolicIdeal(n, gens)


def _principal(n: int, used: int) -> SymbolicMonomial:
    return SymbolicMonomial(SymExp.QM1 if used >> i & 1 else SymExp.ZERO for i in range(n))


def colon_formula(I: MonomialIdeal) -> ColonPresentation:
    _require_squarefree(I)
    D = primary_decomposition(I)
    sym = intersect_all(face_colon(c) for c in D.components)
    frob = frobenius_power(I, "q")
    principal = _principal(I.n, D.used_variables())
    tags = []
    for g in sym.gens:
        if contains(frob, g):
            tags.append(Tag.IN_FROBENIUS_POWER)
        elif g == principal:
            tags.append(Tag.PRINCIPAL_PART)
        else:
            tags.append(Tag.EXTRA)
    if tags.count(Tag.PRINCIPAL_PART) != 1:
        raise InvariantError(f"principal generator missing from colon of {I!r}")
    pres = ColonPresentation(sym, tuple(tags), D)
    used = bits(D.used_variables())
    for g in pres.extra:
        letters = {g[i] for i in used}
        if letters != {SymExp.ZERO, SymExp.QM1, SymExp.Q}:
            raise InvariantError(f"extra generator {format_monomial(g)} has unexpected shape")
    return pres


def case_of(D: Decomposition, has_extra: bool) -> Case:
    heights = [popcount(s) for s in D.supports]
    if all(h == 1 for h in heights):
        return Case.III
    if min(heights) == 1:
        return Case.II
    return Case.IB if has_extra else Case.IA


def classify(I: MonomialIdeal, p: int, *, verify: bool = False) -> ClassificationReport:
    """Principal vs infinite generation of F(E_R), plus Gorenstein/CM flags.

    With ``verify`` the symbolic colon is also compared, at q = p, with the
    brute-force colon (I^[p] : I).
    """
    pres = colon_formula(I)
    D = pres.decomposition
    mu = len(pres.extra)
    case = case_of(D, mu > 0)
    if case is Case.II and mu == 0:
        raise InvariantError("mixed-height ideal without extra colon generators")
    if case is Case.III and mu:
        raise InvariantError("height-one components produced extra generators")
    if verify:
        oracle = colon(frobenius_power(I, p), I)
        if instantiate(pres.symbolic, p) != oracle:
            raise InvariantError(f"colon formula disagrees with the direct colon at q={p}")
    fg = case in (Case.IA, Case.III)
    return ClassificationReport(
        ideal=I,
        decomposition=D,
        case_tag=case,
        finitely_generated=fg,
        mu=mu,
        colon=pres,
        gorenstein=is_gorenstein(I, p),
        cohen_macaulay=is_cohen_macaulay(I, p),
        p=p,
    )


def mu(I: MonomialIdeal) -> int:
    return len(colon_formula(I).extra)


def mu_disjoint(heights: list[int]) -> int:
    """prod(|α_i| + 1) - prod|α_i| - 1 for components on disjoint variables.

    This counts the mixed generators when every component has height >= 2.
    A height-one component contributes a single generator x^{q-1} rather than
    two, so with such a component present (and s >= 2) the true count is
    smaller; see ``mu_disjoint_exact``.
    """
    if not heights:
        raise PreconditionError("need at least one component")
    if any(h < 1 for h in heights):
        raise PreconditionError("component heights are positive")
    return prod(h + 1 for h in heights) - prod(heights) - 1


def mu_disjoint_exact(heights: list[int]) -> int:
    """Number of extra colon generators for disjoint components, any heights."""
    if not heights:
        raise PreconditionError("need at least one component")
    if all(h >= 2 for h in heights):
        return mu_disjoint(heights)
    return prod(1 if h == 1 else h + 1 for h in heights) - 1


def disjoint_ideal(heights: list[int]) -> MonomialIdeal:
    """Intersection of face ideals on consecutive disjoint blocks of variables."""
    n = sum(heights)
    supports, start = [], 0
    for h in heights:
        supports.append(((1 << h) - 1) << start)
        start += h
    return Decomposition(n, tuple(supports)).ideal()


def companion_ideal(I: MonomialIdeal, i: int, D: Optional[Decomposition] = None) -> MonomialIdeal:
    """For each variable x_j of the i-th component, a minimal generator of I
    meeting that component exactly in x_j; ties broken by the smallest sorted
    tuple of variable indices."""
    _require_squarefree(I)
    D = D or primary_decomposition(I)
    if not 0 <= i < len(D.supports):
        raise PreconditionError(f"component index {i} out of range")
    comp = D.supports[i]
    chosen = []
    for j in bits(comp):
        cands = [g for g in I.supports() if g & comp == 1 << j]
        if not cands:
            raise InvariantError(f"no companion generator for x{j + 1} in component {i}")
        chosen.append(min(cands, key=bits))
    return MonomialIdeal.from_supports(I.n, chosen)


def component_index(D: Decomposition, support: int) -> int:
    return D.supports.index(support)


def colon_pieces(I: MonomialIdeal, p: int, e: int) -> MonomialIdeal:
    """K_e = (I^[p^e] : I), by the direct colon."""
    return colon(frobenius_power(I, p**e), I)


def compositions(e: int):
    """Compositions of e into at least two parts, each between 1 and e-1."""
    if e < 2:
        return
    for cuts in cartesian((False, True), repeat=e - 1):
        if not any(cuts):
            continue
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def katzman_L(I: MonomialIdeal, p: int, e: int, _cache: Optional[dict] = None) -> MonomialIdeal:
    """L_e = sum over compositions of K_{β1} K_{β2}^[p^β1] K_{β3}^[p^(β1+β2)] ..."""
    if e < 1:
        raise PreconditionError("e must be >= 1")
    _require_squarefree(I)
    K = _cache if _cache is not None else {}
    out = MonomialIdeal.zero(I.n)
    for parts in compositions(e):
        term, shift = None, 0
        for b in parts:
            if b not in K:
                K[b] = colon_pieces(I, p, b)
            piece = frobenius_power(K[b], p**shift)
            term = piece if term is None else product(term, piece)
            shift += b
        out = ideal_sum(out, term)
    return out


def verify_infinitely_generated(I: MonomialIdeal, p: int, e_max: int = 3) -> list[tuple[int, Monomial]]:
    """For each e <= e_max, an extra generator of K_e lying outside L_e."""
    pres = colon_formula(I)
    if not pres.extra:
        raise PreconditionError("the Frobenius algebra of this ideal is principally generated")
    cache: dict = {}
    out = []
    for e in range(1, e_max + 1):
        q = p**e
        L = katzman_L(I, p, e, cache)
        witness = next((g.at(q) for g in pres.extra if not contains(L, g.at(q))), None)
        if witness is None:
            raise InvariantError(f"every new generator of K_{e} already lies in L_{e}")
        out.append((e, witness))
    return out


def presentation_string(report: ClassificationReport, p: Optional[int] = None) -> str:
    p = report.p if p is None else p
    pres = report.colon
    used = report.decomposition.used_variables()
    u = "*".join(f"x{i + 1}" for i in bits(used))
    if report.finitely_generated:
        return f"R[({u})^(p-1)θ; F] with p = {p}"
    gens = ", ".join(format_monomial(g) for g in pres.extra)
    return (
        f"infinitely generated: each degree e >= 1 adds mu = {report.mu} new generators "
        f"{gens} besides the principal part ({u})^(q-1); q = {p}^e"
    )


def used_heights(D: Decomposition) -> list[int]:
    return [popcount(s) for s in D.supports]


__all__ = [
    "Tag",
    "Case",
    "ColonPresentation",
    "ClassificationReport",
    "face_colon",
    "colon_formula",
    "classify",
    "mu",
    "mu_disjoint",
    "mu_disjoint_exact",
    "disjoint_ideal",
    "companion_ideal",
    "component_index",
    "colon_pieces",
    "compositions",
    "katzman_L",
    "verify_infinitely_generated",
    "presentation_string",
    "height_profile",
]
