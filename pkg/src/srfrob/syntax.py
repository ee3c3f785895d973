"""Text syntax for monomial ideals.

    ideal    := monomial (',' monomial)*
    monomial := factor ('*' factor)*
    factor   := 'x' INT ('^' INT)?

Whitespace is insignificant. Variables are x1..xn; n defaults to the largest
index that occurs.
"""
from __future__ import annotations

import re
from typing import Optional

from .errors import ParseError
from .monomial import Monomial, MonomialIdeal, SymbolicIdeal, SymbolicMonomial, SymExp

_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?\Z")


def _parse_monomial(text: str) -> dict[int, int]:
    if not text:
        raise ParseError("empty monomial")
    exps: dict[int, int] = {}
    for factor in text.split("*"):
        m = _FACTOR.match(factor)
        if m is None:
            raise ParseError(f"bad factor {factor!r}")
        i = int(m.group(1))
        if i < 1:
            raise ParseError(f"variable index must be >= 1, got x{i}")
        exps[i] = exps.get(i, 0) + (int(m.group(2)) if m.group(2) is not None else 1)
    return exps


def parse_ideal(text: str, n: Optional[int] = None) -> MonomialIdeal:
    compact = "".join(text.split())
    if not compact:
        raise ParseError("empty ideal")
    monos = [_parse_monomial(part) for part in compact.split(",")]
    top = max(max(m) for m in monos)
    if n is None:
        n = top
    elif top > n:
        raise ParseError(f"x{top} used but only {n} variables declared")
    return MonomialIdeal(n, [Monomial(m.get(i + 1, 0) for i in range(n)) for m in monos])


def parse_monomial(text: str, n: int) -> Monomial:
    exps = _parse_monomial("".join(text.split()))
    if max(exps) > n:
        raise ParseError(f"x{max(exps)} used but only {n} variables declared")
    return Monomial(exps.get(i + 1, 0) for i in range(n))


def format_monomial(m) -> str:
    parts = []
    for i, a in enumerate(m):
        if isinstance(a, SymExp):
            if a == SymExp.ZERO:
                continue
            parts.append(f"x{i + 1}^q" if a == SymExp.Q else f"x{i + 1}^(q-1)")
        elif a == 1:
            parts.append(f"x{i + 1}")
        elif a:
            parts.append(f"x{i + 1}^{a}")
    return "*".join(parts) or "1"


def format_ideal(I) -> str:
    if not I.gens:
        return "0"
    return ", ".join(format_monomial(g) for g in I.gens)


def parse_symbolic_monomial(text: str, n: int) -> SymbolicMonomial:
    """Inverse of format_monomial on symbolic monomials (mainly for tests)."""
    exps = [SymExp.ZERO] * n
    compact = "".join(text.split())
    if compact == "1":
        return SymbolicMonomial(exps)
    for factor in compact.split("*"):
        m = re.fullmatch(r"x(\d+)\^(q|\(q-1\))", factor)
        if m is None:
            raise ParseError(f"bad symbolic factor {factor!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ParseError(f"variable x{i} outside 1..{n}")
        exps[i - 1] = SymExp.Q if m.group(2) == "q" else SymExp.QM1
    return SymbolicMonomial(exps)


def parse_symbolic_ideal(text: str, n: int) -> SymbolicIdeal:
    return SymbolicIdeal(n, [parse_symbolic_monomial(t, n) for t in text.split(",")])
