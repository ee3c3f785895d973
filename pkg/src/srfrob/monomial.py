"""Monomials and monomial ideals, concrete and symbolic in q.

Concrete monomials carry integer exponents. Symbolic monomials carry
exponents from the three-letter alphabet {0, q-1, q}; since 0 < q-1 < q for
every integer q >= 2, divisibility and lcm computed on the letters agree with
the integer computation after substituting any q >= 2. That is what lets one
symbolic computation stand for all q = p^e at once.

Ideals always hold their minimal generating set, sorted in decreasing
lexicographic order of exponent vectors (x1 > x2 > ... > xn), so equal ideals
have identical generator tuples.
"""
from __future__ import annotations

from enum import IntEnum
from typing import Iterable, Union

from .errors import MismatchError, PreconditionError


class SymExp(IntEnum):
    ZERO = 0
    QM1 = 1
    Q = 2

    def at(self, q: int) -> int:
        return (0, q - 1, q)[self]

    def __str__(self):
        return ("0", "q-1", "q")[self]


class Monomial(tuple):
    """Exponent vector of a monomial x1^a1 ... xn^an."""

    __slots__ = ()

    def __new__(cls, exps: Iterable[int]):
        m = tuple.__new__(cls, exps)
        if not m:
            raise PreconditionError("a monomial needs at least one variable")
        for a in m:
            if not isinstance(a, int) or a < 0:
                raise PreconditionError(f"bad exponent {a!r}")
        return m

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, i: int, power: int = 1) -> "Monomial":
        """x_{i+1}^power; i is 0-based."""
        e = [0] * n
        e[i] = power
        return cls(e)

    @property
    def n(self) -> int:
        return len(self)

    def __mul__(self, other):
        _check_pair(self, other)
        return Monomial(a + b for a, b in zip(self, other))

    def __truediv__(self, other):
        if not divides(other, self):
            raise PreconditionError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self, other))

    def is_squarefree(self) -> bool:
        return all(a <= 1 for a in self)

    def support(self) -> int:
        """Bitmask of the variables that occur."""
        return sum(1 << i for i, a in enumerate(self) if a)

    def max_norm(self) -> int:
        return max(self)

    def __repr__(self):
        return f"Monomial({tuple(self)})"


class SymbolicMonomial(tuple):
    """Exponent vector over the alphabet {0, q-1, q}."""

    __slots__ = ()

    def __new__(cls, exps: Iterable[Union[SymExp, int]]):
        m = tuple.__new__(cls, (SymExp(a) for a in exps))
        if not m:
            raise PreconditionError("a monomial needs at least one variable")
        return m

    @property
    def n(self) -> int:
        return len(self)

    def at(self, q: int) -> Monomial:
        if q < 2:
            raise PreconditionError("symbolic exponents only make sense for q >= 2")
        return Monomial(a.at(q) for a in self)

    def positions(self, letter: SymExp) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self) if a == letter)

    def __repr__(self):
        return "SymbolicMonomial((" + ", ".join(str(a) for a in self) + "))"


AnyMonomial = Union[Monomial, SymbolicMonomial]


def _check_pair(a, b):
    if type(a) is not type(b):
        raise MismatchError(f"cannot mix {type(a).__name__} and {type(b).__name__}")
    if len(a) != len(b):
        raise MismatchError(f"ambient mismatch: {len(a)} vs {len(b)} variables")


def divides(a: AnyMonomial, b: AnyMonomial) -> bool:
    _check_pair(a, b)
    return all(x <= y for x, y in zip(a, b))


def lcm(a: AnyMonomial, b: AnyMonomial) -> AnyMonomial:
    _check_pair(a, b)
    return type(a)(max(x, y) for x, y in zip(a, b))


def minimalize(gens: Iterable[tuple]) -> tuple:
    """Drop every generator divisible by another one; sort decreasingly."""
    # sorting by total degree first means a divisor is always seen before
    # anything it divides
    cand = sorted(set(gens), key=lambda g: (sum(g), g))
    kept: list = []
    for g in cand:
        if not any(all(x <= y for x, y in zip(h, g)) for h in kept):
            kept.append(g)
    kept.sort(reverse=True)
    return tuple(kept)


class _Ideal:
    monomial_type: type = tuple
    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: Iterable = ()):
        if n < 1:
            raise PreconditionError("need at least one variable")
        typed = []
        for g in gens:
            g = self.monomial_type(g)
            if len(g) != n:
                raise MismatchError(f"generator {g!r} does not live in {n} variables")
            typed.append(g)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", minimalize(typed))

    def __setattr__(self, name, value):
        raise AttributeError("ideals are immutable")

    def __eq__(self, other):
        return type(self) is type(other) and self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.gens))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def __contains__(self, m):
        return contains(self, m)

    def __and__(self, other):
        return intersect(self, other)

    def __add__(self, other):
        return ideal_sum(self, other)


class MonomialIdeal(_Ideal):
    """Ideal generated by concrete monomials; minimal generators only."""

    monomial_type = Monomial
    __slots__ = ()

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, [Monomial.one(n)])

    @classmethod
    def face(cls, n: int, support: int) -> "MonomialIdeal":
        """The prime ideal generated by the variables in a bitmask."""
        return cls(n, [Monomial.var(n, i) for i in range(n) if support >> i & 1])

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[int]) -> "MonomialIdeal":
        """Squarefree ideal with one generator per bitmask."""
        return cls(n, [Monomial((s >> i) & 1 for i in range(n)) for s in supports])

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def supports(self) -> tuple[int, ...]:
        return tuple(g.support() for g in self.gens)

    def __mul__(self, other):
        return product(self, other)

    def __repr__(self):
        from .syntax import format_ideal

        return f"MonomialIdeal({self.n}, [{format_ideal(self)}])"


class SymbolicIdeal(_Ideal):
    """Ideal whose generators have exponents in {0, q-1, q}."""

    monomial_type = SymbolicMonomial
    __slots__ = ()

    def __repr__(self):
        from .syntax import format_ideal

        return f"SymbolicIdeal({self.n}, [{format_ideal(self)}])"


AnyIdeal = Union[MonomialIdeal, SymbolicIdeal]


def _check_ideals(I, J):
    if type(I) is not type(J):
        raise MismatchError(f"cannot mix {type(I).__name__} and {type(J).__name__}")
    if I.n != J.n:
        raise MismatchError(f"ambient mismatch: {I.n} vs {J.n} variables")


def intersect(I: AnyIdeal, J: AnyIdeal) -> AnyIdeal:
    _check_ideals(I, J)
    return type(I)(I.n, (lcm(f, g) for f in I.gens for g in J.gens))


def intersect_all(ideals: Iterable[AnyIdeal]) -> AnyIdeal:
    ideals = list(ideals)
    if not ideals:
        raise PreconditionError("empty intersection")
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def ideal_sum(I: AnyIdeal, J: AnyIdeal) -> AnyIdeal:
    _check_ideals(I, J)
    return type(I)(I.n, I.gens + J.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_ideals(I, J)
    if not isinstance(I, MonomialIdeal):
        raise MismatchError("products leave the {0, q-1, q} alphabet; concrete ideals only")
    return MonomialIdeal(I.n, (f * g for f in I.gens for g in J.gens))


def colon(J: MonomialIdeal, I: MonomialIdeal) -> MonomialIdeal:
    """(J : I), computed exactly as the intersection over f in gens(I) of
    (J : f) = (1/f)(J cap (f))."""
    _check_ideals(J, I)
    if not isinstance(J, MonomialIdeal):
        raise MismatchError("colon is only available for concrete ideals")
    if I.is_zero():
        raise PreconditionError("colon by the zero ideal")
    out = None
    for f in I.gens:
        part = MonomialIdeal(J.n, (Monomial(max(a - b, 0) for a, b in zip(g, f)) for g in J.gens))
        out = part if out is None else intersect(out, part)
    return out


Q = "q"  # pass as the power to frobenius_power for the symbolic result


def frobenius_power(I: AnyIdeal, q) -> AnyIdeal:
    """I^[q]: every generator raised to the q-th power.

    With ``q == "q"`` a squarefree concrete ideal is sent to the symbolic
    ideal whose exponents are 0 or q.
    """
    if q == Q:
        if not isinstance(I, MonomialIdeal) or not I.is_squarefree():
            raise PreconditionError("symbolic Frobenius power needs a squarefree concrete ideal")
        return SymbolicIdeal(I.n, ([SymExp.Q if a else SymExp.ZERO for a in g] for g in I.gens))
    if not isinstance(I, MonomialIdeal):
        raise MismatchError("integer Frobenius powers of symbolic ideals leave the alphabet")
    if not isinstance(q, int) or q < 1:
        raise PreconditionError(f"bad Frobenius exponent {q!r}")
    return MonomialIdeal(I.n, (Monomial(a * q for a in g) for g in I.gens))


def contains(I: AnyIdeal, m: AnyMonomial) -> bool:
    if not isinstance(m, I.monomial_type):
        raise MismatchError(f"{type(m).__name__} tested against {type(I).__name__}")
    if len(m) != I.n:
        raise MismatchError(f"ambient mismatch: {len(m)} vs {I.n} variables")
    return any(all(x <= y for x, y in zip(g, m)) for g in I.gens)


def ideal_equal(I: AnyIdeal, J: AnyIdeal) -> bool:
    _check_ideals(I, J)
    return I.gens == J.gens


def instantiate(I: SymbolicIdeal, q: int) -> MonomialIdeal:
    if not isinstance(I, SymbolicIdeal):
        raise MismatchError("instantiate expects a symbolic ideal")
    if not isinstance(q, int) or q < 2:
        raise PreconditionError("q must be an integer >= 2")
    return MonomialIdeal(I.n, (g.at(q) for g in I.gens))


def is_subideal(I: AnyIdeal, J: AnyIdeal) -> bool:
    """I is contained in J."""
    _check_ideals(I, J)
    return all(contains(J, g) for g in I.gens)
