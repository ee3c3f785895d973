"""Divided-power differential operators on R = S/I in characteristic p.

An operator is a finite F_p-combination of terms x^β ∂^(α), meaning "apply
the divided power ∂^(α) = ∏ (1/α_i!) d^α_i/dx_i^α_i, then multiply by x^β".
On monomials ∂^(α) x^γ = binom(γ, α) x^{γ-α}, and binomials mod p come from
Lucas' theorem, so no factorials are ever formed.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable, Mapping, Optional

from .cartier import RingElement, cartier_generators, normal_monomials
from .errors import MismatchError, PreconditionError
from .monomial import MonomialIdeal, SymExp
from .simplicial import Decomposition, primary_decomposition
from .syntax import format_monomial


def lucas_binom(n: int, k: int, p: int) -> int:
    """binom(n, k) mod p, digit by digit in base p."""
    if k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        a, b = n % p, k % p
        if b > a:
            return 0
        # a, b < p, so the small binomial is cheap and exact
        num = den = 1
        for i in range(b):
            num = num * (a - i) % p
            den = den * (i + 1) % p
        out = out * num * pow(den, -1, p) % p
        n //= p
        k //= p
    return out


@dataclass(frozen=True)
class DiffTerm:
    coeff: int
    beta: tuple  # left multiplier x^β
    alpha: tuple  # divided-power order ∂^(α)

    @property
    def order(self) -> int:
        return max(self.alpha)


class DiffOp:
    """Sum of terms c x^β ∂^(α) over F_p, of level e (every α_i < p^e)."""

    __slots__ = ("n", "p", "e", "terms")

    def __init__(self, n: int, p: int, e: int, terms: Mapping | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        q = p**e
        for key, c in items:
            beta, alpha = tuple(key[0]), tuple(key[1])
            if len(beta) != n or len(alpha) != n:
                raise MismatchError("operator term in the wrong number of variables")
            acc[(beta, alpha)] = (acc.get((beta, alpha), 0) + c) % p
        clean = {k: c for k, c in acc.items() if c}
        for _, alpha in clean:
            if max(alpha) >= q:
                raise PreconditionError(f"∂^{alpha} is not of level {e}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("operators are immutable")

    @classmethod
    def monomial(cls, n, p, e, beta, alpha, coeff=1) -> "DiffOp":
        return cls(n, p, e, {(tuple(beta), tuple(alpha)): coeff})

    @classmethod
    def multiplication(cls, n, p, e, beta) -> "DiffOp":
        return cls.monomial(n, p, e, beta, (0,) * n)

    @classmethod
    def derivative(cls, n, p, e, alpha) -> "DiffOp":
        return cls.monomial(n, p, e, (0,) * n, alpha)

    def term_list(self) -> list[DiffTerm]:
        return [DiffTerm(c, b, a) for (b, a), c in sorted(self.terms.items(), reverse=True)]

    @property
    def order(self) -> int:
        return max((max(a) for _, a in self.terms), default=0)

    def __add__(self, other):
        _check_ops(self, other)
        return DiffOp(self.n, self.p, max(self.e, other.e), list(self.terms.items()) + list(other.terms.items()))

    def scale(self, c: int) -> "DiffOp":
        return DiffOp(self.n, self.p, self.e, {k: v * c for k, v in self.terms.items()})

    def __matmul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, DiffOp)
            and (self.n, self.p, self.terms) == (other.n, other.p, other.terms)
        )

    def __hash__(self):
        return hash((self.n, self.p, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for t in self.term_list():
            d = "*".join(
                f"d{i + 1}" if a == 1 else f"d{i + 1}^({a})" for i, a in enumerate(t.alpha) if a
            )
            body = "*".join(s for s in (format_monomial(t.beta) if any(t.beta) else "", d) if s) or "1"
            parts.append(body if t.coeff == 1 else f"{t.coeff}*{body}")
        return " + ".join(parts)


def _check_ops(a: DiffOp, b: DiffOp):
    if a.n != b.n or a.p != b.p:
        raise MismatchError("operators over different rings")


def compose(a: DiffOp, b: DiffOp) -> DiffOp:
    """a ∘ b, normalized with ∂^(s) x^t = Σ_k binom(t,k) x^{t-k} ∂^(s-k)
    and ∂^(s) ∂^(u) = binom(s+u, s) ∂^(s+u)."""
    _check_ops(a, b)
    p = a.p
    out: dict = {}
    for (b1, a1), c1 in a.terms.items():
        for (b2, a2), c2 in b.terms.items():
            ranges = [range(min(s, t) + 1) for s, t in zip(a1, b2)]
            for ks in cartesian(*ranges):
                coeff = c1 * c2
                beta, alpha = [], []
                for s, t, k, u, x in zip(a1, b2, ks, a2, b1):
                    coeff = coeff * lucas_binom(t, k, p) * lucas_binom(s - k + u, u, p) % p
                    if not coeff:
                        break
                    beta.append(x + t - k)
                    alpha.append(s - k + u)
                if coeff:
                    key = (tuple(beta), tuple(alpha))
                    out[key] = (out.get(key, 0) + coeff) % p
    return DiffOp(a.n, p, max(a.e, b.e), out)


def apply(op: DiffOp, r: RingElement) -> RingElement:
    if op.n != r.ideal.n or op.p != r.p:
        raise MismatchError("operator and element live in different rings")
    p = op.p
    out = []
    for (beta, alpha), c in op.terms.items():
        for gamma, d in r.terms.items():
            coeff = c * d
            for g, a in zip(gamma, alpha):
                coeff = coeff * lucas_binom(g, a, p) % p
                if not coeff:
                    break
            if coeff:
                out.append((tuple(g - a + b for g, a, b in zip(gamma, alpha, beta)), coeff))
    return RingElement(r.ideal, p, out)


def in_DR(beta: Iterable[int], alpha: Iterable[int], D: Decomposition) -> bool:
    """x^β ∂^α lies in D_R iff for every component, x^β ∈ I_c or x^α ∉ I_c."""
    bsup = sum(1 << i for i, b in enumerate(beta) if b)
    asup = sum(1 << i for i, a in enumerate(alpha) if a)
    return all(bsup & c or not asup & c for c in D.supports)


def phi_image(g, p: int) -> DiffOp:
    """F^e ∘ ψ_{e,γ} written as x^{qA} ∂^((q-1)1) x^{(q-1)B}, where A and B
    mark the coordinates where γ equals q and q-1."""
    e = g.e
    q = p**e
    n = g.gamma.n
    big = tuple(q if a == SymExp.Q else 0 for a in g.gamma)
    small = tuple(q - 1 if a == SymExp.QM1 else 0 for a in g.gamma)
    d = DiffOp.derivative(n, p, e, (q - 1,) * n)
    return compose(DiffOp.multiplication(n, p, e, big), compose(d, DiffOp.multiplication(n, p, e, small)))


def operators_equal(a: DiffOp, b: DiffOp, I: MonomialIdeal, p: int, e: int) -> bool:
    """Compare actions on R for all monomials with exponents < p^e + order."""
    _check_ops(a, b)
    if a.e > e or b.e > e:
        raise PreconditionError("operator level exceeds e")
    bound = p**e + max(a.order, b.order)
    for m in normal_monomials(I, bound):
        r = RingElement.monomial(I, p, m)
        if apply(a, r) != apply(b, r):
            return False
    return True


@dataclass(frozen=True)
class NonImageWitness:
    variable: int  # 0-based index i of the witness x_i ∂_i^(q-1)
    beta: tuple
    alpha: tuple
    operator: DiffOp
    candidates_checked: int
    distinct: bool  # False if some candidate acts exactly like the witness
    label: str = "bounded witness"


def non_image_witness(I: MonomialIdeal, p: int, e: int) -> Optional[NonImageWitness]:
    """x_i ∂_i^(q-1) with x_i outside some component, checked against every
    c · Φ_e(ψ) ∘ x^δ for the level-e generators ψ, c in F_p and max-norm of
    δ at most q. A bounded refutation only, not a membership proof."""
    D = primary_decomposition(I)
    n, q = I.n, p**e
    var = next((i for i in range(n) if any(not c >> i & 1 for c in D.supports)), None)
    if var is None:
        return None
    beta = tuple(1 if j == var else 0 for j in range(n))
    alpha = tuple(q - 1 if j == var else 0 for j in range(n))
    if not in_DR(beta, alpha, D):
        raise PreconditionError("witness candidate is not a differential operator on R")
    w = DiffOp.monomial(n, p, e, beta, alpha)
    images = [phi_image(g, p) for g in cartier_generators(I, p, e)]
    checked = 0
    for img in images:
        for delta in cartesian(range(q + 1), repeat=n):
            right = compose(img, DiffOp.multiplication(n, p, e, delta))
            for c in range(p):
                checked += 1
                if operators_equal(w, right.scale(c), I, p, e):
                    return NonImageWitness(var, beta, alpha, w, checked, distinct=False)
    return NonImageWitness(var, beta, alpha, w, checked, distinct=True)


__all__ = [
    "lucas_binom",
    "DiffTerm",
    "DiffOp",
    "compose",
    "apply",
    "in_DR",
    "phi_image",
    "operators_equal",
    "NonImageWitness",
    "non_image_witness",
]
