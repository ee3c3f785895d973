"""Squarefree monomial ideals up to relabeling, census tables, and families.

An ideal is stored through its primary decomposition: a sorted tuple of
component bitmasks. Its canonical form is the lexicographically smallest
such tuple over all n! relabelings of the variables. For families of equal
size this is the same as taking the largest characteristic vector over the
ordered universe of masks, so an orderly generation works: a family is
extended only by masks above its current maximum, and every canonical family
is reached from its (canonical) prefix.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Optional

from .errors import InvariantError, PreconditionError
from .frobenius import classify
from .monomial import MonomialIdeal, intersect
from .simplicial import Decomposition, is_antichain, popcount

MAX_VARS = 7


@lru_cache(maxsize=None)
def _mask_tables(n: int) -> tuple:
    """For each permutation, the image of every mask 0..2^n-1."""
    tables = []
    for perm in permutations(range(n)):
        img = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            i = low.bit_length() - 1
            img[m] = img[m ^ low] | (1 << perm[i])
        tables.append(img)
    return tuple(tables)


def canonical_form(n: int, supports: Iterable[int]) -> tuple[int, ...]:
    fam = tuple(supports)
    if not is_antichain(fam):
        raise PreconditionError("canonical forms are defined for antichains")
    if not 1 <= n <= MAX_VARS:
        raise PreconditionError(f"n must be in 1..{MAX_VARS}")
    return min(tuple(sorted(t[s] for s in fam)) for t in _mask_tables(n))


def _is_canonical(n: int, fam: tuple) -> bool:
    for t in _mask_tables(n):
        if tuple(sorted(t[s] for s in fam)) < fam:
            return False
    return True


def enumerate_ideals(n: int, height: int, pure: bool = True, covering: bool = True) -> list[tuple[int, ...]]:
    """Canonical decompositions of all squarefree ideals of the given height.

    Pure: every component has exactly ``height`` variables; otherwise the
    smallest component has ``height`` variables. Covering: the components
    together use all n variables.
    """
    if not 1 <= height <= n <= MAX_VARS:
        raise PreconditionError(f"need 1 <= height <= n <= {MAX_VARS}")
    if pure:
        universe = sorted(m for m in range(1, 1 << n) if popcount(m) == height)
    else:
        universe = sorted(m for m in range(1, 1 << n) if popcount(m) >= height)
    full = (1 << n) - 1
    found = []

    def extend(fam: tuple, start: int):
        if fam:
            ok_height = pure or min(popcount(s) for s in fam) == height
            used = 0
            for s in fam:
                used |= s
            if ok_height and (not covering or used == full):
                found.append(fam)
        for j in range(start, len(universe)):
            m = universe[j]
            if any(m & s == s for s in fam):  # m contains an earlier (smaller) mask
                continue
            cand = fam + (m,)
            if _is_canonical(n, cand):
                extend(cand, j + 1)

    extend((), 0)
    return sorted(found)


def orbit_count_bruteforce(n: int, height: int, covering: bool = True) -> int:
    """Number of pure-height antichains up to relabeling, by canonicalizing
    every labeled family. Exponential in C(n, height); small n only."""
    universe = [sum(1 << i for i in c) for c in combinations(range(n), height)]
    full = (1 << n) - 1
    seen = set()
    for mask in range(1, 1 << len(universe)):
        fam = [universe[i] for i in range(len(universe)) if mask >> i & 1]
        used = 0
        for s in fam:
            used |= s
        if covering and used != full:
            continue
        seen.add(canonical_form(n, fam))
    return len(seen)


@dataclass(frozen=True)
class CensusRow:
    n: int
    height: int
    pg_count: int
    gor_count: int
    ig_count: int
    covering: bool = True

    @property
    def total(self) -> int:
        return self.pg_count + self.ig_count


@dataclass(frozen=True)
class CensusEntry:
    n: int
    supports: tuple
    finitely_generated: bool
    gorenstein: bool
    cohen_macaulay: bool
    case_tag: str
    mu: int


def classify_entry(args) -> CensusEntry:
    n, supports, p = args
    r = classify(Decomposition(n, supports).ideal(), p)
    return CensusEntry(n, supports, r.finitely_generated, r.gorenstein, r.cohen_macaulay, r.case_tag.value, r.mu)


def classify_many(n: int, families: list, p: int, jobs: int = 1) -> list[CensusEntry]:
    work = [(n, fam, p) for fam in families]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(classify_entry, work, chunksize=4))
    else:
        results = [classify_entry(w) for w in work]
    return sorted(results, key=lambda r: r.supports)


def census_entries(n: int, height: int, p: int, covering: bool = True, jobs: int = 1) -> list[CensusEntry]:
    return classify_many(n, enumerate_ideals(n, height, True, covering), p, jobs)


def tally(n: int, height: int, entries: list[CensusEntry], covering: bool = True) -> CensusRow:
    pg = sum(1 for e in entries if e.finitely_generated)
    gor = sum(1 for e in entries if e.gorenstein)
    if any(e.gorenstein and not e.finitely_generated for e in entries):
        raise InvariantError("a Gorenstein ring with infinitely generated Frobenius algebra")
    return CensusRow(n, height, pg, gor, len(entries) - pg, covering)


def census(n: int, p: int = 2, covering: bool = True, jobs: int = 1) -> list[CensusRow]:
    """One row per pure height 1..n: counts of p.g., Gorenstein and i.g."""
    return [tally(n, h, census_entries(n, h, p, covering, jobs), covering) for h in range(1, n + 1)]


def build_Ikn(k: int, n: int) -> MonomialIdeal:
    """Intersection of all face ideals of height k in n variables."""
    if not 1 <= k <= n:
        raise PreconditionError("need 1 <= k <= n")
    out: Optional[MonomialIdeal] = None
    for c in combinations(range(n), k):
        face = MonomialIdeal.face(n, sum(1 << i for i in c))
        out = face if out is None else intersect(out, face)
    return out


def embed(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """The same generators viewed in n >= I.n variables."""
    if n < I.n:
        raise PreconditionError("cannot embed into fewer variables")
    return MonomialIdeal(n, (tuple(g) + (0,) * (n - I.n) for g in I.gens))


def build_Jkn(k: int, n: int) -> MonomialIdeal:
    """(x_n) + all squarefree monomials of degree n-k+1 in x_1..x_{n-1}."""
    if not 1 <= k < n:
        raise PreconditionError("need 1 <= k < n")
    supports = [1 << (n - 1)]
    supports += [sum(1 << i for i in c) for c in combinations(range(n - 1), n - k + 1)]
    return MonomialIdeal.from_supports(n, supports)


def build_block_family(n: int, r: int, cuts: Iterable[int] = ()) -> MonomialIdeal:
    """(x_1, ..., x_r, x_{r+1}...x_{r_1}, ..., x_{r_t+1}...x_n) ∩ (x_{r+1}, ..., x_n).

    ``cuts`` are r < r_1 < ... < r_t <= n, splitting x_{r+1}..x_n into
    consecutive blocks whose products are generators. A final cut at n adds
    no block.
    """
    cuts = list(cuts)
    if cuts and cuts[-1] == n:
        cuts.pop()
    bounds = [r] + cuts + [n]
    if not 1 <= r < n or any(a >= b for a, b in zip(bounds, bounds[1:])):
        raise PreconditionError("need 1 <= r < r_1 < ... < r_t <= n")
    supports = [1 << i for i in range(r)]
    for a, b in zip(bounds, bounds[1:]):
        supports.append(sum(1 << i for i in range(a, b)))
    first = MonomialIdeal.from_supports(n, supports)
    second = MonomialIdeal.face(n, sum(1 << i for i in range(r, n)))
    return intersect(first, second)
