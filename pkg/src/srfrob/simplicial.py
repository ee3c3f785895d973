"""Stanley-Reisner dictionary: decompositions, complexes, links, homology.

Vertex sets and faces are bitmasks over the variables x1..xn (bit i is
x_{i+1}). Face enumeration is a plain subset scan, which is fine for the
small n this package targets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .errors import PreconditionError
from .linalg import rank_mod_p
from .monomial import MonomialIdeal, intersect_all

MAX_SCAN_VARS = 20


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def submasks(mask: int):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def maximal_sets(masks: Iterable[int]) -> tuple[int, ...]:
    ms = sorted(set(masks), key=popcount, reverse=True)
    kept: list[int] = []
    for m in ms:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def is_antichain(masks: Iterable[int]) -> bool:
    ms = list(masks)
    return len(set(ms)) == len(ms) and all(
        a & b != a and a & b != b for a, b in combinations(ms, 2)
    )


@dataclass(frozen=True)
class FaceIdeal:
    """Prime ideal generated by the variables in ``support``."""

    n: int
    support: int

    def __post_init__(self):
        if self.support == 0:
            raise PreconditionError("a face ideal needs a nonempty support")
        if self.support >> self.n:
            raise PreconditionError("support outside the ambient variables")

    @property
    def height(self) -> int:
        return popcount(self.support)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal.face(self.n, self.support)

    def __str__(self):
        return "(" + ",".join(f"x{i + 1}" for i in bits(self.support)) + ")"


@dataclass(frozen=True)
class Decomposition:
    """Minimal primary decomposition of a squarefree ideal, as face supports."""

    n: int
    supports: tuple[int, ...]

    def __post_init__(self):
        if not self.supports:
            raise PreconditionError("empty decomposition")
        if not is_antichain(self.supports):
            raise PreconditionError("components must form an antichain")
        object.__setattr__(self, "supports", tuple(sorted(self.supports)))
        for s in self.supports:
            FaceIdeal(self.n, s)

    @property
    def components(self) -> tuple[FaceIdeal, ...]:
        return tuple(FaceIdeal(self.n, s) for s in self.supports)

    def ideal(self) -> MonomialIdeal:
        return intersect_all(c.ideal() for c in self.components)

    def used_variables(self) -> int:
        u = 0
        for s in self.supports:
            u |= s
        return u

    def __str__(self):
        return " ∩ ".join(str(c) for c in self.components)


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices 0..n-1 given by its facets.

    ``facets == ()`` is the void complex; ``facets == (0,)`` is {∅}.
    """

    n: int
    facets: tuple[int, ...]
    _faces: Optional[frozenset] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "facets", maximal_sets(self.facets))

    @property
    def void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if self.void:
            raise PreconditionError("the void complex has no dimension")
        return max(popcount(f) for f in self.facets) - 1

    def faces(self) -> frozenset:
        if self._faces is None:
            fs = set()
            for f in self.facets:
                fs.update(submasks(f))
            object.__setattr__(self, "_faces", frozenset(fs))
        return self._faces

    def faces_of_dim(self, d: int) -> list[int]:
        return sorted(f for f in self.faces() if popcount(f) == d + 1)

    def __contains__(self, sigma: int) -> bool:
        return any(sigma & f == sigma for f in self.facets)

    def vertices(self) -> int:
        v = 0
        for f in self.facets:
            v |= f
        return v

    def f_vector(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for f in self.faces():
            d = popcount(f) - 1
            out[d] = out.get(d, 0) + 1
        return out


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology dimensions over F_p, keyed by degree (>= -1)."""

    p: int
    dims: dict
    void: bool = False

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    def nonzero(self) -> dict[int, int]:
        return {i: d for i, d in sorted(self.dims.items()) if d}


def _require_squarefree(I: MonomialIdeal):
    if not I.is_squarefree():
        raise PreconditionError("expected a squarefree monomial ideal")
    if I.n > MAX_SCAN_VARS:
        raise PreconditionError(f"subset scans are limited to {MAX_SCAN_VARS} variables")


def complex_of(I: MonomialIdeal) -> SimplicialComplex:
    """Stanley-Reisner complex: maximal sigma with x^sigma not in I."""
    _require_squarefree(I)
    if I.is_unit():
        raise PreconditionError("the unit ideal has no Stanley-Reisner complex")
    gens = I.supports()
    full = (1 << I.n) - 1
    faces = [s for s in range(full + 1) if not any(g & s == g for g in gens)]
    return SimplicialComplex(I.n, maximal_sets(faces))


def ideal_of(delta: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal: generated by the minimal non-faces."""
    faces = delta.faces()
    nonfaces = [s for s in range(1 << delta.n) if s not in faces]
    minimal = [s for s in nonfaces if not any(t != s and t & s == t for t in nonfaces)]
    return MonomialIdeal.from_supports(delta.n, minimal)


def primary_decomposition(I: MonomialIdeal) -> Decomposition:
    _require_squarefree(I)
    if I.is_zero() or I.is_unit():
        raise PreconditionError("primary decomposition needs a proper nonzero ideal")
    delta = complex_of(I)
    full = (1 << I.n) - 1
    return Decomposition(I.n, tuple(full & ~f for f in delta.facets))


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Ideal generated by x^alpha over the components I_alpha of I."""
    return MonomialIdeal.from_supports(I.n, primary_decomposition(I).supports)


def link(delta: SimplicialComplex, sigma: int) -> SimplicialComplex:
    if sigma not in delta:
        raise PreconditionError("link of a non-face")
    return SimplicialComplex(delta.n, tuple(f & ~sigma for f in delta.facets if f & sigma == sigma))


def restrict_to_core(delta: SimplicialComplex) -> SimplicialComplex:
    """Delete the cone points (vertices lying in every facet)."""
    cone = -1
    for f in delta.facets:
        cone &= f
    return SimplicialComplex(delta.n, tuple(f & ~cone for f in delta.facets))


def _boundary_rows(lower: list[int], upper: list[int]) -> list[list[int]]:
    """Matrix of the simplicial boundary C_k -> C_{k-1}, one row per k-face."""
    index = {f: j for j, f in enumerate(lower)}
    rows = []
    for face in upper:
        row = [0] * len(lower)
        for pos, v in enumerate(bits(face)):
            row[index[face & ~(1 << v)]] = -1 if pos % 2 else 1
        rows.append(row)
    return rows


def reduced_homology(delta: SimplicialComplex, p: int) -> HomologyProfile:
    if delta.void:
        return HomologyProfile(p, {}, void=True)
    by_dim: dict[int, list[int]] = {}
    for f in delta.faces():
        by_dim.setdefault(popcount(f) - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort()
    top = delta.dim
    ranks = {k: rank_mod_p(_boundary_rows(by_dim[k - 1], by_dim[k]), p) for k in range(0, top + 1)}
    dims = {}
    for k in range(-1, top + 1):
        d = len(by_dim[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if d:
            dims[k] = d
    return HomologyProfile(p, dims)


def reduced_euler_characteristic(delta: SimplicialComplex) -> int:
    """sum (-1)^i f_i over i >= -1, straight from the face counts."""
    return sum((-1) ** d * c for d, c in delta.f_vector().items())


def is_homology_sphere(delta: SimplicialComplex, p: int) -> bool:
    """Every link (including the whole complex) has the homology of a sphere
    of its own dimension over F_p."""
    if delta.void:
        return False
    for sigma in delta.faces():
        lk = link(delta, sigma)
        h = reduced_homology(lk, p)
        top = lk.dim
        if any(h[i] for i in range(-1, top)) or h[top] != 1:
            return False
    return True


def is_gorenstein(I: MonomialIdeal, p: int) -> bool:
    """k[Δ] is Gorenstein over F_p iff core Δ is an F_p-homology sphere."""
    return is_homology_sphere(restrict_to_core(complex_of(I)), p)


def is_cohen_macaulay(I: MonomialIdeal, p: int) -> bool:
    """Reisner's criterion."""
    delta = complex_of(I)
    for sigma in delta.faces():
        lk = link(delta, sigma)
        h = reduced_homology(lk, p)
        if any(h[i] for i in range(-1, lk.dim)):
            return False
    return True


def height_profile(D: Decomposition) -> tuple[int, bool, bool]:
    hs = [popcount(s) for s in D.supports]
    return min(hs), len(set(hs)) == 1, D.used_variables() == (1 << D.n) - 1


def hochster_piece(I: MonomialIdeal, alpha: int, p: int) -> int:
    """dim H̃_{n-r-|σ|-1}(link σ) for σ the complement of ``alpha``, r = ht I.

    This is the indexing under which the Gorenstein examples worked out by
    hand for (xy,xz,yz), (xy,xz,yw) and (xyz,xw,yw) come out right: "the
    piece at alpha" is the homology of the link of the vertices *outside*
    alpha, in the degree of top local cohomology.
    """
    delta = complex_of(I)
    full = (1 << I.n) - 1
    sigma = full & ~alpha
    if sigma not in delta:
        return 0
    r, _, _ = height_profile(primary_decomposition(I))
    degree = I.n - r - popcount(sigma) - 1
    return reduced_homology(link(delta, sigma), p)[degree]
