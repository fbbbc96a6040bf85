"""Betti diagrams of squarefree monomial ideals via Hochster's formula.

``b_{i,j}(S/I) = sum over vertex sets W with |W| = j of dim H~_{j-i-1}(Delta_W)``
where ``Delta`` is the Stanley-Reisner complex of ``I`` and ``Delta_W`` its
restriction to ``W``.  Homology is taken over the rationals.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .diagram import BettiDiagram


def _antichain(sets: Iterable[frozenset], keep_maximal: bool) -> tuple[frozenset, ...]:
    sets = sorted(set(sets), key=lambda s: (len(s), sorted(s)), reverse=keep_maximal)
    kept: list[frozenset] = []
    for s in sets:
        if keep_maximal and any(s <= t for t in kept):
            continue
        if not keep_maximal and any(t <= s for t in kept):
            continue
        kept.append(s)
    return tuple(sorted(kept, key=lambda s: (len(s), sorted(s))))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices ``0..nvertices-1`` given by its facets.

    ``facets == ()`` is the void complex; ``facets == (frozenset(),)`` is the
    complex whose only face is the empty set.
    """

    nvertices: int
    facets: tuple[frozenset, ...]

    def __post_init__(self):
        facets = [frozenset(f) for f in self.facets]
        for f in facets:
            if any(v < 0 or v >= self.nvertices for v in f):
                raise ValueError(f"facet {sorted(f)} uses a vertex outside 0..{self.nvertices - 1}")
        object.__setattr__(self, "facets", _antichain(facets, keep_maximal=True))

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-2)

    def faces(self, dim: int) -> list[tuple[int, ...]]:
        """Faces of dimension ``dim`` as sorted tuples, in lexicographic order."""
        if dim < -1:
            return []
        out = set()
        for f in self.facets:
            out.update(itertools.combinations(sorted(f), dim + 1))
        return sorted(out)

    def restrict(self, vertices: Iterable[int]) -> SimplicialComplex:
        w = frozenset(vertices)
        if not self.facets:
            return self
        return SimplicialComplex(self.nvertices, tuple(f & w for f in self.facets))


@dataclass(frozen=True)
class SquarefreeIdeal:
    nvars: int
    generators: tuple[frozenset, ...]

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError(f"need at least one variable, got {self.nvars}")
        gens = [frozenset(g) for g in self.generators]
        for g in gens:
            if not g:
                raise ValueError("the unit ideal is not supported")
            if any(v < 0 or v >= self.nvars for v in g):
                raise ValueError(f"generator {sorted(g)} uses a variable outside x0..x{self.nvars - 1}")
        object.__setattr__(self, "generators", _antichain(gens, keep_maximal=False))

    def contains(self, face: Iterable[int]) -> bool:
        face = frozenset(face)
        return any(g <= face for g in self.generators)


def stanley_reisner(ideal: SquarefreeIdeal) -> SimplicialComplex:
    """Complex whose faces are the vertex sets not divisible by any generator."""
    n = ideal.nvars
    faces = []
    # Search downward from the full vertex set; a face's subsets are faces too.
    for size in range(n, -1, -1):
        for s in itertools.combinations(range(n), size):
            s = frozenset(s)
            if not ideal.contains(s) and not any(s <= f for f in faces):
                faces.append(s)
    return SimplicialComplex(n, tuple(faces))


def matrix_rank(rows: list[list[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integer matrices."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        piv = m[rank][col]
        for i in range(rank + 1, len(m)):
            a = m[i][col]
            m[i] = [(piv * x - a * y) // prev for x, y in zip(m[i], m[rank])]
        prev = piv
        rank += 1
        if rank == len(m):
            break
    return rank


def boundary_matrix(c: SimplicialComplex, dim: int) -> list[list[int]]:
    """Matrix of the boundary map from ``dim``-faces to ``(dim-1)``-faces (augmented)."""
    rows = c.faces(dim - 1)
    cols = c.faces(dim)
    index = {f: i for i, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, face in enumerate(cols):
        for pos in range(len(face)):
            sub = face[:pos] + face[pos + 1:]
            mat[index[sub]][j] = -1 if pos % 2 else 1
    return mat


def reduced_homology_ranks(c: SimplicialComplex) -> dict[int, int]:
    """Ranks of reduced rational homology, keyed by dimension from -1 to dim(c).

    The void complex has no homology at all and returns ``{}``.
    """
    if not c.facets:
        return {}
    top = c.dimension
    nfaces = {d: len(c.faces(d)) for d in range(-1, top + 1)}
    ranks = {d: 0 for d in range(-1, top + 2)}
    for d in range(0, top + 1):
        ranks[d] = matrix_rank(boundary_matrix(c, d))
    return {d: nfaces[d] - ranks[d] - ranks[d + 1] for d in range(-1, top + 1)}


def hochster_betti(ideal: SquarefreeIdeal) -> BettiDiagram:
    """Graded Betti diagram of ``S/I``; the entry for vertex set W lands at column i, row |W| - i."""
    delta = stanley_reisner(ideal)
    table: dict[tuple[int, int], Fraction] = {}
    for size in range(ideal.nvars + 1):
        for w in itertools.combinations(range(ideal.nvars), size):
            homology = reduced_homology_ranks(delta.restrict(w))
            for dim, rank in homology.items():
                if rank:
                    i = size - dim - 1
                    key = (i, size - i)
                    table[key] = table.get(key, 0) + rank
    return BettiDiagram(table)


_VAR = re.compile(r"^x(\d+)$")


def parse_ideal(text: str, nvars: int) -> SquarefreeIdeal:
    """Parse ``"x0*x2, x1*x3"`` or exponent vectors ``"1010,0101"``."""
    gens = []
    for raw in text.split(","):
        token = raw.strip()
        if not token:
            continue
        if set(token) <= {"0", "1"}:
            if len(token) != nvars:
                raise ValueError(f"exponent vector {token!r} must have {nvars} digits")
            gens.append(frozenset(i for i, ch in enumerate(token) if ch == "1"))
            continue
        support = set()
        for factor in token.split("*"):
            match = _VAR.match(factor.strip())
            if not match:
                raise ValueError(f"cannot parse monomial {token!r}")
            v = int(match.group(1))
            if v in support:
                raise ValueError(f"monomial {token!r} is not squarefree")
            support.add(v)
        gens.append(frozenset(support))
    return SquarefreeIdeal(nvars, tuple(gens))
