"""Boij-Söderberg decompositions into pure diagrams.

``greedy_decompose`` peels off the pure diagram sitting on the top strand of
the residual diagram (lowest nonzero row in every column) with the largest
coefficient that keeps the residual nonnegative.  For diagrams of
Cohen-Macaulay modules this always terminates with an empty residual.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .diagram import BettiDiagram, DegreeSequence, pure_diagram


class NotInCone(ValueError):
    """The diagram is not a nonnegative combination of pure diagrams."""

    def __init__(self, message: str, residual: BettiDiagram):
        super().__init__(message)
        self.residual = residual


class OverlapError(ValueError):
    """The two removal sets defining a secant pure diagram collide."""


@dataclass(frozen=True)
class Decomposition:
    """Ordered terms ``(coefficient, degree sequence)`` with positive coefficients."""

    terms: tuple[tuple[Fraction, DegreeSequence], ...] = field(default_factory=tuple)

    def __post_init__(self):
        cleaned = []
        for c, e in self.terms:
            c = Fraction(c)
            if c < 0:
                raise ValueError(f"negative coefficient {c} for {tuple(e)}")
            if c:
                cleaned.append((c, DegreeSequence(e)))
        object.__setattr__(self, "terms", tuple(cleaned))

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def coefficients(self) -> list[Fraction]:
        return [c for c, _ in self.terms]

    @property
    def sequences(self) -> list[DegreeSequence]:
        return [e for _, e in self.terms]

    def total(self) -> Fraction:
        """Sum of coefficients; equals the multiplicity since each pure diagram has multiplicity 1."""
        return sum(self.coefficients, Fraction(0))

    def normalized(self) -> Decomposition:
        """The same decomposition rescaled to multiplicity one."""
        total = self.total()
        if not total:
            return self
        return Decomposition(tuple((c / total, e) for c, e in self.terms))


def recompose(terms: Decomposition | Iterable) -> BettiDiagram:
    out = BettiDiagram()
    for c, e in terms:
        out = out + pure_diagram(e) * c
    return out


def top_strand(d: BettiDiagram, length: int) -> DegreeSequence:
    """Degree sequence of the lowest nonzero row in each of columns ``0..length``."""
    degrees = []
    for p in range(length + 1):
        col = d.column(p)
        if not col:
            raise NotInCone(f"column {p} of the residual is empty", d)
        degrees.append(p + min(col))
    if any(a >= b for a, b in zip(degrees, degrees[1:])):
        raise NotInCone(f"top strand {tuple(degrees)} is not strictly increasing", d)
    return DegreeSequence(degrees)


def greedy_decompose(d: BettiDiagram) -> Decomposition:
    if d.is_empty():
        raise ValueError("cannot decompose the empty diagram")
    for key, value in d.items():
        if value < 0:
            raise NotInCone(f"negative entry {value} at {key}", d)
    length = d.projective_dimension()
    if length < 1:
        raise NotInCone("projective dimension 0 has no pure diagram of length >= 1", d)

    terms = []
    residual = d
    # Each pass zeroes at least one entry, so this bounds the loop.
    for _ in range(len(d)):
        if residual.is_empty():
            break
        if residual.projective_dimension() != length:
            raise NotInCone("residual lost its last column", residual)
        e = top_strand(residual, length)
        pure = pure_diagram(e)
        c = min(residual[key] / value for key, value in pure.items())
        residual = residual - pure * c
        for key, value in residual.items():
            if value < 0:
                raise NotInCone(f"negative residual {value} at {key}", residual)
        terms.append((c, e))
    if not residual.is_empty():
        raise NotInCone("residual did not vanish", residual)
    return Decomposition(tuple(terms))


def _check_index_vector(i) -> tuple[int, ...]:
    i = tuple(i)
    if not i:
        raise ValueError("index vector must be nonempty")
    if i[0] < 0 or any(a > b for a, b in zip(i, i[1:])):
        raise ValueError(f"index vector must be weakly increasing and nonnegative: {i}")
    return i


def pi_k_sequence(i: Iterable[int], k: int, d: int) -> DegreeSequence:
    """Degree sequence ``{0..r+1} minus {1..k+1} minus {r+1-(i_j+j)}`` with ``r = d - 2``."""
    i = _check_index_vector(i)
    if len(i) != k + 1:
        raise ValueError(f"index vector {i} must have k+1 = {k + 1} entries")
    r = d - 2
    if r < 2 * k + 3:
        raise ValueError(f"need r = d-2 >= 2k+3, got r={r}, k={k}")
    low = set(range(1, k + 2))
    high = {r + 1 - (ij + j) for j, ij in enumerate(i)}
    if min(high) < 1:
        raise OverlapError(f"removal {sorted(high)} leaves 1..{r + 1}")
    if low & high:
        raise OverlapError(f"removal sets {sorted(low)} and {sorted(high)} overlap")
    return DegreeSequence(sorted(set(range(r + 2)) - low - high))


def enumerate_admissible(k: int) -> list[tuple[int, ...]]:
    """Weakly increasing ``(i_0, ..., i_k)`` with entries in ``{0, 1, 2}``."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return list(itertools.combinations_with_replacement(range(3), k + 1))
