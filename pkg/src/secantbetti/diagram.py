"""Exact Betti diagrams and pure diagrams.

A Betti diagram is stored sparsely as a map ``(p, q) -> Fraction`` where ``p``
is the homological column and ``q`` the row, so the entry sits in internal
degree ``p + q``.  Zero entries are never stored, which makes equality of
diagrams plain map equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Iterable, Iterator, Mapping


class DegreeSequence(tuple):
    """Strictly increasing tuple of integers ``(e_0, ..., e_n)``."""

    def __new__(cls, entries: Iterable[int]):
        entries = tuple(entries)
        for e in entries:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"degree sequence entries must be integers, got {e!r}")
        if any(a >= b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"degree sequence must be strictly increasing: {entries}")
        return super().__new__(cls, entries)

    @property
    def length(self) -> int:
        """The index ``n`` of the last entry."""
        return len(self) - 1

    def shift(self, c: int) -> DegreeSequence:
        return DegreeSequence(e + c for e in self)

    def __repr__(self) -> str:
        return f"DegreeSequence({tuple(self)!r})"


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class BettiDiagram(Mapping):
    """Immutable sparse table of rationals indexed by ``(column, row)``.

    Lookups outside the support return ``Fraction(0)``.
    """

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping[tuple[int, int], object] | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        table: dict[tuple[int, int], Fraction] = {}
        for (p, q), value in items:
            if p < 0:
                raise ValueError(f"column index must be nonnegative, got {p}")
            value = _as_fraction(value)
            key = (int(p), int(q))
            total = table.get(key, Fraction(0)) + value
            if total:
                table[key] = total
            else:
                table.pop(key, None)
        self._entries = dict(sorted(table.items()))
        self._hash = None

    # Mapping protocol: iteration only covers the nonzero support.
    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key) -> bool:
        return key in self._entries

    def __eq__(self, other) -> bool:
        if isinstance(other, BettiDiagram):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self == BettiDiagram(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"({p}, {q}): {v}" for (p, q), v in self._entries.items())
        return f"BettiDiagram({{{body}}})"

    def __add__(self, other: BettiDiagram) -> BettiDiagram:
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: BettiDiagram) -> BettiDiagram:
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return add(self, scale(other, -1))

    def __neg__(self) -> BettiDiagram:
        return scale(self, -1)

    def __mul__(self, c) -> BettiDiagram:
        try:
            return scale(self, c)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, c) -> BettiDiagram:
        return scale(self, 1 / _as_fraction(c))

    def is_empty(self) -> bool:
        return not self._entries

    def columns(self) -> list[int]:
        return sorted({p for p, _ in self._entries})

    def rows(self) -> list[int]:
        return sorted({q for _, q in self._entries})

    def column(self, p: int) -> dict[int, Fraction]:
        """Nonzero entries of column ``p`` keyed by row."""
        return {q: v for (pp, q), v in self._entries.items() if pp == p}

    def row(self, q: int) -> dict[int, Fraction]:
        """Nonzero entries of row ``q`` keyed by column."""
        return {p: v for (p, qq), v in self._entries.items() if qq == q}

    def projective_dimension(self) -> int:
        if not self._entries:
            raise ValueError("the empty diagram has no projective dimension")
        return max(p for p, _ in self._entries)

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._entries.values())

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self._entries.values())


def entry(d: BettiDiagram, p: int, q: int) -> Fraction:
    return d[(p, q)]


def scale(d: BettiDiagram, c) -> BettiDiagram:
    c = _as_fraction(c)
    if not c:
        return BettiDiagram()
    return BettiDiagram({key: c * v for key, v in d.items()})


def add(a: BettiDiagram, b: BettiDiagram) -> BettiDiagram:
    return BettiDiagram(list(a.items()) + list(b.items()))


def pure_diagram(e: Iterable[int]) -> BettiDiagram:
    """Normalized pure diagram of the degree sequence ``e``.

    Column ``p`` holds the single value ``n! / prod_{i != p} |e_i - e_p|`` in
    row ``e_p - p``.  With ``e_0 = 0`` this has multiplicity one.
    """
    e = e if isinstance(e, DegreeSequence) else DegreeSequence(e)
    n = e.length
    if n < 1:
        raise ValueError(f"a pure diagram needs at least two degrees, got {tuple(e)}")
    nfact = factorial(n)
    table = {}
    for p, ep in enumerate(e):
        denom = 1
        for i, ei in enumerate(e):
            if i != p:
                denom *= abs(ei - ep)
        table[(p, ep - p)] = Fraction(nfact, denom)
    return BettiDiagram(table)
