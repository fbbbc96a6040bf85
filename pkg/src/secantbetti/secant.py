"""Betti diagrams of secant varieties of genus 2 curves.

For a genus 2 curve embedded in ``P^r`` by a line bundle of degree
``d = r + 2``, the k-th secant variety has a Betti diagram that is a sum of
two pure diagrams, indexed by ``(1, 2, ..., 2)`` and ``(2, ..., 2)``.  This
module assembles those diagrams from the closed-form coefficients and checks
them against the independent closed forms for individual entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod

from .decompose import (
    NotInCone,
    enumerate_admissible,
    greedy_decompose,
    pi_k_sequence,
)
from .diagram import BettiDiagram, pure_diagram
from .hilbert import NotDivisible, multiplicity


@dataclass(frozen=True)
class SecantParams:
    k: int
    r: int
    g: int = 2

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"secant order k must be nonnegative, got {self.k}")
        if self.g != 2:
            raise ValueError("diagrams are only available for genus 2")
        if self.r < 2 * self.k + 3:
            raise ValueError(f"need r >= 2k+3 = {2 * self.k + 3}, got r={self.r}")

    @classmethod
    def from_degree(cls, k: int, degree: int) -> SecantParams:
        return cls(k, degree - 2)

    @property
    def degree_of_line_bundle(self) -> int:
        return self.r + 2


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


@dataclass
class VerificationReport:
    params: SecantParams
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, expected, computed) -> Check:
        check = Check(name, expected, computed)
        self.checks.append(check)
        return check

    def extend(self, other: VerificationReport) -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def top_vector(k: int) -> tuple[int, ...]:
    return (2,) * (k + 1)


def next_vector(k: int) -> tuple[int, ...]:
    return (1,) + (2,) * k


def secant_degree_binomial(k: int, r: int) -> int:
    if k == 0:
        return r + 2
    return comb(r - k, k + 1) + 2 * comb(r - k - 1, k) + comb(r - k - 2, k - 1)


def secant_degree_product(k: int, r: int) -> Fraction:
    if k == 0:
        return Fraction(r + 2)
    return Fraction((r * r + r - 2 * k - 2) * prod(range(r - 2 * k, r - k - 1)), factorial(k + 1))


def secant_degree(p: SecantParams) -> Fraction:
    binomial = Fraction(secant_degree_binomial(p.k, p.r))
    if binomial != secant_degree_product(p.k, p.r):
        raise ArithmeticError(f"degree formulas disagree at k={p.k}, r={p.r}")
    return binomial


def coefficient(i, p: SecantParams) -> Fraction:
    """Weight of ``pi_k(i; d)`` in the multiplicity-one normalized diagram."""
    i = tuple(i)
    if i not in enumerate_admissible(p.k):
        raise ValueError(f"{i} is not an admissible index vector for k={p.k}")
    k, r = p.k, p.r
    top = Fraction(r * r - 2 * k * r - r, r * r + r - 2 * k - 2)
    if i == top_vector(k):
        return top
    if i == next_vector(k):
        return 1 - top
    return Fraction(0)


def contributing_vectors(k: int) -> list[tuple[int, ...]]:
    return [next_vector(k), top_vector(k)]


def assemble_betti(p: SecantParams) -> BettiDiagram:
    d = p.degree_of_line_bundle
    deg = secant_degree(p)
    out = BettiDiagram()
    for i in contributing_vectors(p.k):
        out = out + pure_diagram(pi_k_sequence(i, p.k, d)) * (deg * coefficient(i, p))
    return out


def strand_range(p: SecantParams) -> range:
    """Columns where row ``k+1`` is nonzero."""
    return range(1, p.r - 1) if p.k == 0 else range(1, p.r - 2 * p.k - 2)


def strand_value(i: int, p: SecantParams) -> Fraction:
    """Closed form for the entry in column ``i``, row ``k+1``."""
    if i not in strand_range(p):
        raise ValueError(f"column {i} outside the linear strand {strand_range(p)}")
    k, r = p.k, p.r
    if k == 0:
        return Fraction(
            factorial(r - 1) * (r * r - i * r - 2 * i - 2),
            (i + 1) * factorial(i - 1) * factorial(r - i),
        )
    num = factorial(r - k - 2) * (
        r**3 - (i + k + 1) * r**2 - (i + k + 2) * r + 2 * (k + 1) * (i + k + 1)
    )
    den = (
        factorial(k + 1)
        * (i + k + 1)
        * factorial(i - 1)
        * factorial(r - i - 2 * k - 3)
        * (r - i - k - 2)
        * (r - i - k - 1)
        * (r - i - k)
    )
    return Fraction(num, den)


def anchor_values(p: SecantParams) -> dict[tuple[int, int], Fraction]:
    """Known entries in the last two columns, plus ``b_{0,0} = 1``.

    The same positions also cover the curve case ``k = 0``.
    """
    k, r = p.k, p.r
    return {
        (r - 2 * k - 1, 2 * k + 2): Fraction(k + 2),
        (r - 2 * k - 2, 2 * k + 2): Fraction(r - 2 * k - 1),
        (r - 2 * k - 2, 2 * k + 1): Fraction(r - k - 2),
        (r - 2 * k - 1, 2 * k + 1): Fraction(0),
        (0, 0): Fraction(1),
    }


def top_row_range(g: int, k: int, r: int) -> tuple[int, int]:
    """Columns ``low..high`` where row ``2k+2`` is nonzero, for genus ``g``."""
    if g < 1:
        raise ValueError(f"genus must be positive, got {g}")
    return (r - g - 2 * k, r - 1 - 2 * k)


def vanishing_predicates(p: SecantParams, d: BettiDiagram) -> VerificationReport:
    k, r = p.k, p.r
    report = VerificationReport(p)
    report.add("row 0 is b_00 = 1", {0: Fraction(1)}, d.row(0))
    for q in range(1, k + 1):
        report.add(f"row {q} vanishes", {}, d.row(q))
    report.add(f"row {k + 1} support", list(strand_range(p)), sorted(d.row(k + 1)))
    for q in range(k + 2, 2 * k + 1):
        report.add(f"row {q} vanishes", {}, d.row(q))
    anchors = anchor_values(p)
    for (i, q), value in anchors.items():
        if q >= 2 * k + 1:
            report.add(f"anchor b_{i},{q}", value, d[(i, q)])
    if k >= 1:
        report.add(f"row {2 * k + 1} support", [r - 2 * k - 2], sorted(d.row(2 * k + 1)))
    low, high = top_row_range(2, k, r)
    report.add(f"row {2 * k + 2} support", list(range(low, high + 1)), sorted(d.row(2 * k + 2)))
    outside = sorted(key for key in d if key[0] > r - 2 * k - 1 or key[1] > 2 * k + 2 or key[1] < 0)
    report.add("no entries outside the diagram shape", [], outside)
    return report


def verify(p: SecantParams) -> VerificationReport:
    k, r = p.k, p.r
    report = VerificationReport(p)
    d = assemble_betti(p)
    deg = secant_degree(p)

    report.add("all entries nonnegative", True, d.is_nonnegative())
    report.add("all entries integral", True, d.is_integral())
    report.add("degree: binomial = product form",
               Fraction(secant_degree_binomial(k, r)), secant_degree_product(k, r))
    for i in strand_range(p):
        report.add(f"strand b_{i},{k + 1}", strand_value(i, p), d[(i, k + 1)])

    try:
        mult = multiplicity(d)
    except NotDivisible as exc:
        mult = f"NotDivisible: {exc}"
    report.add("multiplicity = degree", deg, mult)

    coeffs = {i: coefficient(i, p) for i in enumerate_admissible(k)}
    report.add("coefficients sum to 1", Fraction(1), sum(coeffs.values(), Fraction(0)))
    report.add("coefficients in [0,1]", True, all(0 <= c <= 1 for c in coeffs.values()))

    expected_terms = [
        (deg * coefficient(i, p), pi_k_sequence(i, k, p.degree_of_line_bundle))
        for i in contributing_vectors(k)
    ]
    try:
        found = [(c, tuple(e)) for c, e in greedy_decompose(d)]
    except NotInCone as exc:
        found = f"NotInCone: {exc}"
    report.add("greedy decomposition", [(c, tuple(e)) for c, e in expected_terms], found)

    report.extend(vanishing_predicates(p, d))
    return report


def sweep(k_max: int, r_extra: int, k_min: int = 0) -> list[VerificationReport]:
    """Verify every ``k_min <= k <= k_max`` and ``2k+3 <= r <= 2k+3+r_extra``, ordered by (k, r)."""
    return [
        verify(SecantParams(k, r))
        for k in range(k_min, k_max + 1)
        for r in range(2 * k + 3, 2 * k + 4 + r_extra)
    ]
