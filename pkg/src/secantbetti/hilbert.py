"""Hilbert numerators and multiplicities of Betti diagrams."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .diagram import BettiDiagram


class NotDivisible(ArithmeticError):
    """The numerator does not vanish to the required order at ``t = 1``."""

    def __init__(self, message: str, remainder: RatPolynomial | None = None):
        super().__init__(message)
        self.remainder = remainder


class RatPolynomial:
    """Univariate polynomial in ``t`` with exact rational coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Mapping[int, object] | list | tuple = ()):
        if isinstance(coefficients, Mapping):
            items = coefficients.items()
        else:
            items = enumerate(coefficients)
        coeffs: dict[int, Fraction] = {}
        for deg, c in items:
            if deg < 0:
                raise ValueError(f"negative exponent {deg}")
            c = Fraction(c) + coeffs.get(deg, 0)
            if c:
                coeffs[deg] = c
            else:
                coeffs.pop(deg, None)
        self.coefficients = dict(sorted(coeffs.items()))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return max(self.coefficients, default=-1)

    def dense(self) -> list[Fraction]:
        out = [Fraction(0)] * (self.degree + 1)
        for deg, c in self.coefficients.items():
            out[deg] = c
        return out

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.dense()):
            acc = acc * t + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.coefficients.items()))

    def __mul__(self, other: RatPolynomial) -> RatPolynomial:
        out: dict[int, Fraction] = {}
        for a, ca in self.coefficients.items():
            for b, cb in other.coefficients.items():
                out[a + b] = out.get(a + b, 0) + ca * cb
        return RatPolynomial(out)

    def __repr__(self) -> str:
        if not self.coefficients:
            return "RatPolynomial(0)"
        terms = []
        for deg, c in self.coefficients.items():
            mono = "" if deg == 0 else ("t" if deg == 1 else f"t^{deg}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return "RatPolynomial(" + " + ".join(terms).replace("+ -", "- ") + ")"


def alternating_numerator(d: BettiDiagram) -> RatPolynomial:
    """``K(t) = sum_{p,q} (-1)^p b_{p,q} t^{p+q}``."""
    if d.is_empty():
        raise ValueError("the empty diagram has no Hilbert numerator")
    coeffs: dict[int, Fraction] = {}
    for (p, q), b in d.items():
        deg = p + q
        if deg < 0:
            raise ValueError(f"entry ({p}, {q}) lies in negative degree {deg}")
        coeffs[deg] = coeffs.get(deg, 0) + (-b if p % 2 else b)
    return RatPolynomial(coeffs)


def divide_exact(poly: RatPolynomial, c: int) -> RatPolynomial:
    """Divide by ``(1 - t)^c``, failing on any nonzero remainder.

    Each step is synthetic division by ``t - 1``; the remainder of that step is
    the value at ``t = 1``.
    """
    if c < 0:
        raise ValueError(f"exponent must be nonnegative, got {c}")
    coeffs = poly.dense()
    for step in range(c):
        if not coeffs:
            return RatPolynomial()
        # Horner from the top: q_{j-1} = a_j + q_j, remainder = a_0 + q_0.
        quotient = [Fraction(0)] * (len(coeffs) - 1)
        acc = Fraction(0)
        for j in range(len(coeffs) - 1, 0, -1):
            acc += coeffs[j]
            quotient[j - 1] = acc
        remainder = acc + coeffs[0]
        if remainder:
            raise NotDivisible(
                f"not divisible by (1-t)^{c}: remainder {remainder} after {step} step(s)",
                RatPolynomial(coeffs),
            )
        # p = (t - 1) * quotient, so p / (1 - t) = -quotient
        coeffs = [-x for x in quotient]
    return RatPolynomial(coeffs)


def hilbert_numerator(d: BettiDiagram, codim: int | None = None) -> RatPolynomial:
    """Reduced Hilbert numerator: ``K(t) / (1-t)^codim`` (codim defaults to pdim)."""
    if codim is None:
        codim = d.projective_dimension()
    return divide_exact(alternating_numerator(d), codim)


def multiplicity(d: BettiDiagram) -> Fraction:
    return hilbert_numerator(d)(1)
