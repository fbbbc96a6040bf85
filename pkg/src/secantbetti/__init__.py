"""Exact Betti diagrams, Boij-Söderberg decompositions and the syzygies of
secant varieties of genus 2 curves."""

from .decompose import (
    Decomposition,
    NotInCone,
    OverlapError,
    enumerate_admissible,
    greedy_decompose,
    pi_k_sequence,
    recompose,
)
from .diagram import BettiDiagram, DegreeSequence, add, entry, pure_diagram, scale
from .hilbert import NotDivisible, RatPolynomial, alternating_numerator, divide_exact, multiplicity
from .monomial import (
    SimplicialComplex,
    SquarefreeIdeal,
    hochster_betti,
    parse_ideal,
    reduced_homology_ranks,
    stanley_reisner,
)
from .secant import (
    SecantParams,
    VerificationReport,
    anchor_values,
    assemble_betti,
    coefficient,
    secant_degree,
    strand_value,
    top_row_range,
    vanishing_predicates,
    verify,
)

__all__ = [
    "BettiDiagram", "DegreeSequence", "Decomposition", "NotDivisible", "NotInCone",
    "OverlapError", "RatPolynomial", "SecantParams", "SimplicialComplex", "SquarefreeIdeal",
    "VerificationReport", "add", "alternating_numerator", "anchor_values", "assemble_betti",
    "coefficient", "divide_exact", "entry", "enumerate_admissible", "greedy_decompose",
    "hochster_betti", "multiplicity", "parse_ideal", "pi_k_sequence", "pure_diagram",
    "recompose", "reduced_homology_ranks", "scale", "secant_degree", "stanley_reisner",
    "strand_value", "top_row_range", "vanishing_predicates", "verify",
]
