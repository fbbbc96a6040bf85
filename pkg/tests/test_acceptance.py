"""Exit criteria for the package, one test per criterion.

Every comparison is exact (zero tolerance).  Each test prints a single
``ACCEPTANCE <n>: PASS|FAIL`` line to the terminal.  The closed forms below
are written out independently of ``secantbetti.secant``.
"""

import random
import time
from fractions import Fraction as F
from math import comb, factorial, prod

import pytest

from secantbetti.decompose import greedy_decompose, recompose
from secantbetti.diagram import BettiDiagram, pure_diagram
from secantbetti.hilbert import alternating_numerator, divide_exact, multiplicity
from secantbetti.monomial import hochster_betti, parse_ideal
from secantbetti.secant import SecantParams, assemble_betti

import oracles

SECANT_GRID = [(k, r) for k in range(1, 7) for r in range(2 * k + 3, 2 * k + 16)]
CURVE_GRID = list(range(3, 21))


@pytest.fixture
def announce(capsys):
    def emit(number, title, failures, elapsed=None, budget=None):
        timing = ""
        if elapsed is not None:
            timing = f" [{elapsed:.3f}s"
            timing += f" / limit {budget}s]" if budget else "]"
            if budget and elapsed >= budget:
                failures = list(failures) + [f"runtime {elapsed:.3f}s >= {budget}s"]
        status = "PASS" if not failures else "FAIL"
        with capsys.disabled():
            print(f"\nACCEPTANCE {number}: {status} - {title}{timing}")
            for f in failures[:10]:
                print(f"    {f}")
        assert not failures, failures

    return emit


def degree_binomial(k, r):
    return comb(r - k, k + 1) + 2 * comb(r - k - 1, k) + comb(r - k - 2, k - 1)


def degree_product(k, r):
    return F((r * r + r - 2 * k - 2) * prod(range(r - 2 * k, r - k - 1)), factorial(k + 1))


def strand_closed_form(i, k, r):
    num = factorial(r - k - 2) * (r**3 - (i + k + 1) * r**2 - (i + k + 2) * r + 2 * (k + 1) * (i + k + 1))
    den = (factorial(k + 1) * (i + k + 1) * factorial(i - 1) * factorial(r - i - 2 * k - 3)
           * (r - i - k - 2) * (r - i - k - 1) * (r - i - k))
    return F(num, den)


def curve_closed_form(i, r):
    return F(factorial(r - 1) * (r * r - i * r - 2 * i - 2), (i + 1) * factorial(i - 1) * factorial(r - i))


def sequence_for(i, k, r):
    removed = set(range(1, k + 2)) | {r + 1 - (ij + j) for j, ij in enumerate(i)}
    return tuple(sorted(set(range(r + 2)) - removed))


def test_criterion_1_pure_multiplicity(announce):
    rng = random.Random(20261019)
    sequences = []
    for _ in range(500):
        n = rng.randint(1, 12)
        sequences.append((0, *sorted(rng.sample(range(1, 41), n))))
    start = time.perf_counter()
    failures = [e for e in sequences if multiplicity(pure_diagram(e)) != 1]
    elapsed = time.perf_counter() - start
    announce(1, "multiplicity of 500 random pure diagrams is exactly 1", failures, elapsed, 5)


def test_criterion_2_secant_sweep(announce):
    failures = []
    start = time.perf_counter()
    diagrams = {(k, r): assemble_betti(SecantParams(k, r)) for k, r in SECANT_GRID}
    mults = {key: multiplicity(d) for key, d in diagrams.items()}
    elapsed = time.perf_counter() - start
    for (k, r), d in diagrams.items():
        where = f"k={k} r={r}"
        if not (d.is_integral() and d.is_nonnegative()):
            failures.append(f"{where}: non-integral or negative entries")
        anchors = {
            (r - 2 * k - 1, 2 * k + 2): k + 2,
            (r - 2 * k - 2, 2 * k + 2): r - 2 * k - 1,
            (r - 2 * k - 2, 2 * k + 1): r - k - 2,
            (r - 2 * k - 1, 2 * k + 1): 0,
        }
        for key, value in anchors.items():
            if d[key] != value:
                failures.append(f"{where}: b{key} = {d[key]}, expected {value}")
        strand = d.row(k + 1)
        if sorted(strand) != list(range(1, r - 2 * k - 2)):
            failures.append(f"{where}: row {k + 1} support {sorted(strand)}")
        for i in range(1, r - 2 * k - 2):
            if strand.get(i) != strand_closed_form(i, k, r):
                failures.append(f"{where}: b({i},{k + 1}) = {strand.get(i)}")
        if not (mults[(k, r)] == degree_binomial(k, r) == degree_product(k, r)):
            failures.append(f"{where}: multiplicity {mults[(k, r)]} vs degree {degree_binomial(k, r)}")
    announce(2, f"secant diagrams on {len(SECANT_GRID)} grid points (1<=k<=6, 2k+3<=r<=2k+15)",
             failures, elapsed, 10)


def test_criterion_3_curve_sweep(announce):
    failures = []
    start = time.perf_counter()
    diagrams = {r: assemble_betti(SecantParams(0, r)) for r in CURVE_GRID}
    mults = {r: multiplicity(d) for r, d in diagrams.items()}
    elapsed = time.perf_counter() - start
    for r, d in diagrams.items():
        expected = {(0, 0): 1, (r - 1, 2): 2, (r - 2, 2): r - 1}
        expected.update({(i, 1): curve_closed_form(i, r) for i in range(1, r - 1)})
        if d != BettiDiagram(expected):
            failures.append(f"r={r}: {d}")
        if d[(r - 2, 1)] != r - 2:
            failures.append(f"r={r}: b(r-2,1) = {d[(r - 2, 1)]}")
        if mults[r] != r + 2:
            failures.append(f"r={r}: multiplicity {mults[r]}")
    announce(3, "curve diagrams for 3<=r<=20", failures, elapsed, 2)


def test_criterion_4_decomposition_recovery(announce):
    failures = []
    for k, r in SECANT_GRID:
        deg = degree_binomial(k, r)
        c_top = F(r * r - 2 * k * r - r, r * r + r - 2 * k - 2)
        c_next = 1 - c_top
        expected = [(deg * c_next, sequence_for((1,) + (2,) * k, k, r)),
                    (deg * c_top, sequence_for((2,) * (k + 1), k, r))]
        dec = greedy_decompose(assemble_betti(SecantParams(k, r)))
        got = [(c, tuple(e)) for c, e in dec]
        if got != expected:
            failures.append(f"k={k} r={r}: {got}")
        normalized = [c / deg for c, _ in got]
        if sum(normalized) != 1 or not all(0 <= c <= 1 for c in normalized):
            failures.append(f"k={k} r={r}: normalized coefficients {normalized}")
    announce(4, "greedy decomposition recovers the two pure contributors", failures)


def test_criterion_5_worked_instance(announce):
    failures = []
    # independent evaluation with sympy rationals
    expected = oracles.secant_diagram(1, 7)
    expected = BettiDiagram({key: F(int(v.p), int(v.q)) for key, v in expected.items()})
    frozen = BettiDiagram({(0, 0): 1, (1, 2): 12, (2, 2): 16, (3, 3): 4, (3, 4): 4, (4, 4): 3})
    d = assemble_betti(SecantParams(1, 7))
    if not (d == expected == frozen):
        failures.append(f"diagram {d}")
    if not (multiplicity(d) == oracles.secant_degree(1, 7) == 26):
        failures.append(f"degree {multiplicity(d)}")
    dec = greedy_decompose(d).normalized()
    if dec.coefficients != [F(6, 13), F(7, 13)]:
        failures.append(f"coefficients {dec.coefficients}")
    if [tuple(e) for e in dec.sequences] != [(0, 3, 4, 6, 8), (0, 3, 4, 7, 8)]:
        failures.append(f"sequences {dec.sequences}")
    announce(5, "worked instance k=1, r=7", failures)


@pytest.mark.parametrize(
    "ideal, nvars, expected",
    [
        ("x0*x2, x1*x3", 4, {(0, 0): 1, (1, 1): 2, (2, 2): 1}),
        ("x0*x1, x1*x2, x0*x2", 3, {(0, 0): 1, (1, 1): 3, (2, 1): 2}),
    ],
)
def test_criterion_6_oracle_agreement(announce, ideal, nvars, expected):
    failures = []
    parsed = parse_ideal(ideal, nvars)
    d = hochster_betti(parsed)
    brute = BettiDiagram(oracles.upper_koszul_betti(parsed.generators, nvars))
    if not (d == brute == BettiDiagram(expected)):
        failures.append(f"hochster {d}, oracle {brute}")
    dec = greedy_decompose(d)
    if not all(c > 0 for c in dec.coefficients) or recompose(dec) != d:
        failures.append(f"decomposition {dec}")
    announce(6, f"Hochster diagram of ({ideal}) in {nvars} variables", failures)


def test_criterion_7_hilbert_consistency(announce):
    failures = []
    cases = [((k, r), degree_binomial(k, r)) for k, r in SECANT_GRID]
    cases += [((0, r), r + 2) for r in CURVE_GRID]
    for (k, r), degree in cases:
        d = assemble_betti(SecantParams(k, r))
        quotient = divide_exact(alternating_numerator(d), d.projective_dimension())
        if quotient(1) != degree:
            failures.append(f"k={k} r={r}: HN(1) = {quotient(1)}, degree {degree}")
    announce(7, f"Hilbert numerators divisible by (1-t)^pdim on {len(cases)} diagrams", failures)


def test_criterion_8_top_row_range(announce):
    failures = []
    for k, r in SECANT_GRID:
        support = sorted(assemble_betti(SecantParams(k, r)).row(2 * k + 2))
        if support != list(range(r - 2 - 2 * k, r - 2 * k)):
            failures.append(f"k={k} r={r}: row {2 * k + 2} support {support}")
    announce(8, "row 2k+2 support equals [r-2-2k, r-1-2k] at g=2", failures)
