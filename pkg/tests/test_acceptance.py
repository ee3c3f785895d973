"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Tolerances are exact everywhere (integer counts, ideal equality, exact
rational comparison). Run with ``pytest tests/test_acceptance.py -v`` and
look for the lines starting with ``[acceptance]``.
"""
import itertools
import time
from fractions import Fraction

import pytest

from srfrob.cartier import (
    RingElement,
    cartier_generators,
    check_gauge_bound,
    f_split_check,
    normal_monomials,
    psi_eval,
)
from srfrob.census import build_Ikn, build_Jkn, census, census_entries, embed, enumerate_ideals
from srfrob.cli import run
from srfrob.diffops import DiffOp, apply, compose, in_DR, non_image_witness, operators_equal, phi_image
from srfrob.frobenius import classify, colon_formula, disjoint_ideal, katzman_L, mu, mu_disjoint, verify_infinitely_generated
from srfrob.monomial import colon, contains, frobenius_power, instantiate, intersect
from srfrob.simplicial import Decomposition, hochster_piece, primary_decomposition
from srfrob.syntax import parse_ideal, parse_symbolic_ideal

TABLES = {
    3: [(1, 1, 0), (2, 1, 0), (1, 1, 0)],
    4: [(1, 1, 0), (4, 2, 3), (3, 1, 0), (1, 1, 0)],
    5: [(1, 1, 0), (6, 2, 13), (12, 2, 10), (4, 1, 0), (1, 1, 0)],
}


@pytest.fixture
def verdict(capsys):
    def report(k, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance] criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail

    return report


def _population(max_n, covering=True):
    for n in range(1, max_n + 1):
        for h in range(1, n + 1):
            for fam in enumerate_ideals(n, h, True, covering):
                yield Decomposition(n, fam).ideal()


def test_criterion_1_census(verdict):
    start = time.perf_counter()
    mismatches = []
    for n, expected in TABLES.items():
        code, out = run(["census", "-n", str(n), "-p", "2", "--format", "csv"])
        assert code == 0
        got = [tuple(int(v) for v in line.split(",")[2:]) for line in out.splitlines()[1:]]
        for h, (g, want) in enumerate(zip(got, expected), start=1):
            if g != want:
                mismatches.append(f"n={n} ht{h} got {g} want {want}")
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60
    verdict(1, ok, f"{elapsed:.1f}s; " + ("all rows match" if not mismatches else "; ".join(mismatches)))


def test_criterion_2_formula_vs_oracle(verdict):
    start = time.perf_counter()
    bad, count = [], 0
    for I in _population(5, covering=False):
        for p, e in ((2, 1), (2, 2), (3, 1)):
            q = p**e
            count += 1
            if instantiate(colon_formula(I).symbolic, q) != colon(frobenius_power(I, q), I):
                bad.append((I, q))
    elapsed = time.perf_counter() - start
    verdict(2, not bad and elapsed < 300, f"{count} comparisons, {len(bad)} mismatches, {elapsed:.1f}s")


def test_criterion_3_katzman(verdict):
    I = parse_ideal("x1*x2, x1*x3")
    found = dict(verify_infinitely_generated(I, 2, 3))
    L1_zero = katzman_L(I, 2, 1).is_zero()
    outside = all(not contains(katzman_L(I, 2, e), w) for e, w in found.items())
    code, out = run(["katzman", "--ideal", "x1*x2, x1*x3", "-p", "2", "--emax", "3"])
    ok = set(found) == {1, 2, 3} and outside and L1_zero and tuple(found[2]) == (3, 4, 0) and code == 0
    verdict(3, ok, f"witnesses {[tuple(found[e]) for e in sorted(found)]}, L_1 = 0: {L1_zero}")


def test_criterion_4_worked_colons(verdict):
    # x=x1, y=x2, z=x3, w=x4; the run-together "y^qz^qy^qw^q" read as two generators
    cases = [
        (
            "x1*x3, x1*x4, x2*x3, x2*x4",
            "x1^q*x3^q, x1^q*x4^q, x2^q*x3^q, x2^q*x4^q, x1^(q-1)*x2^(q-1)*x3^q, x1^q*x3^(q-1)*x4^(q-1),"
            "x2^q*x3^(q-1)*x4^(q-1), x1^(q-1)*x2^(q-1)*x4^q, x1^(q-1)*x2^(q-1)*x3^(q-1)*x4^(q-1)",
            4,
        ),
        (
            "x1*x2, x1*x3, x2*x4",
            "x1^q*x2^q, x1^q*x3^q, x2^q*x4^q, x1^q*x2^(q-1)*x3^(q-1), x1^(q-1)*x2^q*x4^(q-1),"
            "x1^(q-1)*x2^(q-1)*x3^(q-1)*x4^(q-1)",
            2,
        ),
        (
            "x1*x2*x3, x1*x4, x2*x4",
            "x1^q*x2^q*x3^q, x1^q*x4^q, x2^q*x4^q, x1^(q-1)*x2^(q-1)*x4^q, x1^(q-1)*x2^(q-1)*x3^(q-1)*x4^(q-1)",
            1,
        ),
    ]
    results = []
    for text, display, want_mu in cases:
        I = parse_ideal(text, 4)
        same = colon_formula(I).symbolic == parse_symbolic_ideal(display, 4)
        results.append((same, mu(I), want_mu))
    ok = all(s and m == w for s, m, w in results)
    verdict(4, ok, "; ".join(f"display {'matches' if s else 'differs'}, mu={m} (want {w})" for s, m, w in results))


def test_criterion_5_mu_disjoint(verdict):
    start = time.perf_counter()
    bad, count = [], 0
    for s in (1, 2, 3):
        for heights in itertools.combinations_with_replacement((1, 2, 3), s):
            count += 1
            got = mu(disjoint_ideal(list(heights)))
            want = mu_disjoint(list(heights))
            if got != want:
                bad.append(f"{list(heights)}: counted {got}, formula {want}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    verdict(5, ok, f"{count} height tuples, {elapsed:.1f}s; " + ("all agree" if not bad else "mismatches " + ", ".join(bad)))


def test_criterion_6_sweeps(verdict):
    failures = []
    for n in range(2, 6):
        for fam in enumerate_ideals(n, n - 1, pure=True, covering=False):
            if not classify(Decomposition(n, fam).ideal(), 2).finitely_generated:
                failures.append(f"pure height {n - 1} in {n} vars: {fam}")
    for n in range(1, 7):
        for k in range(1, n + 1):
            if not classify(build_Ikn(k, n), 2).finitely_generated:
                failures.append(f"I_{{{k},{n}}} not p.g.")
            if k < n and build_Ikn(k, n) != intersect(embed(build_Ikn(k, n - 1), n), build_Jkn(k, n)):
                failures.append(f"I_{{{k},{n}}} != I_{{{k},{n - 1}}} ∩ J_{{{k},{n}}}")
    verdict(6, not failures, "all principal, decomposition identity holds" if not failures else "; ".join(failures))


def test_criterion_7_gauge_bound(verdict):
    ideals = list(_population(4))
    start = time.perf_counter()
    per = {}
    worst = {}
    for p in (2, 3):
        for e in (1, 2):
            v = c = 0
            for I in ideals:
                rep = check_gauge_bound(I, p, e, constant=Fraction(1, p**e * (p - 1)))
                v += rep.violation_count
                c += rep.checked
                if rep.violations and (p, e) not in worst:
                    g, r, lhs, rhs = rep.violations[0]
                    worst[(p, e)] = f"{I!r} gamma {g} r {r}: {lhs} > {rhs}"
            per[(p, e)] = (v, c)
    elapsed = time.perf_counter() - start
    total = sum(v for v, _ in per.values())
    parts = [f"p={p} e={e}: {v} violations / {c}" for (p, e), (v, c) in per.items()]
    if worst:
        parts.append("first: " + next(iter(worst.values())))
    verdict(7, total == 0 and elapsed < 300, f"{elapsed:.1f}s; " + "; ".join(parts))


def test_criterion_8_f_split(verdict):
    bad, count = [], 0
    for I in _population(5):
        for p in (2, 3):
            count += 1
            if not f_split_check(I, p):
                bad.append((I, p))
    verdict(8, not bad, f"{count} checks, {len(bad)} failures")


def test_criterion_9_differential_pairing(verdict):
    I = parse_ideal("x1*x2, x2*x3")  # (y) ∩ (x, z)
    D = primary_decomposition(I)
    p, e, q = 2, 1, 2
    d = DiffOp.derivative(3, p, e, (q - 1,) * 3)
    mult = lambda b: DiffOp.multiplication(3, p, e, b)  # noqa: E731
    displayed = {
        (q - 1, q - 1, q - 1): compose(d, mult((q - 1, q - 1, q - 1))),
        (q, q - 1, 0): compose(mult((q, 0, 0)), compose(d, mult((0, q - 1, 0)))),
        (0, q - 1, q): compose(mult((0, 0, q)), compose(d, mult((0, q - 1, 0)))),
    }
    gens = {tuple(g.exponent(p)): g for g in cartier_generators(I, p, e)}
    a = set(gens) == set(displayed) and all(
        operators_equal(phi_image(gens[k], p), displayed[k], I, p, e) for k in displayed
    )
    b = all(in_DR(beta, alpha, D) for g in gens.values() for beta, alpha in phi_image(g, p).terms)
    c = all(
        apply(phi_image(g, p), RingElement.monomial(I, p, m)) == psi_eval(g, p, RingElement.monomial(I, p, m)).frobenius(q)
        for g in gens.values()
        for m in normal_monomials(I, 4)
    )
    w = non_image_witness(I, p, e)
    dd = w is not None and w.beta == (1, 0, 0) and w.alpha == (1, 0, 0) and w.distinct
    verdict(9, a and b and c and dd, f"(a) {a} (b) {b} (c) {c} (d) {dd}")


def test_criterion_10_homology(verdict):
    checks = [
        ("x1*x2, x1*x3, x2*x3", 0b111, 2),
        ("x1*x2*x3, x1*x4, x2*x4", 0b1011, 2),  # alpha = (1,1,0,1)
        ("x1*x2, x1*x3, x2*x4", 0b1110, 0),  # alpha = (0,1,1,1)
        ("x1*x2, x1*x3, x2*x4", 0b1111, 0),
        ("x1*x2*x3, x1*x4, x2*x4", 0b0111, 0),  # alpha = (1,1,1,0)
    ]
    got = [(hochster_piece(parse_ideal(t), a, 2), want) for t, a, want in checks]
    verdict(10, all(g == w for g, w in got), ", ".join(f"{g} (want {w})" for g, w in got))
