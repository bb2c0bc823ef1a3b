"""Exit criteria. Each test prints one PASS/FAIL line and asserts exactly."""

import dataclasses
import random
import subprocess
import sys
import time

import pytest

from qmex import special, verify
from qmex.combinatorics import (
    Overpartition,
    StatKind,
    count_restricted,
    enumerate_overpartitions,
    f_signed_count,
    omex,
    omoex,
    sigma_omex,
    sigma_omoex_index,
    tilde_omex,
    tilde_omoex,
)
from qmex.series import Series

ENUM_BOUND = 25
SERIES_ORDER = 200


@pytest.fixture
def report(capsys):
    def _report(number, text, failures):
        status = "PASS" if not failures else "FAIL"
        with capsys.disabled():
            print(f"\n[{status}] criterion {number}: {text}")
            for f in failures[:10]:
                print(f"    {f}")
        assert not failures
    return _report


def test_criterion_1_point_values(report):
    start = time.perf_counter()
    P = Overpartition.parse
    failures = []
    listed = [str(p) for p in enumerate_overpartitions(3)]
    if listed != ["3", "3~", "2+1", "2~+1", "2+1~", "2~+1~", "1+1+1", "1~+1+1"]:
        failures.append(f"overpartitions of 3: {listed}")
    counts = {k: count_restricted(3, k) for k in StatKind}
    expected = {StatKind.OMEX: 4, StatKind.OMOEX: 3, StatKind.TILDE_OMEX: 3, StatKind.TILDE_OMOEX: 1}
    if counts != expected:
        failures.append(f"restricted counts at 3: {counts}")
    # pi_3 is taken with a single overlined 7: only the first occurrence may carry the overline
    examples = [
        (omex, "5~+4~+4+2+1", 3), (omex, "10~+8+5+3~+2+1~", 4),
        (omoex, "7~+7+3+1", 5), (omoex, "7~+7+5~+3+1", 9),
        (tilde_omex, "5~+3~+2+1", 1), (tilde_omex, "7~+7+5~+3+2~+1~", 3),
        (tilde_omoex, "5~+3~+3+1~", 7), (tilde_omoex, "11+7~+5~+3~+3+1~", 9),
    ]
    for fn, text, want in examples:
        got = fn(P(text))
        if got != want:
            failures.append(f"{fn.__name__}({text}) = {got}, expected {want}")
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        failures.append(f"runtime {elapsed:.3f}s >= 1s")
    report(1, f"reference point values at n = 3 and pi_1..pi_8 ({elapsed:.3f}s)", failures)


_COUNT_KIND = {1: StatKind.OMEX, 2: StatKind.OMOEX, 3: StatKind.TILDE_OMEX, 4: StatKind.TILDE_OMOEX}


def test_criterion_2_theorems_counts(report):
    start = time.perf_counter()
    failures = []
    for k, kind in _COUNT_KIND.items():
        rhs = special.build(f"thm{k}.rhs", SERIES_ORDER)
        for n in range(ENUM_BOUND + 1):
            if count_restricted(n, kind) != rhs[n]:
                failures.append(f"thm{k} n={n}: enum {count_restricted(n, kind)} vs {rhs[n]}")
        for side in ("product", "sum"):
            if special.build(f"thm{k}.{side}", SERIES_ORDER) != rhs:
                failures.append(f"thm{k}.{side} differs from thm{k}.rhs at order {SERIES_ORDER}")
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.1f}s >= 60s")
    report(2, f"counting theorems: enumeration n <= {ENUM_BOUND}, series to order "
              f"{SERIES_ORDER} ({elapsed:.1f}s)", failures)


def test_criterion_3_sigma_theorems(report):
    failures = []
    r5 = special.build("thm5.rhs", ENUM_BOUND)
    r6 = special.build("thm6.rhs", ENUM_BOUND)
    for n in range(ENUM_BOUND + 1):
        if sigma_omex(n) != r5[n]:
            failures.append(f"sigma omex({n}) = {sigma_omex(n)} vs {r5[n]}")
        if sigma_omoex_index(n) != r6[n]:
            failures.append(f"sigma omoex index({n}) = {sigma_omoex_index(n)} vs {r6[n]}")
    if sigma_omex(3) != 7 or sigma_omoex_index(3) != 4:
        failures.append("hand anchors sigma omex(3) = 7, sigma omoex-index(3) = 4")
    report(3, f"sigma theorems for n <= {ENUM_BOUND}", failures)


def test_criterion_4_representations(report):
    failures = []
    r1 = special.build("R.rep1", 500)
    for rid in ("R.rep2", "R.rep3"):
        if special.build(rid, 500) != r1:
            failures.append(f"{rid} differs from R.rep1 at order 500")
    for n in range(51):
        if special.build(f"H.qharm.{n}", 200) != special.build(f"H.qharm.AU.{n}", 200):
            failures.append(f"finite harmonic identity fails at n={n}")
    lam = special.build("divisor.lambert", 300)
    if lam != special.build("divisor.signed", 300):
        failures.append("divisor series disagree at order 300")
    for n in range(1, 301):
        d = sum(1 for k in range(1, n + 1) if n % k == 0)
        if lam[n] != d:
            failures.append(f"d({n}) = {d} vs coefficient {lam[n]}")
    report(4, "R(q) representations (500), finite harmonic n <= 50 (200), divisor series (300)",
           failures)


def test_criterion_5_toolkit(report):
    failures = []
    prefixes = {"gasrah.": 200, "gupta.": 150, "qbinom.": 200, "heine.": 200}
    names = [c.name for c in verify.registry()]
    for prefix, order in prefixes.items():
        for name in (n for n in names if n.startswith(prefix)):
            r = verify.verify_case(name, order)
            if not r.passed or r.compared_order != order:
                failures.append(f"{name}: {r.status} at {r.compared_order}")
    for name in ("gupta.c=-1,t=q", "gupta.c=q,t=q", "gupta.c=-q,t=q^2"):
        if name not in names:
            failures.append(f"missing {name}")
    for name in ("A_vs_R", "B_lhs_vs_B_rhs", "C_lhs_vs_C_rhs", "D_lhs_vs_D_rhs"):
        r = verify.verify_case(name, 200)
        if not r.passed or r.compared_order != 200:
            failures.append(f"{name}: {r.status}")
    report(5, "toolkit identities and derivative endpoints", failures)


def test_criterion_6_f_signed(report):
    F = special.build("F", 30)
    failures = [f"n={n}: {f_signed_count(n)} vs {F[n]}"
                for n in range(1, 31) if f_signed_count(n) != F[n]]
    report(6, "signed gap-free odd partition counts equal F(q) for 1 <= n <= 30", failures)


def test_criterion_7_properties(report):
    failures = []
    rng = random.Random(20241016)
    for i in range(1000):
        n = rng.randint(0, 32)
        a, b, c = (Series(rng.randint(-10**20, 10**20) for _ in range(n + 1)) for _ in range(3))
        zero, one = Series.zero(n), Series.one(n)
        ring_ok = (a + b == b + a and a * b == b * a and (a + b) + c == a + (b + c)
                   and (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c
                   and a + zero == a and a * one == a)
        u = Series((rng.choice((1, -1)),) + a.coeffs[1:])
        if not ring_ok or u * u.invert() != one:
            failures.append(f"random case {i} (order {n})")
    case = verify.get_case("thm2.product")
    for k in range(0, 101, 7):
        bad = dataclasses.replace(case, rhs=lambda o, k=k: case.rhs(o) - Series.monomial(1, k, o))
        r = verify.check_case(bad, 100)
        if r.passed or r.first_mismatch.exponent != k:
            failures.append(f"perturbation at q^{k} not detected")
    for argv in (["expand", "thm6.rhs", "--order", "80"],
                 ["table", "--max-n", "8", "--format", "csv"],
                 ["verify", "all", "--order", "30", "--enum-bound", "10", "--no-timing"]):
        cmd = [sys.executable, "-m", "qmex", *argv]
        outs = [subprocess.run(cmd, capture_output=True).stdout for _ in range(2)]
        if outs[0] != outs[1] or not outs[0]:
            failures.append(f"non-deterministic output for {' '.join(argv)}")
    report(7, "ring axioms + inverse (1000 random), negative control, byte-identical CLI", failures)


def test_full_verify_all(report):
    reports = verify.verify_all(SERIES_ORDER, ENUM_BOUND)
    failures = [f"{r.name}: first mismatch {r.first_mismatch}" for r in reports if not r.passed]
    report("all", f"verify_all({SERIES_ORDER}, {ENUM_BOUND}) over {len(reports)} cases", failures)
