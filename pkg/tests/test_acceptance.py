"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line."""
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from qcong.congruence import verify_crt_relations
from qcong.exact import ONE, QPoly, cyclotomic, divisors, eval_rat
from qcong.padic import gamma_p, lhs_padic, pochhammer, sum_classical, vp
from qcong.qseries import sum_A, sum_B
from qcong.suite import MUTATIONS, MutationSurvived, mutation_test, run


def report(num: int, title: str, ok: bool, detail: str) -> None:
    line = f"[criterion {num:2d}] {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def run_all(jobs, **kw):
    verdicts = [run(c, inst, **kw) for c, inst in jobs]
    bad = [v.describe() for v in verdicts if v.status != "pass"]
    return verdicts, bad


def test_criterion_01_thm1():
    t0 = time.perf_counter()
    _, bad = run_all([("thm1", {"n": n}) for n in (3, 7, 11, 15, 19)])
    dt = time.perf_counter() - t0
    report(1, "thm1 n in {3,7,11,15,19}", not bad and dt < 60, f"failures={bad}, {dt:.1f}s (< 60s)")


def test_criterion_02_thm2():
    vs, bad = run_all([("thm2", {"n": n}) for n in (5, 9, 13, 17)])
    both = all(len(v.subchecks) == 2 for v in vs)
    report(2, "thm2 n in {5,9,13,17}, both M", not bad and both, f"failures={bad}")


def test_criterion_03_thm3():
    _, bad = run_all([("thm3", {"n": n}) for n in (3, 7, 11, 15)])
    report(3, "thm3 n in {3,7,11,15}", not bad, f"failures={bad}")


def test_criterion_04_thm4():
    vs, bad = run_all([("thm4", {"n": n}) for n in (5, 9, 13)])
    both = all(len(v.subchecks) == 2 for v in vs)
    report(4, "thm4 n in {5,9,13}, both M", not bad and both, f"failures={bad}")


def test_criterion_05_lemmas():
    jobs = [(c, {"n": n}) for c in ("lemma1", "lemma2") for n in (3, 5, 7, 9, 15)]
    vs, bad = run_all(jobs, specializations=5)
    # n = 3 has (n-1)/2 != n-1, so each run has 5 specializations x 2 truncations
    full = all(len(v.subchecks) == 10 for v in vs)
    report(5, "lemmas 1-2, odd n in {3,5,7,9,15}, 5 specializations, both M", not bad and full,
           f"failures={bad}, checks={sum(len(v.subchecks) for v in vs)}")


def _pairs(verdict):
    out = set()
    for s in verdict.subchecks:
        a, b, _ = (part.split("=")[1] for part in s.name.split(", "))
        out.add((Fraction(a), Fraction(b)))
    return sorted(out)


def test_criterion_06_parametric():
    jobs = [(c, {"n": n}) for c in ("thm5", "thm7") for n in (3, 7, 11)]
    jobs += [(c, {"n": n}) for c in ("thm6", "thm8") for n in (1, 5, 9, 13)]
    vs, bad = run_all(jobs, specializations=5)
    crt_bad = []
    counts_ok = True
    for v in vs:
        pairs = _pairs(v)
        counts_ok &= len(pairs) == 5
        n = v.instance["n"]
        crt_bad += [(v.claim, n, a, b) for a, b in pairs if not verify_crt_relations(n, a, b)]
    report(6, "thm5-8 admissible n <= 13, 5 specializations, CRT relations",
           not bad and not crt_bad and counts_ok,
           f"failures={bad}, crt failures={crt_bad}, instances={len(vs)}")


def test_criterion_07_gasper_rahman():
    t0 = time.perf_counter()
    vs, bad = run_all([("gr", {"order": 40}), ("gr_a", {"order": 40})], specializations=3)
    dt = time.perf_counter() - t0
    enough = all(len(v.subchecks) >= 3 for v in vs)
    report(7, "both summations through q^40 at >= 3 specializations", not bad and enough and dt < 30,
           f"failures={bad}, {dt:.1f}s (< 30s)")


def test_criterion_08_cor1():
    cases = [(3, 1), (7, 1), (11, 1), (19, 1), (3, 3)]
    vals = {(p, r): vp(lhs_padic("cor1", p, r).value, p) for p, r in cases}
    ok = all(vals[p, r] >= r + 3 for p, r in cases) and vals[3, 1] == 5
    _, bad = run_all([("cor1", {"p": p, "r": r}) for p, r in cases])
    report(8, "cor1 valuations", ok and not bad, f"v_p = {vals}, v_3 at (3,1) = {vals[3, 1]}")


def test_criterion_09_cor2():
    _, bad = run_all([("cor2", {"p": p, "r": r}) for p, r in [(5, 1), (13, 1), (17, 1), (3, 2)]])
    report(9, "cor2 mod p^(r+3)", not bad, f"failures={bad}")


def test_criterion_10_cor3_cor4():
    jobs = [("cor3", {"p": p, "r": 1}) for p in (3, 7, 11)]
    jobs += [("cor4", {"p": p, "r": r}) for p, r in [(5, 1), (13, 1), (3, 2)]]
    _, bad = run_all(jobs)
    report(10, "cor3 and cor4 mod p^(r+4)", not bad, f"failures={bad}")


def test_criterion_11_background():
    jobs = [("vanhamme", {"p": p, "r": 1}) for p in (5, 7, 11, 13)]
    jobs += [("swisher", {"p": p, "r": 1}) for p in (13, 17)]
    jobs += [("liu_p4", {"p": p, "r": 1}) for p in (7, 11)]
    jobs += [(c, {"p": p, "r": 1}) for c in ("he3", "he4", "he3_liu", "he4_liu") for p in (5, 7, 11, 13)]
    jobs += [("guo_wy", {"n": n}) for n in (3, 5, 7, 9, 11, 13)]
    vs, bad = run_all(jobs)
    report(11, "background congruences", not bad, f"failures={bad}, instances={len(vs)}")


def test_criterion_12_properties():
    failures = []
    for n in range(1, 51):
        prod = ONE
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        if prod != QPoly.monomial(1, n) - 1:
            failures.append(f"cyclotomic product n={n}")
    for p in (3, 5, 7):
        for e in (1, 2, 3):
            P = p ** e
            for k in range(1, P):
                g, g1 = gamma_p(k, p, e).value, gamma_p(k + 1, p, e).value
                if (g1 - (-k * g if k % p else -g)) % P:
                    failures.append(f"gamma recurrence p={p} e={e} n={k}")
    rng = random.Random(12)
    for _ in range(200):
        x = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
        m, n = rng.randint(0, 10), rng.randint(0, 10)
        if pochhammer(x, m + n) != pochhammer(x, m) * pochhammer(x + m, n):
            failures.append(f"pochhammer splitting x={x} m={m} n={n}")
    for n in (1, 3, 5, 7, 9):
        if eval_rat(sum_A(n, n - 1), 1) != sum_classical("F1", n - 1).value:
            failures.append(f"q->1 sum_A n={n}")
        if eval_rat(sum_B(n, n - 1), 1) != sum_classical("F2", n - 1).value:
            failures.append(f"q->1 sum_B n={n}")
    for claim in sorted(MUTATIONS):
        try:
            mutation_test(claim)
        except MutationSurvived as exc:
            failures.append(str(exc))
    report(12, "property suites and mutation tests", not failures,
           f"failures={failures}, mutations={len(MUTATIONS)}")


def test_criterion_13_full_scan(tmp_path):
    out = tmp_path / "scan.json"
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "qcong", "scan", "--n-max", "19", "--primes", "3,5,7,11,13",
         "--r-max", "2", "--json", str(out)],
        capture_output=True, text=True, env={k: v for k, v in os.environ.items() if not k.startswith("QCONG_")},
    )
    dt = time.perf_counter() - t0
    summary = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr
    report(13, "full default scan", proc.returncode == 0 and dt < 600,
           f"exit {proc.returncode}, {dt:.1f}s (< 600s), {summary}")
