"""Claim catalog, per-instance verification, scans and mutation tests."""
from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from typing import Any, Callable, Optional

from . import __version__
from .congruence import (
    check_congruence, modulus_for, random_rational, sample_params, shares_parametric_factor,
    verify_crt_relations,
)
from .errors import DegenerateParameters, InapplicableError
from .exact import QRat, ZERO
from .padic import PADIC_CLAIMS, check_applicable, check_padic, rhs_padic, sum_classical
from .qseries import (
    QSummand, gr_a_sides, gr_sides, hyper_sum, rhs_closed, rhs_parametric, summand_A, summand_B,
    summand_C, summand_lemma1, summand_lemma2,
)

DEFAULT_SEED = 42
DEFAULT_SERIES_ORDER = 40
DEFAULT_SPECIALIZATIONS = 5


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str          # q-congruence | parametric-q-congruence | p-adic | series-identity
    params: str        # "n", "pr" or "order"
    anchor: str
    quote: str
    description: str


CATALOG: tuple[Claim, ...] = (
    Claim("thm1", "q-congruence", "n", "Theorem 1", "≡0 (mod [n]Φ_n(q)^3)",
          "sum_A(n, n-1) vanishes mod [n]Phi_n^3 for n = 3 (mod 4)"),
    Claim("thm2", "q-congruence", "n", "Theorem 2", "(mod [n]Φ_n(q)^3), M=(n-1)/2 or n-1",
          "sum_A(n, M) against a closed form with a q^{4j}/[4j]^2 tail, n = 1 (mod 4)"),
    Claim("thm3", "q-congruence", "n", "Theorem 3", "(mod [n]Φ_n(q)^4)",
          "sum_B(n, n-1) against [3n] q^{2n}(2-q^n)/(1+q^n)^2 times a squared ratio, n = 3 (mod 4)"),
    Claim("thm4", "q-congruence", "n", "Theorem 4", "(mod [n]Φ_n(q)^4), M=(n-1)/2 or n-1",
          "sum_B(n, M) against a closed form with an alternating q^{2j}/[2j]^2 tail, n = 1 (mod 4)"),
    Claim("guo_wy", "q-congruence", "n", "Guo-Wang-Yue q-analogue", "(mod [n]Φ_n(q)^2)",
          "alternating sum_C(n, M) against [n](q^2;q^4)^2/(q^4;q^4)^2 or 0"),
    Claim("lemma1", "parametric-q-congruence", "n", "Lemma 1", "≡0 (mod [n])",
          "two-parameter sum with q^{k^2+k} b^k vanishes mod [n], n odd"),
    Claim("lemma2", "parametric-q-congruence", "n", "Lemma 2", "≡0 (mod [n]), q^{2k}",
          "two-parameter sum with q^{2k} vanishes mod [n], n odd"),
    Claim("thm5", "parametric-q-congruence", "n", "Theorem 5",
          "modulo [n](1-aq^n)(a-q^n)(b-q^n), b^3",
          "lemma-1 sum with b -> b^3, n = 3 (mod 4)"),
    Claim("thm6", "parametric-q-congruence", "n", "Theorem 6",
          "modulo [n](1-aq^n)(a-q^n)(b-q^n), M=(n-1)/2 or n-1",
          "lemma-1 sum, n = 1 (mod 4)"),
    Claim("thm7", "parametric-q-congruence", "n", "Theorem 7",
          "modulo [n](1-aq^n)(a-q^n)(1-bq^n)(b-q^n), b^3",
          "lemma-2 sum with b -> b^3, n = 3 (mod 4)"),
    Claim("thm8", "parametric-q-congruence", "n", "Theorem 8",
          "modulo [n](1-aq^n)(a-q^n)(1-bq^n)(b-q^n), M=(n-1)/2 or n-1",
          "lemma-2 sum, n = 1 (mod 4)"),
    Claim("crt", "parametric-q-congruence", "n", "Chinese remainder coefficients",
          "(b-q^n)(ab-1-a^2+aq^n)/((a-b)(1-ab)) ≡ 1 (mod (1-aq^n)(a-q^n))",
          "the four unit-coefficient relations used to glue the parametric congruences"),
    Claim("vanhamme", "p-adic", "pr", "Van Hamme p-adic analogue", "-p/Γ_p(3/4)^4 (mod p^3)",
          "alternating (4k+1)(1/2)_k^5/k!^5 sum to (p-1)/2"),
    Claim("swisher", "p-adic", "pr", "Swisher's strengthening", "(mod p^5), p>5, p≡1 (mod 4)",
          "the Van Hamme congruence modulo p^5"),
    Claim("liu_p4", "p-adic", "pr", "Liu's mod p^4 evaluation", "-(p^3/16)Γ_p(1/4)^4 (mod p^4)",
          "the alternating sum for p = 3 (mod 4), p > 3"),
    Claim("he3", "p-adic", "pr", "He's first supercongruence",
          "(-1)^{(p+3)/4}pΓ_p(1/2)Γ_p(1/4)^2 (mod p^2)",
          "(6k+1)(1/2)_k^3(1/4)_k/(k!^4 4^k) sum to (p-1)/2"),
    Claim("he4", "p-adic", "pr", "He's second supercongruence", "-pΓ_p(1/4)^4 (mod p^2)",
          "(6k+1)(1/2)_k^3(1/4)_k^2/k!^5 sum to p-1"),
    Claim("he3_liu", "p-adic", "pr", "Liu's mod p^3 form of He's first", "(mod p^3)",
          "He's first supercongruence modulo p^3"),
    Claim("he4_liu", "p-adic", "pr", "Liu's mod p^3 form of He's second", "(mod p^3)",
          "He's second supercongruence modulo p^3"),
    Claim("cor1", "p-adic", "pr", "Corollary 1", "≡0 (mod p^{r+3})",
          "F1 sum to p^r-1 for p^r = 3 (mod 4); r = 1 is He's mod p^4 conjecture"),
    Claim("cor2", "p-adic", "pr", "Corollary 2", "{16-p^{2r}H^{(2)}_{(p^r-1)/4}} (mod p^{r+3})",
          "F1 sum to (p^r-1)/2 for p^r = 1 (mod 4)"),
    Claim("cor3", "p-adic", "pr", "Corollary 3", "(3p^r/4)(1/2)^2_{(3p^r-1)/4}/(1)^2 (mod p^{r+4})",
          "F2 sum to p^r-1 for p^r = 3 (mod 4); extends He's mod p^3 conjecture"),
    Claim("cor4", "p-adic", "pr", "Corollary 4",
          "{8+2p^{2r}H^{(2)}_{(p^r-1)/2}-p^{2r}H^{(2)}_{(p^r-1)/4}} (mod p^{r+4})",
          "F2 sum to (p^r-1)/2 for p^r = 1 (mod 4)"),
    Claim("gr", "series-identity", "order", "Gasper-Rahman quadratic summation",
          "(1-aq^{3k})/(1-a) (a,b,q/b;q)_k(d,f,a^2q/df;q^2)_k, nonterminating",
          "bibasic sum plus a 3phi2 in base q^2 equals an infinite product"),
    Claim("gr_a", "series-identity", "order", "Gasper-Rahman limiting form",
          "q^{(k^2+k)/2}(a/f)^k",
          "the d -> 0 limit: bibasic sum equals a product in base q^2"),
)

# Each stated result must be bound to one claim; checked at import.
STATEMENTS = {
    "Van Hamme congruence": "vanhamme",
    "Swisher mod p^5": "swisher",
    "Liu mod p^4": "liu_p4",
    "He first supercongruence": "he3",
    "He second supercongruence": "he4",
    "Liu mod p^3 forms": "he3_liu",
    "Liu mod p^3 forms (second)": "he4_liu",
    "He mod p^4 conjecture": "cor1",
    "He mod p^3 conjecture": "cor3",
    "Gasper-Rahman summation": "gr",
    "Guo-Wang-Yue q-analogue": "guo_wy",
    "Theorem 1": "thm1", "Theorem 2": "thm2", "Theorem 3": "thm3", "Theorem 4": "thm4",
    "Corollary 1": "cor1", "Corollary 2": "cor2", "Corollary 3": "cor3", "Corollary 4": "cor4",
    "limiting summation": "gr_a",
    "Lemma 1": "lemma1", "Theorem 5": "thm5", "Theorem 6": "thm6",
    "Lemma 2": "lemma2", "Theorem 7": "thm7", "Theorem 8": "thm8",
    "CRT coefficient relations": "crt",
}

_BY_ID = {c.id: c for c in CATALOG}


def _check_catalog() -> None:
    ids = [c.id for c in CATALOG]
    assert len(set(ids)) == len(ids), "duplicate claim ids"
    anchors = [c.anchor for c in CATALOG]
    assert len(set(anchors)) == len(anchors), "duplicate anchors"
    missing = {v for v in STATEMENTS.values()} - set(ids)
    assert not missing, f"statements without a claim: {missing}"
    unused = set(ids) - set(STATEMENTS.values())
    assert not unused, f"claims without a statement: {unused}"


_check_catalog()


def catalog() -> list[Claim]:
    return list(CATALOG)


def get_claim(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise KeyError(f"unknown claim {claim_id!r}") from None


# -- verdicts and reports ----------------------------------------------------

@dataclass
class Subcheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Verdict:
    claim: str
    instance: dict[str, Any]
    status: str                                 # pass | fail | inapplicable
    subchecks: list[Subcheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def sort_key(self) -> tuple:
        return (self.claim, tuple(sorted(self.instance.items())))

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "instance": dict(self.instance),
            "pass": self.passed,
            "status": self.status,
            "subchecks": [{"name": s.name, "pass": s.passed, "detail": s.detail} for s in self.subchecks],
            "notes": list(self.notes),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Verdict":
        return cls(d["claim"], dict(d["instance"]), d["status"],
                   [Subcheck(s["name"], s["pass"], s["detail"]) for s in d["subchecks"]],
                   list(d.get("notes", [])), d.get("elapsed_ms", 0.0))

    def describe(self) -> str:
        inst = ", ".join(f"{k}={v}" for k, v in self.instance.items())
        return f"{self.status.upper():12s} {self.claim}({inst})"


@dataclass
class Report:
    version: str
    seed: int
    config: dict[str, Any]
    verdicts: list[Verdict]

    @property
    def summary(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "inapplicable": 0}
        for v in self.verdicts:
            out[v.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_dict(self, *, timing: bool = True) -> dict[str, Any]:
        vs = [v.to_dict() for v in self.verdicts]
        if not timing:
            for v in vs:
                v.pop("elapsed_ms")
        return {"version": self.version, "seed": self.seed, "config": dict(self.config),
                "verdicts": vs, "summary": self.summary}

    def to_json(self, *, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing=timing), indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        return cls(d["version"], d["seed"], d["config"], [Verdict.from_dict(v) for v in d["verdicts"]])


# -- mutations -----------------------------------------------------------------

def _weight(w: tuple[int, int]) -> Callable[[QSummand], QSummand]:
    return lambda s: replace(s, weight=w)


# claim -> (description, summand transform or p-adic weight, default instance)
MUTATIONS: dict[str, tuple[str, Any, dict[str, int]]] = {
    "thm1": ("weight [6k+1] -> [6k+2]", _weight((6, 2)), {"n": 7}),
    "thm2": ("weight [6k+1] -> [6k+2]", _weight((6, 2)), {"n": 5}),
    "thm3": ("q^{2k} -> q^{3k}", lambda s: replace(s, qexp=(0, 3)), {"n": 7}),
    "thm4": ("q^{2k} -> q^{3k}", lambda s: replace(s, qexp=(0, 3)), {"n": 5}),
    "guo_wy": ("drop the sign (-1)^k", lambda s: replace(s, sign=1), {"n": 5}),
    "lemma1": ("weight [6k+1] -> [5k+1]", _weight((5, 1)), {"n": 3}),
    "lemma2": ("weight [6k+1] -> [5k+1]", _weight((5, 1)), {"n": 3}),
    "thm5": ("weight [6k+1] -> [6k+2]", _weight((6, 2)), {"n": 3}),
    "thm6": ("weight [6k+1] -> [6k+2]", _weight((6, 2)), {"n": 5}),
    "thm7": ("weight [6k+1] -> [6k+2]", _weight((6, 2)), {"n": 3}),
    "thm8": ("weight [6k+1] -> [6k+2]", _weight((6, 2)), {"n": 5}),
    "crt": ("flip the sign of the first unit coefficient", None, {"n": 3}),
    "vanhamme": ("weight (4k+1) -> (4k+3)", (4, 3), {"p": 5, "r": 1}),
    "swisher": ("weight (4k+1) -> (4k+3)", (4, 3), {"p": 13, "r": 1}),
    "liu_p4": ("weight (4k+1) -> (4k+3)", (4, 3), {"p": 7, "r": 1}),
    "he3": ("weight (6k+1) -> (6k+5)", (6, 5), {"p": 5, "r": 1}),
    "he4": ("weight (6k+1) -> (6k+5)", (6, 5), {"p": 5, "r": 1}),
    "he3_liu": ("weight (6k+1) -> (6k+5)", (6, 5), {"p": 5, "r": 1}),
    "he4_liu": ("weight (6k+1) -> (6k+5)", (6, 5), {"p": 5, "r": 1}),
    "cor1": ("weight (6k+1) -> (6k+5)", (6, 5), {"p": 3, "r": 1}),
    "cor2": ("weight (6k+1) -> (6k+5)", (6, 5), {"p": 5, "r": 1}),
    "cor3": ("weight (6k+1) -> (6k+5)", (6, 5), {"p": 3, "r": 1}),
    "cor4": ("weight (6k+1) -> (6k+5)", (6, 5), {"p": 5, "r": 1}),
    "gr": ("prefactor (a^2q/df;q^2) -> (aq^2/df;q^2)", None, {"order": 12}),
    "gr_a": ("(1-aq^{3k}) -> (1-aq^{2k})", None, {"order": 12}),
}


# -- running one instance ------------------------------------------------------

@dataclass(frozen=True)
class RunOptions:
    seed: int = DEFAULT_SEED
    specializations: int = DEFAULT_SPECIALIZATIONS
    series_order: int = DEFAULT_SERIES_ORDER
    mutant: bool = False


def _truncations(claim: str, n: int) -> list[int]:
    if claim in ("thm1", "thm3", "thm5", "thm7"):
        return [n - 1]
    return sorted({(n - 1) // 2, n - 1})


def _require_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise InapplicableError(f"n must be a positive odd integer, got {n}")


def _fmt_report(report) -> str:
    return ", ".join(f"{lab}: {v} >= {req}" if v >= req else f"{lab}: {v} < {req}"
                     for lab, req, v in report)


_SUMMANDS = {"thm1": summand_A, "thm2": summand_A, "thm3": summand_B, "thm4": summand_B,
             "guo_wy": summand_C}


def _run_closed(claim: str, n: int, opt: RunOptions, out: Verdict) -> None:
    _require_odd(n)
    rhs = rhs_closed(claim, n)
    m = modulus_for(claim, n)
    s = _SUMMANDS[claim]()
    if opt.mutant:
        s = MUTATIONS[claim][1](s)
    for M in _truncations(claim, n):
        v = check_congruence(hyper_sum(s, M), rhs, m)
        out.subchecks.append(Subcheck(f"M={M}", v.passed, _fmt_report(v.valuation_report)
                                      + (f"; {v.notes}" if v.notes else "")))


def _specializations(opt: RunOptions):
    """Endless deterministic stream of non-degenerate (a, b) pairs for this seed."""
    batch = sample_params(opt.seed, 64)
    yield from batch
    k = 1
    while True:
        yield from sample_params(opt.seed * 1_000_003 + k, 64)
        k += 1


def _run_lemma(claim: str, n: int, opt: RunOptions, out: Verdict) -> None:
    _require_odd(n)
    m = modulus_for(claim, n)
    make = summand_lemma1 if claim == "lemma1" else summand_lemma2
    for a, b in sample_params(opt.seed, opt.specializations):
        s = make(a, b)
        if opt.mutant:
            s = MUTATIONS[claim][1](s)
        for M in _truncations(claim, n):
            v = check_congruence(hyper_sum(s, M), QRat(ZERO), m)
            out.subchecks.append(Subcheck(f"a={a}, b={b}, M={M}", v.passed,
                                          _fmt_report(v.valuation_report)
                                          + (f"; {v.notes}" if v.notes else "")))


def _run_parametric(claim: str, n: int, opt: RunOptions, out: Verdict) -> None:
    rhs_parametric(claim, n, 2, 3)  # residue check before sampling
    make = summand_lemma1 if claim in ("thm5", "thm6") else summand_lemma2
    cube = claim in ("thm5", "thm7")
    accepted, tried = 0, 0
    for a, b in _specializations(opt):
        if accepted == opt.specializations:
            break
        tried += 1
        if tried > 50 * opt.specializations:
            out.notes.append("too many degenerate specializations")
            break
        try:
            m = modulus_for(claim, n, a, b)
        except DegenerateParameters as exc:
            out.notes.append(f"skipped a={a}, b={b}: {exc}")
            continue
        rhs = rhs_parametric(claim, n, a, b)
        s = make(a, b ** 3 if cube else b)
        if opt.mutant:
            s = MUTATIONS[claim][1](s)
        lhss = [(M, hyper_sum(s, M)) for M in _truncations(claim, n)]
        if any(shares_parametric_factor(f, m) for f in [rhs] + [x for _, x in lhss]):
            out.notes.append(f"skipped a={a}, b={b}: a denominator meets a specialized modulus factor")
            continue
        accepted += 1
        for M, lhs in lhss:
            v = check_congruence(lhs, rhs, m)
            out.subchecks.append(Subcheck(f"a={a}, b={b}, M={M}", v.passed,
                                          v.notes or f"divisible by {m.describe()}"))


def _run_crt(n: int, opt: RunOptions, out: Verdict) -> None:
    if n < 1:
        raise InapplicableError("n must be positive")
    for a, b in sample_params(opt.seed, opt.specializations):
        ok = verify_crt_relations(n, a, b, flip_sign=opt.mutant)
        out.subchecks.append(Subcheck(f"a={a}, b={b}", ok, "all four relations hold" if ok
                                      else "a unit-coefficient relation fails"))


def _run_padic(claim: str, p: int, r: int, opt: RunOptions, out: Verdict) -> None:
    check_applicable(claim, p, r)
    c = PADIC_CLAIMS[claim]
    weight = MUTATIONS[claim][1] if opt.mutant else None
    lhs = sum_classical(c.family, c.upper(p ** r), weight=weight).value
    rhs = rhs_padic(claim, p, r)
    v = check_padic(lhs, rhs)
    e = rhs.e
    if rhs.exact == 0:
        detail = f"v_{p} = {v.agreement} {'>=' if v.passed else '<'} {e}"
    elif v.agreement_exact:
        detail = f"v_{p}(lhs - rhs) = {v.agreement} {'>=' if v.passed else '<'} {e}"
    else:
        detail = f"lhs = rhs mod {p}^{e}" if v.passed else f"agreement only mod {p}^{v.agreement}"
    detail += f"; v_{p}(lhs) = {v.lhs_valuation}"
    if not v.integral:
        detail += f"; {v.notes}"
    out.subchecks.append(Subcheck(f"mod {p}^{e}", v.passed, detail))


def _gr_params(claim: str, opt: RunOptions):
    rng = random.Random(f"{claim}:{opt.seed}")
    arity = 4 if claim == "gr" else 3
    for _ in range(50 * max(opt.specializations, 1)):
        yield tuple(random_rational(rng) for _ in range(arity))


def _run_series(claim: str, order: int, opt: RunOptions, out: Verdict) -> None:
    if order < 0:
        raise InapplicableError("series order must be nonnegative")
    accepted = 0
    for params in _gr_params(claim, opt):
        if accepted == opt.specializations:
            break
        names = "abdf" if claim == "gr" else "abf"
        label = ", ".join(f"{k}={v}" for k, v in zip(names, params))
        try:
            if claim == "gr":
                lhs, rhs = gr_sides(*params, order, printed_prefactor=opt.mutant)
            else:
                lhs, rhs = gr_a_sides(*params, order, well_poised_exp=2 if opt.mutant else 3)
        except DegenerateParameters as exc:
            out.notes.append(f"skipped {label}: {exc}")
            continue
        accepted += 1
        bad = [i for i in range(order + 1) if lhs[i] != rhs[i]]
        out.subchecks.append(Subcheck(label, not bad, f"equal through q^{order}" if not bad
                                      else f"first mismatch at q^{bad[0]}"))


def run(claim_id: str, instance: dict[str, int], seed: int = DEFAULT_SEED, *,
        specializations: int = DEFAULT_SPECIALIZATIONS,
        series_order: Optional[int] = None, mutant: bool = False) -> Verdict:
    """Check one instance of a claim. Inapplicable instances give status 'inapplicable'."""
    claim = get_claim(claim_id)
    opt = RunOptions(seed, specializations,
                     series_order if series_order is not None else DEFAULT_SERIES_ORDER, mutant)
    out = Verdict(claim_id, dict(instance), "pass")
    t0 = time.perf_counter()
    try:
        if claim.params == "n":
            if set(instance) != {"n"}:
                raise InapplicableError(f"{claim_id} takes an instance n")
            n = int(instance["n"])
            if claim_id in _SUMMANDS:
                _run_closed(claim_id, n, opt, out)
            elif claim_id in ("lemma1", "lemma2"):
                _run_lemma(claim_id, n, opt, out)
            elif claim_id == "crt":
                _run_crt(n, opt, out)
            else:
                _run_parametric(claim_id, n, opt, out)
        elif claim.params == "pr":
            if set(instance) != {"p", "r"}:
                raise InapplicableError(f"{claim_id} takes an instance (p, r)")
            _run_padic(claim_id, int(instance["p"]), int(instance["r"]), opt, out)
        else:
            order = int(instance.get("order", opt.series_order))
            out.instance = {"order": order}
            _run_series(claim_id, order, opt, out)
    except InapplicableError as exc:
        out.status = "inapplicable"
        out.subchecks = []
        out.notes.append(str(exc))
    else:
        if not out.subchecks or not all(s.passed for s in out.subchecks):
            out.status = "fail"
            if not out.subchecks:
                out.notes.append("no instance could be checked")
    out.elapsed_ms = (time.perf_counter() - t0) * 1000
    return out


class MutationSurvived(AssertionError):
    """A registered mutation was not detected by the checker."""


def mutation_test(claim_id: str, instance: Optional[dict[str, int]] = None,
                  seed: int = DEFAULT_SEED, **kw) -> Verdict:
    """Run the registered mutant; it must fail, else :class:`MutationSurvived` is raised."""
    if claim_id not in MUTATIONS:
        raise KeyError(f"no mutation registered for {claim_id!r}")
    instance = instance if instance is not None else MUTATIONS[claim_id][2]
    v = run(claim_id, instance, seed, mutant=True, **kw)
    if v.status == "inapplicable":
        raise InapplicableError(f"mutation instance {instance} is inapplicable")
    if v.status != "fail":
        raise MutationSurvived(f"{claim_id} mutation '{MUTATIONS[claim_id][0]}' passed at {instance}")
    return v


# -- scans ----------------------------------------------------------------------

@dataclass(frozen=True)
class ScanConfig:
    n_max: int = 19
    primes: tuple[int, ...] = ()
    r_max: int = 1
    seed: int = DEFAULT_SEED
    series_order: int = DEFAULT_SERIES_ORDER
    specializations: int = DEFAULT_SPECIALIZATIONS
    workers: int = 1


def scan_instances(cfg: ScanConfig) -> list[tuple[str, dict[str, int]]]:
    jobs = []
    for c in CATALOG:
        if c.params == "n":
            jobs += [(c.id, {"n": n}) for n in range(1, cfg.n_max + 1)]
        elif c.params == "pr":
            jobs += [(c.id, {"p": p, "r": r}) for p in cfg.primes for r in range(1, cfg.r_max + 1)]
        elif cfg.n_max >= 1:
            jobs.append((c.id, {"order": cfg.series_order}))
    return jobs


def _run_job(args) -> Verdict:
    claim_id, inst, cfg = args
    return run(claim_id, inst, cfg.seed, specializations=cfg.specializations,
               series_order=cfg.series_order)


def scan(cfg: ScanConfig = ScanConfig()) -> Report:
    jobs = [(c, i, cfg) for c, i in scan_instances(cfg)]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            verdicts = list(pool.map(_run_job, jobs))
    else:
        verdicts = [_run_job(j) for j in jobs]
    verdicts.sort(key=Verdict.sort_key)
    config = asdict(cfg)
    config["primes"] = list(cfg.primes)
    config.pop("workers")
    return Report(__version__, cfg.seed, config, verdicts)
