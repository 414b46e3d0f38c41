"""Moduli, the congruence test for rational functions, and parameter sampling.

``S == T (mod M)`` means: writing ``S - T = N / D`` in lowest terms, ``D`` is
coprime to ``M`` and ``M`` divides ``N``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import DegenerateParameters
from .exact import INFINITY, ONE, QPoly, QRat, Scalar, cyclotomic, divisors, poly_gcd, valuation_at
from .qseries import check_generic

# Power of Phi_n beyond the [n] factor, per claim.
CYCLOTOMIC_EXPONENT = {
    "thm1": 3, "thm2": 3, "thm3": 4, "thm4": 4, "guo_wy": 2,
    "lemma1": 0, "lemma2": 0,
}
PARAMETRIC = {"thm5": False, "thm6": False, "thm7": True, "thm8": True}  # value: has 1 - b q^n


class ModFactor(NamedTuple):
    poly: QPoly
    multiplicity: int
    label: str
    kind: str  # "cyclotomic" or "parametric"


@dataclass(frozen=True)
class Modulus:
    factors: tuple[ModFactor, ...]
    product: QPoly = field(init=False)

    def __post_init__(self):
        fs = self.factors
        for i in range(len(fs)):
            if fs[i].multiplicity < 1:
                raise ValueError(f"multiplicity of {fs[i].label} must be positive")
            if fs[i].poly.degree() < 1:
                raise ValueError(f"factor {fs[i].label} must be a nonconstant polynomial")
            for j in range(i):
                if poly_gcd(fs[i].poly, fs[j].poly).degree() > 0:
                    raise DegenerateParameters(
                        f"modulus factors {fs[j].label} and {fs[i].label} are not coprime")
        prod = ONE
        for f in fs:
            prod = prod * f.poly ** f.multiplicity
        object.__setattr__(self, "product", prod)

    def describe(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"({f.label})^{f.multiplicity}" if f.multiplicity > 1 else f"({f.label})"
                          for f in self.factors)


def _cyclotomic_part(n: int, e: int) -> list[ModFactor]:
    """Factors of ``[n] Phi_n^e``."""
    if n == 1:
        return [ModFactor(cyclotomic(1), e, "Phi_1", "cyclotomic")] if e else []
    out = [ModFactor(cyclotomic(d), 1, f"Phi_{d}", "cyclotomic") for d in divisors(n) if 1 < d < n]
    out.append(ModFactor(cyclotomic(n), e + 1, f"Phi_{n}", "cyclotomic"))
    return out


def modulus_for(claim: str, n: int, a: Optional[Scalar] = None, b: Optional[Scalar] = None) -> Modulus:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if claim in CYCLOTOMIC_EXPONENT:
        if a is not None or b is not None:
            raise ValueError(f"{claim} takes no parameters")
        return Modulus(tuple(_cyclotomic_part(n, CYCLOTOMIC_EXPONENT[claim])))
    if claim in PARAMETRIC:
        if a is None or b is None:
            raise ValueError(f"{claim} needs both parameters a and b")
        a, b = Fraction(a), Fraction(b)
        check_generic(a, b)
        fs = _cyclotomic_part(n, 0)
        fs.append(ModFactor(QPoly.binomial(1, -a, n), 1, f"1 - ({a})q^{n}", "parametric"))
        fs.append(ModFactor(QPoly.binomial(a, -1, n), 1, f"{a} - q^{n}", "parametric"))
        if PARAMETRIC[claim]:
            fs.append(ModFactor(QPoly.binomial(1, -b, n), 1, f"1 - ({b})q^{n}", "parametric"))
        fs.append(ModFactor(QPoly.binomial(b, -1, n), 1, f"{b} - q^{n}", "parametric"))
        return Modulus(tuple(fs))
    raise ValueError(f"no modulus registered for {claim!r}")


@dataclass
class CongruenceVerdict:
    passed: bool
    denominator_coprime: bool
    remainder_zero: bool
    valuation_report: list[tuple[str, int, float]]
    notes: str = ""


def check_congruence(lhs: QRat, rhs: QRat, m: Modulus) -> CongruenceVerdict:
    d = lhs - rhs
    coprime = poly_gcd(d.den, m.product).degree() == 0
    zero_rem = d.is_zero() or m.product.divides(d.num)
    report = []
    for f in m.factors:
        v = INFINITY if d.is_zero() else valuation_at(d, f.poly)
        report.append((f.label, f.multiplicity, v))
    notes = []
    if not coprime:
        notes.append("not integral at modulus")
    if not zero_rem:
        short = [f"{lab} needs {req}, has {v}" for lab, req, v in report if v < req]
        notes.append("numerator not divisible" + (": " + "; ".join(short) if short else ""))
    return CongruenceVerdict(coprime and zero_rem, coprime, zero_rem, report, "; ".join(notes))


def shares_parametric_factor(f: QRat, m: Modulus) -> bool:
    """Whether the denominator of f meets one of the specialized (non-cyclotomic) factors."""
    return any(poly_gcd(f.den, x.poly).degree() > 0 for x in m.factors if x.kind == "parametric")


# -- sampling ------------------------------------------------------------------

BOUND = 9
_EXCLUDED = {Fraction(0), Fraction(1), Fraction(-1)}


def random_rational(rng: random.Random, bound: int = BOUND) -> Fraction:
    """A rational ``s/t`` with ``0 < |s|, t <= bound``, never 0 or +-1."""
    while True:
        x = Fraction(rng.randint(-bound, bound) or 1, rng.randint(1, bound))
        if x not in _EXCLUDED:
            return x


def sample_params(seed: int, count: int) -> list[tuple[Fraction, Fraction]]:
    """Deterministic non-degenerate pairs (a, b): a != b, ab != 1, a, b not in {0, 1, -1}."""
    if count < 1:
        raise ValueError("count must be positive")
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a, b = random_rational(rng), random_rational(rng)
        if a != b and a * b != 1:
            out.append((a, b))
    return out


# -- Chinese remainder unit relations -------------------------------------------

def _single(poly: QPoly, label: str) -> Modulus:
    return Modulus((ModFactor(poly, 1, label, "parametric"),))


def verify_crt_relations(n: int, a: Scalar, b: Scalar, *, flip_sign: bool = False) -> bool:
    """Check the four idempotent-type relations used to glue the parametric congruences.

    ``flip_sign`` negates the first coefficient (a mutation that must fail).
    """
    a, b = Fraction(a), Fraction(b)
    check_generic(a, b)
    lin = QPoly.binomial
    u = QRat(ONE) / ((a - b) * (1 - a * b))
    one = QRat(ONE)
    aa = lin(1, -a, n) * lin(a, -1, n)
    bb = lin(1, -b, n) * lin(b, -1, n)
    first = QRat(lin(b, -1, n) * lin(a * b - 1 - a * a, a, n)) * (-u if flip_sign else u)
    relations = [
        (first, _single(aa, "(1-aq^n)(a-q^n)")),
        (QRat(aa) * u, _single(lin(b, -1, n), "b-q^n")),
        (QRat(bb * lin(-1 - a * a, a, n)) * u, _single(aa, "(1-aq^n)(a-q^n)")),
        (QRat(aa * lin(-1 - b * b, b, n)) * -u, _single(bb, "(1-bq^n)(b-q^n)")),
    ]
    return all(check_congruence(lhs, one, m).passed for lhs, m in relations)
