"""Classical (q = 1) sums, p-adic valuations and residues, Morita's p-adic Gamma."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from .errors import InapplicableError
from .exact import INFINITY, Scalar


def _is_odd_prime(p: int) -> bool:
    return p > 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def _require_prime(p: int) -> None:
    if not _is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def vp(x: Scalar, p: int) -> int | float:
    """p-adic valuation; ``INFINITY`` for 0."""
    x = Fraction(x)
    if x == 0:
        return INFINITY
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class PadicResidue:
    """``value`` mod ``p**e``; ``exact`` keeps the rational it came from, when there is one."""

    p: int
    e: int
    value: int
    exact: Optional[Fraction] = None

    def __post_init__(self):
        if self.e < 1:
            raise ValueError("precision must be positive")
        object.__setattr__(self, "value", self.value % self.p ** self.e)


def rat_mod(x: Scalar, p: int, e: int) -> PadicResidue:
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"{x} is not {p}-integral")
    P = p ** e
    return PadicResidue(p, e, x.numerator * pow(x.denominator, -1, P), x)


def pochhammer(x: Scalar, k: int) -> Fraction:
    """Rising factorial ``x (x+1) ... (x+k-1)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = Fraction(x)
    out = Fraction(1)
    for j in range(k):
        out *= x + j
    return out


def harmonic2(m: int) -> Fraction:
    return sum((Fraction(1, k * k) for k in range(1, m + 1)), Fraction(0))


@lru_cache(maxsize=None)
def _gamma_int(n: int, p: int, e: int) -> int:
    P = p ** e
    r = 1
    for k in range(1, n):
        if k % p:
            r = r * k % P
    return (-r if n % 2 else r) % P


def gamma_p(x: Scalar, p: int, e: int) -> PadicResidue:
    """Morita's Gamma_p(x) mod p^e for a p-adic integer x.

    Uses the integer lift of x in [0, p^e); Gamma_p is 1-Lipschitz, so the
    residue is determined by x mod p^e.
    """
    _require_prime(p)
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"{x} is not a {p}-adic integer")
    P = p ** e
    n = x.numerator * pow(x.denominator, -1, P) % P
    return PadicResidue(p, e, _gamma_int(n, p, e))


# -- the classical sums ------------------------------------------------------------

@dataclass(frozen=True)
class ClassicalSum:
    family: str
    upper: int
    value: Fraction


def _term_ratio(family: str) -> Callable[[int], Fraction]:
    """t_{k+1} / t_k without the linear weight."""
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    if family == "A2":
        return lambda k: -((half + k) / (k + 1)) ** 5
    if family == "F1":
        return lambda k: ((half + k) ** 3 * (quarter + k)) / ((k + 1) ** 4 * 4)
    if family == "F2":
        return lambda k: ((half + k) ** 3 * (quarter + k) ** 2) / (k + 1) ** 5
    raise ValueError(f"unknown family {family!r}")


WEIGHTS = {"A2": (4, 1), "F1": (6, 1), "F2": (6, 1)}


def sum_classical(family: str, upper: int, *, weight: Optional[tuple[int, int]] = None,
                  skip: Optional[int] = None) -> ClassicalSum:
    """Exact partial sum ``sum_{k=0}^{upper} (w1 k + w0) t_k``.

    ``weight`` and ``skip`` (drop one term) exist for mutation tests.
    """
    if upper < 0:
        raise ValueError("upper must be nonnegative")
    ratio = _term_ratio(family)
    w1, w0 = weight or WEIGHTS[family]
    t, s = Fraction(1), Fraction(0)
    for k in range(upper + 1):
        if k != skip:
            s += (w1 * k + w0) * t
        t *= ratio(k)
    return ClassicalSum(family, upper, s)


# -- right-hand sides ----------------------------------------------------------------

@dataclass(frozen=True)
class PadicClaim:
    family: str
    upper: Callable[[int], int]         # of n = p^r
    precision: Callable[[int], int]     # of r
    residues: tuple[int, ...]           # allowed p^r mod 4
    min_p: int = 3
    single_power: bool = True           # stated for r = 1 only


PADIC_CLAIMS = {
    "vanhamme": PadicClaim("A2", lambda n: (n - 1) // 2, lambda r: 3, (1, 3)),
    "swisher": PadicClaim("A2", lambda n: (n - 1) // 2, lambda r: 5, (1,), min_p=7),
    "liu_p4": PadicClaim("A2", lambda n: (n - 1) // 2, lambda r: 4, (3,), min_p=5),
    "he3": PadicClaim("F1", lambda n: (n - 1) // 2, lambda r: 2, (1, 3)),
    "he4": PadicClaim("F2", lambda n: n - 1, lambda r: 2, (1, 3)),
    "he3_liu": PadicClaim("F1", lambda n: (n - 1) // 2, lambda r: 3, (1, 3)),
    "he4_liu": PadicClaim("F2", lambda n: n - 1, lambda r: 3, (1, 3)),
    "cor1": PadicClaim("F1", lambda n: n - 1, lambda r: r + 3, (3,), single_power=False),
    "cor2": PadicClaim("F1", lambda n: (n - 1) // 2, lambda r: r + 3, (1,), single_power=False),
    "cor3": PadicClaim("F2", lambda n: n - 1, lambda r: r + 4, (3,), single_power=False),
    "cor4": PadicClaim("F2", lambda n: (n - 1) // 2, lambda r: r + 4, (1,), single_power=False),
}


def check_applicable(claim: str, p: int, r: int) -> None:
    if claim not in PADIC_CLAIMS:
        raise ValueError(f"unknown p-adic claim {claim!r}")
    if not _is_odd_prime(p):
        raise InapplicableError(f"{p} is not an odd prime")
    if r < 1:
        raise ValueError("r must be positive")
    c = PADIC_CLAIMS[claim]
    if c.single_power and r != 1:
        raise InapplicableError(f"{claim} is stated for primes only (r = 1)")
    if p < c.min_p:
        raise InapplicableError(f"{claim} needs p >= {c.min_p}")
    if p ** r % 4 not in c.residues:
        raise InapplicableError(f"{claim} needs p^r = {' or '.join(map(str, c.residues))} (mod 4)")


def rhs_padic(claim: str, p: int, r: int, e: Optional[int] = None) -> PadicResidue:
    """Right-hand side of a classical congruence, reduced mod p^e (default: stated precision)."""
    check_applicable(claim, p, r)
    c = PADIC_CLAIMS[claim]
    e = c.precision(r) if e is None else e
    P, n = p ** e, p ** r
    one_mod_4 = n % 4 == 1
    g = lambda x: gamma_p(x, p, e).value
    if claim in ("vanhamme", "swisher"):
        if not one_mod_4:
            return rat_mod(0, p, e)
        return PadicResidue(p, e, -p * pow(g(Fraction(3, 4)) ** 4, -1, P))
    if claim == "liu_p4":
        return PadicResidue(p, e, -p ** 3 * pow(16, -1, P) * g(Fraction(1, 4)) ** 4)
    if claim in ("he3", "he3_liu"):
        if not one_mod_4:
            return rat_mod(0, p, e)
        sign = -1 if ((p + 3) // 4) % 2 else 1
        return PadicResidue(p, e, sign * p * g(Fraction(1, 2)) * g(Fraction(1, 4)) ** 2)
    if claim in ("he4", "he4_liu"):
        if not one_mod_4:
            return rat_mod(0, p, e)
        return PadicResidue(p, e, -p * g(Fraction(1, 4)) ** 4)
    if claim == "cor1":
        return rat_mod(0, p, e)
    half = Fraction(1, 2)
    if claim == "cor2":
        m = (n - 1) // 4
        x = Fraction(n, 16) * pochhammer(half, m) / pochhammer(1, m) * (16 - n * n * harmonic2(m))
        return rat_mod(x, p, e)
    if claim == "cor3":
        m = (3 * n - 1) // 4
        return rat_mod(Fraction(3 * n, 4) * (pochhammer(half, m) / pochhammer(1, m)) ** 2, p, e)
    if claim == "cor4":
        m = (n - 1) // 4
        brace = 8 + 2 * n * n * harmonic2((n - 1) // 2) - n * n * harmonic2(m)
        return rat_mod(Fraction(n, 8) * (pochhammer(half, m) / pochhammer(1, m)) ** 2 * brace, p, e)
    raise ValueError(f"no right-hand side registered for {claim!r}")


def lhs_padic(claim: str, p: int, r: int) -> ClassicalSum:
    check_applicable(claim, p, r)
    c = PADIC_CLAIMS[claim]
    return sum_classical(c.family, c.upper(p ** r))


@dataclass
class PadicVerdict:
    passed: bool
    integral: bool
    precision: int
    agreement: int | float      # vp(lhs - rhs); capped at precision when rhs is only a residue
    agreement_exact: bool
    lhs_valuation: int | float
    notes: str = ""


def check_padic(lhs: Scalar, rhs: PadicResidue) -> PadicVerdict:
    lhs = Fraction(lhs)
    p, e = rhs.p, rhs.e
    v_lhs = vp(lhs, p)
    if lhs.denominator % p == 0:
        return PadicVerdict(False, False, e, v_lhs, True, v_lhs, "left side not p-integral")
    if rhs.exact is not None:
        agreement, exact = vp(lhs - rhs.exact, p), True
    else:
        agreement, exact = min(vp(lhs - rhs.value, p), e), False
    passed = rat_mod(lhs, p, e).value == rhs.value
    notes = "" if passed else f"agrees only mod {p}^{agreement}"
    return PadicVerdict(passed, True, e, agreement, exact, v_lhs, notes)
