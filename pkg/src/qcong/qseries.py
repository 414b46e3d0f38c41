"""q-Pochhammer symbols, truncated power series and the q-sums being checked.

Conventions: ``(x; q^s)_k = prod_{j<k} (1 - x q^{s j})`` (product starts at
``j = 0``). A Pochhammer argument ``c * q^e`` is a :class:`PochArg`.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateParameters, InapplicableError
from .exact import ONE, ZERO, QPoly, QRat, Scalar, q_integer


@dataclass(frozen=True)
class PochArg:
    """The Pochhammer argument ``coeff * q**exp``."""

    coeff: Fraction
    exp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0 and self.exp != 0:
            raise ValueError("the zero argument is stored with exp = 0")

    def shifted(self, e: int) -> "PochArg":
        return PochArg(self.coeff, self.exp + e) if self.coeff else self

    def __str__(self) -> str:
        c = "" if self.coeff == 1 else f"{self.coeff}*"
        return f"{c}q^{self.exp}" if self.exp else str(self.coeff)


def arg(c: Scalar, e: int = 0) -> PochArg:
    return PochArg(Fraction(c), e)


def _factor(c: Fraction, e: int) -> tuple[QPoly, QPoly]:
    """``1 - c q^e`` as (numerator, denominator) polynomials."""
    if e >= 0:
        return QPoly.binomial(1, -c, e), ONE
    return QPoly.binomial(-c, 1, -e), QPoly.monomial(1, -e)


def qpoch(x: PochArg, step: int, k: int) -> QRat:
    """Finite product ``prod_{j<k} (1 - c q^(e + step*j))`` as a rational function."""
    if step < 1:
        raise ValueError("step must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    num, den = ONE, ONE
    if x.coeff:
        for j in range(k):
            fn, fd = _factor(x.coeff, x.exp + step * j)
            num, den = num * fn, den * fd
    return QRat(num, den)


# -- truncated power series --------------------------------------------------

class FormalSeries:
    """Power series in q known through ``q**order``.

    Arithmetic never looks past ``order``; equality is coefficientwise up to it.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Scalar], order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar, order: int) -> "FormalSeries":
        return cls((c,), order)

    @classmethod
    def one(cls, order: int) -> "FormalSeries":
        return cls((1,), order)

    def _check(self, other: "FormalSeries") -> None:
        if not isinstance(other, FormalSeries):
            raise TypeError(f"expected FormalSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"FormalSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        self._check(other)
        return FormalSeries([x + y for x, y in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "FormalSeries") -> "FormalSeries":
        self._check(other)
        return FormalSeries([x - y for x, y in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "FormalSeries":
        return FormalSeries([-x for x in self.coeffs], self.order)

    def __mul__(self, other: "FormalSeries") -> "FormalSeries":
        self._check(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        b = other.coeffs
        for i, x in enumerate(self.coeffs):
            if x:
                for j in range(n + 1 - i):
                    if b[j]:
                        out[i + j] += x * b[j]
        return FormalSeries(out, n)

    def __truediv__(self, other: "FormalSeries") -> "FormalSeries":
        self._check(other)
        b = other.coeffs
        if b[0] == 0:
            raise ZeroDivisionError("series division needs a nonzero constant term")
        out: list[Fraction] = []
        for i, x in enumerate(self.coeffs):
            acc = x - sum(b[j] * out[i - j] for j in range(1, i + 1) if b[j])
            out.append(acc / b[0])
        return FormalSeries(out, self.order)

    def scale(self, c: Scalar) -> "FormalSeries":
        c = Fraction(c)
        return FormalSeries([c * x for x in self.coeffs], self.order)

    def shift(self, m: int) -> "FormalSeries":
        """Multiply by ``q**m`` (m >= 0), dropping what falls past the order."""
        if m > self.order:
            return FormalSeries((), self.order)
        return FormalSeries((0,) * m + self.coeffs[: self.order + 1 - m], self.order)

    def mul_binomial(self, c: Fraction, e: int) -> "FormalSeries":
        """Multiply by ``1 - c q^e``."""
        if e == 0:
            return self.scale(1 - c)
        out = list(self.coeffs)
        for i in range(e, self.order + 1):
            out[i] -= c * self.coeffs[i - e]
        return FormalSeries(out, self.order)

    def div_binomial(self, c: Fraction, e: int) -> "FormalSeries":
        """Divide by ``1 - c q^e``."""
        if e == 0:
            if c == 1:
                raise ZeroDivisionError("division by the zero constant 1 - 1")
            return self.scale(1 / (1 - c))
        out = list(self.coeffs)
        for i in range(e, self.order + 1):
            out[i] += c * out[i - e]
        return FormalSeries(out, self.order)


def series_arith(a: FormalSeries, b: FormalSeries, op: str) -> FormalSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown series operation {op!r}")


def qpoch_inf(x: PochArg, step: int, order: int) -> FormalSeries:
    """Truncation of ``prod_{j>=0} (1 - c q^(e + step*j))`` at ``order``."""
    if x.exp < 0:
        raise ValueError("negative exponent: not a power series")
    s = FormalSeries.one(order)
    if x.coeff == 0:
        return s
    e = x.exp
    while e <= order:
        s = s.mul_binomial(x.coeff, e)
        e += step
    return s


def series_of_rat(f: QRat, order: int) -> FormalSeries:
    """Taylor expansion at q = 0 through ``order``."""
    if f.den[0] == 0:
        raise ZeroDivisionError("rational function has a pole at q = 0")
    return FormalSeries(f.num.coeffs, order) / FormalSeries(f.den.coeffs, order)


# -- hypergeometric-type q-sums ----------------------------------------------

@dataclass(frozen=True)
class QSummand:
    """Term ``sign^k ratio^k [w1 k + w0] q^(e2 k^2 + e1 k) prod(numer)_k / prod(denom)_k``.

    ``numer`` and ``denom`` hold ``(PochArg, step)`` pairs; repeat a pair to raise
    it to a power.
    """

    numer: tuple[tuple[PochArg, int], ...]
    denom: tuple[tuple[PochArg, int], ...]
    weight: tuple[int, int] = (6, 1)
    qexp: tuple[int, int] = (0, 0)
    sign: int = 1
    ratio: Fraction = Fraction(1)


def _pochs(*items: tuple[PochArg, int, int]) -> tuple[tuple[PochArg, int], ...]:
    out = []
    for x, step, power in items:
        out.extend([(x, step)] * power)
    return tuple(out)


def hyper_sum(s: QSummand, upper: int) -> QRat:
    """Exact value of ``sum_{k=0}^{upper}`` of the summand.

    Terms are accumulated over the common denominator ``prod(denom)_upper``
    (the Pochhammer products are nested in k), and reduced once at the end.
    """
    acc = ZERO
    num_prod, den_prod = ONE, ONE
    sign_ratio = Fraction(1)
    for k in range(upper + 1):
        if k:
            for x, step in s.numer:
                if x.coeff:
                    fn, fd = _factor(x.coeff, x.exp + step * (k - 1))
                    num_prod, den_prod, acc = num_prod * fn, den_prod * fd, acc * fd
            for x, step in s.denom:
                if x.coeff:
                    fd, fn = _factor(x.coeff, x.exp + step * (k - 1))
                    num_prod, den_prod, acc = num_prod * fn, den_prod * fd, acc * fd
            sign_ratio *= s.sign * s.ratio
        if num_prod.is_zero():
            break
        e = s.qexp[0] * k * k + s.qexp[1] * k
        if e < 0:
            raise ValueError("summand q-power must be a polynomial")
        w = q_integer(s.weight[0] * k + s.weight[1])
        acc = acc + (w * num_prod).shift(e).scale(sign_ratio)
    if den_prod.is_zero():
        raise ZeroDivisionError("summand denominator vanishes")
    return QRat(acc, den_prod)


def _check_truncation(n: int, upper: int) -> None:
    if n < 1 or n % 2 == 0:
        raise InapplicableError(f"n must be a positive odd integer, got {n}")
    if upper not in ((n - 1) // 2, n - 1):
        raise InapplicableError(f"upper index must be (n-1)/2 or n-1, got {upper}")


def _check_params(*params: Fraction) -> None:
    if any(p == 0 for p in params):
        raise DegenerateParameters("parameters must be nonzero")


def summand_A() -> QSummand:
    q1 = arg(1, 1)
    return QSummand(
        numer=_pochs((q1, 2, 3), (q1, 4, 1)),
        denom=_pochs((arg(1, 2), 2, 1), (arg(1, 4), 4, 3)),
        weight=(6, 1), qexp=(1, 1),
    )


def summand_B() -> QSummand:
    q1 = arg(1, 1)
    return QSummand(
        numer=_pochs((q1, 2, 2), (arg(1, 2), 4, 1), (q1, 4, 2)),
        denom=_pochs((arg(1, 2), 2, 2), (arg(1, 4), 4, 3)),
        weight=(6, 1), qexp=(0, 2),
    )


def summand_C() -> QSummand:
    return QSummand(
        numer=_pochs((arg(1, 1), 2, 4), (arg(1, 2), 4, 1)),
        denom=_pochs((arg(1, 2), 2, 4), (arg(1, 4), 4, 1)),
        weight=(4, 1), qexp=(0, 1), sign=-1,
    )


def summand_lemma1(a: Scalar, b: Scalar) -> QSummand:
    a, b = Fraction(a), Fraction(b)
    _check_params(a, b)
    return QSummand(
        numer=_pochs((arg(1, 1), 2, 1), (arg(a, 1), 2, 1), (arg(1 / a, 1), 2, 1),
                     (arg(1 / b, 1), 4, 1)),
        denom=_pochs((arg(1, 4), 4, 1), (arg(1 / a, 4), 4, 1), (arg(a, 4), 4, 1),
                     (arg(b, 2), 2, 1)),
        weight=(6, 1), qexp=(1, 1), ratio=b,
    )


def summand_lemma2(a: Scalar, b: Scalar) -> QSummand:
    a, b = Fraction(a), Fraction(b)
    _check_params(a, b)
    return QSummand(
        numer=_pochs((arg(a, 1), 2, 1), (arg(1 / a, 1), 2, 1), (arg(1, 2), 4, 1),
                     (arg(b, 1), 4, 1), (arg(1 / b, 1), 4, 1)),
        denom=_pochs((arg(1, 4), 4, 1), (arg(1 / a, 4), 4, 1), (arg(a, 4), 4, 1),
                     (arg(1 / b, 2), 2, 1), (arg(b, 2), 2, 1)),
        weight=(6, 1), qexp=(0, 2),
    )


def sum_A(n: int, upper: int) -> QRat:
    _check_truncation(n, upper)
    return hyper_sum(summand_A(), upper)


def sum_B(n: int, upper: int) -> QRat:
    _check_truncation(n, upper)
    return hyper_sum(summand_B(), upper)


def sum_C(n: int, upper: int) -> QRat:
    _check_truncation(n, upper)
    return hyper_sum(summand_C(), upper)


def sum_lemma1(n: int, upper: int, a: Scalar, b: Scalar) -> QRat:
    _check_truncation(n, upper)
    return hyper_sum(summand_lemma1(a, b), upper)


def sum_lemma2(n: int, upper: int, a: Scalar, b: Scalar) -> QRat:
    _check_truncation(n, upper)
    return hyper_sum(summand_lemma2(a, b), upper)


# -- closed forms -------------------------------------------------------------

def _poch_ratio(numer: Sequence[PochArg], denom: Sequence[PochArg], step: int, k: int) -> QRat:
    out = QRat(ONE)
    for x in numer:
        out = out * qpoch(x, step, k)
    for x in denom:
        out = out / qpoch(x, step, k)
    return out


def _qint(r: int) -> QRat:
    return QRat(q_integer(r))


def _require_residue(claim: str, n: int, residues: tuple[int, ...]) -> None:
    if n < 1 or n % 4 not in residues:
        want = " or ".join(str(r) for r in residues)
        raise InapplicableError(f"{claim} needs n = {want} (mod 4), got n = {n}")


def rhs_closed(claim: str, n: int) -> QRat:
    """Closed-form right-hand side of a non-parametric q-congruence."""
    q2, q4 = arg(1, 2), arg(1, 4)
    if claim == "thm1":
        _require_residue(claim, n, (3,))
        return QRat(ZERO)
    if claim == "thm2":
        _require_residue(claim, n, (1,))
        m = (n - 1) // 4
        tail = QRat(ZERO)
        for j in range(1, m + 1):
            tail = tail + QRat.monomial(1, 4 * j) / _qint(4 * j) ** 2
        return (_qint(n) * QRat.monomial(1, (1 - n) // 4) * _poch_ratio([q2], [q4], 4, m)
                * (1 - _qint(n) ** 2 * tail))
    if claim == "thm3":
        _require_residue(claim, n, (3,))
        m = (3 * n - 1) // 4
        return (_qint(3 * n) * QRat.monomial(1, 2 * n) * QRat(QPoly.binomial(2, -1, n))
                / QRat(QPoly.binomial(1, 1, n)) ** 2 * _poch_ratio([q2], [q4], 4, m) ** 2)
    if claim == "thm4":
        _require_residue(claim, n, (1,))
        m = (n - 1) // 4
        tail = QRat(ZERO)
        for j in range(1, (n - 1) // 2 + 1):
            tail = tail + QRat.monomial((-1) ** (j + 1), 2 * j) / _qint(2 * j) ** 2
        return (_qint(n) * _poch_ratio([q2], [q4], 4, m) ** 2
                * (1 + _qint(n) ** 2 * QRat(QPoly.binomial(2, -1, n)) * tail))
    if claim == "guo_wy":
        _require_residue(claim, n, (1, 3))
        if n % 4 == 3:
            return QRat(ZERO)
        m = (n - 1) // 4
        return _qint(n) * _poch_ratio([q2], [q4], 4, m) ** 2
    raise ValueError(f"no closed form registered for {claim!r}")


def check_generic(a: Fraction, b: Fraction) -> None:
    if a == 0 or b == 0:
        raise DegenerateParameters("a and b must be nonzero")
    if a == b:
        raise DegenerateParameters("a = b makes (a - b) vanish")
    if a * b == 1:
        raise DegenerateParameters("ab = 1 makes (1 - ab) vanish")


def rhs_parametric(claim: str, n: int, a: Scalar, b: Scalar, *,
                   thm5_tail_step: int = 4) -> QRat:
    """Right-hand side of a two-parameter congruence at the specialization (a, b).

    ``thm5_tail_step`` is the Pochhammer base exponent in the denominator of the
    second thm5 term; the congruence holds for 4 and fails for 2 (kept for
    regression tests).
    """
    a, b = Fraction(a), Fraction(b)
    check_generic(a, b)
    lin = QPoly.binomial
    u = QRat(ONE) / ((a - b) * (1 - a * b))
    if claim == "thm5":
        _require_residue(claim, n, (3,))
        b3, m, m3 = b ** 3, (n + 1) // 4, (3 * n - 1) // 4
        first = (QRat(lin(b, -1, n) * lin(a * b - 1 - a * a, a, n)) * u
                 * _poch_ratio([arg(1, 3), arg(1 / b3)], [arg(1, -1), arg(b3, 2)], 4, m)
                 * QRat.monomial(b3 ** m, -m))
        tail = (_poch_ratio([arg(1, 3), arg(1, 5)], [], 4, m3)
                / _poch_ratio([arg(a, 4), arg(1 / a, 4)], [], thm5_tail_step, m3))
        return first + QRat(lin(1, -a, n) * lin(a, -1, n)) * u * tail
    if claim == "thm6":
        _require_residue(claim, n, (1,))
        m = (n - 1) // 4
        first = (QRat(lin(b, -1, n) * lin(a * b - 1 - a * a, a, n)) * u
                 * _poch_ratio([arg(1, 5), arg(1 / b, 2)], [arg(1, 1), arg(b, 4)], 4, m)
                 * QRat.monomial(b ** m, -m))
        second = (QRat(lin(1, -a, n) * lin(a, -1, n)) * u
                  * _poch_ratio([arg(1, 3), arg(1, 5)], [arg(a, 4), arg(1 / a, 4)], 4, m))
        return first + second
    if claim == "thm7":
        _require_residue(claim, n, (3,))
        b3, m, m3 = b ** 3, (n + 1) // 4, (3 * n - 1) // 4
        first = (QRat(lin(1, -a, n) * lin(a, -1, n) * lin(-1 - b * b, b, n)) * -u
                 * _poch_ratio([arg(1, 5), arg(a, 2), arg(1 / a, 2)],
                               [arg(1, 1), arg(1 / a, 4), arg(a, 4)], 4, m3))
        second = (QRat(lin(1, -b, n) * lin(b, -1, n) * lin(-1 - a * a, a, n)) * u
                  * _poch_ratio([arg(1, 3), arg(b3), arg(1 / b3)],
                                [arg(1, -1), arg(1 / b3, 2), arg(b3, 2)], 4, m))
        return first + second
    if claim == "thm8":
        _require_residue(claim, n, (1,))
        m = (n - 1) // 4
        first = (QRat(lin(1, -a, n) * lin(a, -1, n) * lin(-1 - b * b, b, n)) * -u
                 * _poch_ratio([arg(1, 5), arg(a, 2), arg(1 / a, 2)],
                               [arg(1, 1), arg(1 / a, 4), arg(a, 4)], 4, m))
        second = (QRat(lin(1, -b, n) * lin(b, -1, n) * lin(-1 - a * a, a, n)) * u
                  * _poch_ratio([arg(1, 5), arg(b, 2), arg(1 / b, 2)],
                                [arg(1, 1), arg(1 / b, 4), arg(b, 4)], 4, m))
        return first + second
    raise ValueError(f"no parametric closed form registered for {claim!r}")


def lhs_parametric(claim: str, n: int, upper: int, a: Scalar, b: Scalar) -> QRat:
    """Left-hand side of a two-parameter congruence (b is cubed for thm5/thm7)."""
    a, b = Fraction(a), Fraction(b)
    if claim == "thm5":
        return sum_lemma1(n, upper, a, b ** 3)
    if claim == "thm6":
        return sum_lemma1(n, upper, a, b)
    if claim == "thm7":
        return sum_lemma2(n, upper, a, b ** 3)
    if claim == "thm8":
        return sum_lemma2(n, upper, a, b)
    raise ValueError(f"no parametric sum registered for {claim!r}")


# -- the bibasic summation identities as formal series -------------------------

def _require_nonunit(label: str, c: Fraction) -> None:
    if c == 1:
        raise DegenerateParameters(f"constant factor (1 - {label}) vanishes")


def _apply(s: FormalSeries, factors, *, divide: bool) -> FormalSeries:
    for c, e in factors:
        s = s.div_binomial(c, e) if divide else s.mul_binomial(c, e)
    return s


def _inf_product(numer, denom, order: int) -> FormalSeries:
    """``prod (x; q^s)_inf / prod (y; q^s)_inf``; entries are (label, coeff, exp, step)."""
    s = FormalSeries.one(order)
    for _, c, e, step in numer:
        s = s * qpoch_inf(PochArg(c, e) if c else PochArg(0), step, order)
    for label, c, e, step in denom:
        if e == 0:
            _require_nonunit(label, c)
        s = s / qpoch_inf(PochArg(c, e) if c else PochArg(0), step, order)
    return s


def _step_factors(items, k: int):
    """Factors ``(c, e + step*k)`` contributed when a Pochhammer index grows past k."""
    return [(c, e + step * k) for c, e, step in items]


def gr_sides(a: Scalar, b: Scalar, d: Scalar, f: Scalar, order: int,
             *, printed_prefactor: bool = False) -> tuple[FormalSeries, FormalSeries]:
    """Both sides of the nonterminating quadratic summation, as series in q.

    The left side is a very-well-poised bibasic sum plus an infinite-product
    multiple of a 3phi2 in base q^2. ``printed_prefactor`` swaps the factor
    ``(a^2 q/df; q^2)_inf`` of that multiple for ``(a q^2/df; q^2)_inf``; the
    identity fails in that form.
    """
    a, b, d, f = (Fraction(x) for x in (a, b, d, f))
    if 0 in (a, b, d, f):
        raise DegenerateParameters("parameters must be nonzero")
    _require_nonunit("a", a)
    for label, c in (("df/a", d * f / a), ("a/f", a / f), ("bf/a", b * f / a)):
        _require_nonunit(label, c)
    N = order

    numer = [(a, 0, 1), (b, 0, 1), (1 / b, 1, 1), (d, 0, 2), (f, 0, 2), (a * a / (d * f), 1, 2)]
    denom = [(Fraction(1), 2, 2), (a / b, 2, 2), (a * b, 1, 2), (a / d, 1, 1), (a / f, 1, 1),
             (d * f / a, 0, 1)]
    core = FormalSeries.one(N)
    lhs = FormalSeries((), N)
    for k in range(N + 1):
        if k:
            core = _apply(core, _step_factors(numer, k - 1), divide=False)
            core = _apply(core, _step_factors(denom, k - 1), divide=True)
        term = core.mul_binomial(a, 3 * k).scale(1 / (1 - a)).shift(k)
        lhs = lhs + term

    pair = (a * a / (d * f), 1) if not printed_prefactor else (a / (d * f), 2)
    pre = _inf_product(
        [("aq", a, 1, 1), ("f/a", f / a, 0, 1), ("b", b, 0, 1), ("q/b", 1 / b, 1, 1),
         ("d", d, 0, 2), ("pair", pair[0], pair[1], 2), ("fq^2/d", f / d, 2, 2),
         ("df^2q/a^2", d * f * f / (a * a), 1, 2)],
        [("a/f", a / f, 0, 1), ("fq/a", f / a, 1, 1), ("aq/d", a / d, 1, 1),
         ("df/a", d * f / a, 0, 1), ("aq^2/b", a / b, 2, 2), ("abq", a * b, 1, 2),
         ("fq/ab", f / (a * b), 1, 2), ("bf/a", b * f / a, 0, 2)],
        N,
    )
    phi_num = [(f, 0, 2), (b * f / a, 0, 2), (f / (a * b), 1, 2)]
    phi_den = [(Fraction(1), 2, 2), (f / d, 2, 2), (d * f * f / (a * a), 1, 2)]
    core = FormalSeries.one(N)
    phi = FormalSeries((), N)
    for j in range(N // 2 + 1):
        if j:
            core = _apply(core, _step_factors(phi_num, j - 1), divide=False)
            core = _apply(core, _step_factors(phi_den, j - 1), divide=True)
        phi = phi + core.shift(2 * j)
    lhs = lhs + pre * phi

    rhs = _inf_product(
        [("aq", a, 1, 1), ("f/a", f / a, 0, 1), ("aq^2/bd", a / (b * d), 2, 2),
         ("abq/d", a * b / d, 1, 2), ("bdf/a", b * d * f / a, 0, 2),
         ("dfq/ab", d * f / (a * b), 1, 2)],
        [("aq/d", a / d, 1, 1), ("df/a", d * f / a, 0, 1), ("aq^2/b", a / b, 2, 2),
         ("abq", a * b, 1, 2), ("bf/a", b * f / a, 0, 2), ("fq/ab", f / (a * b), 1, 2)],
        N,
    )
    return lhs, rhs


def gr_a_sides(a: Scalar, b: Scalar, f: Scalar, order: int,
               *, well_poised_exp: int = 3) -> tuple[FormalSeries, FormalSeries]:
    """Both sides of the limiting (d = q^{-2n}, n -> oo) form of :func:`gr_sides`.

    ``well_poised_exp`` is the e in the factor ``1 - a q^{ek}``; only 3 is an identity.
    """
    a, b, f = (Fraction(x) for x in (a, b, f))
    if 0 in (a, b, f):
        raise DegenerateParameters("parameters must be nonzero")
    _require_nonunit("a", a)
    N = order
    numer = [(a, 0, 1), (b, 0, 1), (1 / b, 1, 1), (f, 0, 2)]
    denom = [(Fraction(1), 2, 2), (a / b, 2, 2), (a * b, 1, 2), (a / f, 1, 1)]
    core = FormalSeries.one(N)
    lhs = FormalSeries((), N)
    k = 0
    while (k * k + k) // 2 <= N:
        if k:
            core = _apply(core, _step_factors(numer, k - 1), divide=False)
            core = _apply(core, _step_factors(denom, k - 1), divide=True)
        term = core.mul_binomial(a, well_poised_exp * k).scale((a / f) ** k / (1 - a)).shift((k * k + k) // 2)
        lhs = lhs + term
        k += 1
    rhs = _inf_product(
        [("aq", a, 1, 2), ("aq^2", a, 2, 2), ("aq^2/bf", a / (b * f), 2, 2),
         ("abq/f", a * b / f, 1, 2)],
        [("aq/f", a / f, 1, 2), ("aq^2/f", a / f, 2, 2), ("aq^2/b", a / b, 2, 2),
         ("abq", a * b, 1, 2)],
        N,
    )
    return lhs, rhs


__all__ = [
    "PochArg", "arg", "qpoch", "qpoch_inf", "FormalSeries", "series_arith", "series_of_rat",
    "QSummand", "hyper_sum", "summand_A", "summand_B", "summand_C", "summand_lemma1",
    "summand_lemma2", "sum_A", "sum_B", "sum_C", "sum_lemma1", "sum_lemma2", "rhs_closed",
    "rhs_parametric", "lhs_parametric", "gr_sides", "gr_a_sides", "check_generic",
]
