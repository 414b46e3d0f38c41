"""Exact rational scalars, polynomials in q, and rational functions in q.

Coefficients are :class:`fractions.Fraction` at the API boundary. Internally a
:class:`QPoly` wraps a FLINT ``fmpq_poly`` so that products, exact division and
gcds stay fast at the degrees (a few thousand) that the truncated q-sums reach.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

import flint

BigRational = Fraction
Scalar = Union[int, Fraction]

#: Valuation of the zero element.
INFINITY = math.inf


class PoleError(ZeroDivisionError):
    """A rational function was evaluated at a zero of its denominator."""


def _fmpq(c: Scalar) -> flint.fmpq:
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _fraction(c: flint.fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _to_flint(coeffs: Iterable[Scalar]) -> flint.fmpq_poly:
    cs = [Fraction(c) for c in coeffs]
    if not cs:
        return flint.fmpq_poly()
    den = math.lcm(*(c.denominator for c in cs))
    return flint.fmpq_poly([c.numerator * (den // c.denominator) for c in cs], den)


class QPoly:
    """Dense univariate polynomial in ``q`` with rational coefficients.

    Immutable. ``coeffs[i]`` is the coefficient of ``q**i``; the zero
    polynomial has no coefficients.
    """

    __slots__ = ("_p",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self._p = _to_flint(coeffs)

    @classmethod
    def _wrap(cls, p: flint.fmpq_poly) -> "QPoly":
        obj = cls.__new__(cls)
        obj._p = p
        return obj

    @classmethod
    def constant(cls, c: Scalar) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: Scalar, e: int) -> "QPoly":
        """``c * q**e`` for ``e >= 0``."""
        if e < 0:
            raise ValueError("negative exponent; use QRat.monomial")
        return cls._wrap(_to_flint((c,)).left_shift(e)) if c else cls()

    @classmethod
    def binomial(cls, c0: Scalar, c1: Scalar, e: int) -> "QPoly":
        """``c0 + c1 * q**e``."""
        if e == 0:
            return cls((Fraction(c0) + Fraction(c1),))
        return cls.constant(c0) + cls.monomial(c1, e)

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(_fraction(c) for c in self._p.coeffs())

    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return self._p.degree()

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_constant(self) -> bool:
        return self._p.degree() <= 0

    def leading(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        return _fraction(self._p.leading_coefficient())

    def __getitem__(self, i: int) -> Fraction:
        return _fraction(self._p[i])

    def __bool__(self) -> bool:
        return not self._p.is_zero()

    def __len__(self) -> int:
        return self._p.length()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self._p == other._p
        if isinstance(other, (int, Fraction)):
            return self._p == _to_flint((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(map(str, self.coeffs))})"

    def __str__(self) -> str:
        return str(self._p).replace("x", "q")

    # -- ring operations --------------------------------------------------
    @staticmethod
    def _coerce(x) -> flint.fmpq_poly:
        if isinstance(x, QPoly):
            return x._p
        if isinstance(x, (int, Fraction)):
            return _to_flint((x,))
        raise TypeError(f"cannot combine QPoly with {type(x).__name__}")

    def __add__(self, other) -> "QPoly":
        return QPoly._wrap(self._p + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other) -> "QPoly":
        return QPoly._wrap(self._p - self._coerce(other))

    def __rsub__(self, other) -> "QPoly":
        return QPoly._wrap(self._coerce(other) - self._p)

    def __neg__(self) -> "QPoly":
        return QPoly._wrap(-self._p)

    def __mul__(self, other) -> "QPoly":
        return QPoly._wrap(self._p * self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        return QPoly._wrap(self._p ** k)

    def __divmod__(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        return poly_divrem(self, other)

    def __floordiv__(self, other: "QPoly") -> "QPoly":
        return poly_divrem(self, other)[0]

    def __mod__(self, other: "QPoly") -> "QPoly":
        return poly_divrem(self, other)[1]

    def __call__(self, x: Scalar) -> Fraction:
        return _fraction(self._p(_fmpq(x)))

    def shift(self, e: int) -> "QPoly":
        """Multiply by ``q**e`` (``e >= 0``)."""
        return QPoly._wrap(self._p.left_shift(e))

    def scale(self, c: Scalar) -> "QPoly":
        return QPoly._wrap(self._p * _fmpq(c))

    def monic(self) -> "QPoly":
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic associate")
        return QPoly._wrap(self._p / self._p.leading_coefficient())

    def gcd(self, other: "QPoly") -> "QPoly":
        return poly_gcd(self, other)

    def divides(self, other: "QPoly") -> bool:
        """True when ``self | other``."""
        return poly_divrem(other, self)[1].is_zero()


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


def poly_arith(a: QPoly, b, op: str) -> QPoly:
    """Ring operation by name: ``add``, ``sub``, ``mul`` or ``scale`` (b a scalar)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_divrem(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    """Quotient and remainder with ``a = quot*b + rem`` and ``deg rem < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    quot, rem = divmod(a._p, b._p)
    return QPoly._wrap(quot), QPoly._wrap(rem)


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if b.is_zero():
        return a.monic()
    if a.is_zero():
        return b.monic()
    return QPoly._wrap(a._p.gcd(b._p)).monic()


def exact_div(a: QPoly, b: QPoly) -> QPoly:
    quot, rem = poly_divrem(a, b)
    if not rem.is_zero():
        raise ArithmeticError(f"{b} does not divide {a}")
    return quot


def _mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> QPoly:
    """The n-th cyclotomic polynomial, as prod over d | n of (q^d - 1)^mu(n/d)."""
    if n < 1:
        raise ValueError("cyclotomic polynomials are indexed by n >= 1")
    num, den = ONE, ONE
    for d in divisors(n):
        mu = _mobius(n // d)
        if mu == 1:
            num = num * QPoly.binomial(-1, 1, d)
        elif mu == -1:
            den = den * QPoly.binomial(-1, 1, d)
    return exact_div(num, den)


def q_integer(r: int) -> QPoly:
    """``[r] = 1 + q + ... + q^(r-1)``; ``[0] = 0``."""
    if r < 0:
        raise ValueError("q-integer needs r >= 0")
    return QPoly._wrap(flint.fmpq_poly([1] * r)) if r else ZERO


class QRat:
    """Reduced quotient of two polynomials in ``q`` with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE, *, reduced: bool = False):
        num = num if isinstance(num, QPoly) else QPoly.constant(num)
        den = den if isinstance(den, QPoly) else QPoly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        elif not reduced:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num, den = exact_div(num, g), exact_div(den, g)
        lc = den.leading()
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        self.num = num
        self.den = den

    @classmethod
    def monomial(cls, c: Scalar, e: int) -> "QRat":
        """``c * q**e`` for any integer ``e``."""
        if e >= 0:
            return cls(QPoly.monomial(c, e), reduced=True)
        return cls(QPoly.constant(c), QPoly.monomial(1, -e), reduced=True)

    @classmethod
    def of(cls, x) -> "QRat":
        return x if isinstance(x, QRat) else cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (QPoly, int, Fraction)):
            other = QRat(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"QRat({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __add__(self, other) -> "QRat":
        o = QRat.of(other)
        if self.den == o.den:
            return QRat(self.num + o.num, self.den)
        return QRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "QRat":
        return QRat(-self.num, self.den, reduced=True)

    def __sub__(self, other) -> "QRat":
        return self + (-QRat.of(other))

    def __rsub__(self, other) -> "QRat":
        return QRat.of(other) - self

    def __mul__(self, other) -> "QRat":
        o = QRat.of(other)
        # cross-cancel before multiplying to keep gcd inputs small
        g1 = poly_gcd(self.num, o.den) if not self.is_zero() else ONE
        g2 = poly_gcd(o.num, self.den) if not o.is_zero() else ONE
        num = exact_div(self.num, g1) * exact_div(o.num, g2)
        den = exact_div(self.den, g2) * exact_div(o.den, g1)
        return QRat(num, den, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return QRat(self.den, self.num, reduced=True)

    def __truediv__(self, other) -> "QRat":
        return self * QRat.of(other).inverse()

    def __rtruediv__(self, other) -> "QRat":
        return QRat.of(other) * self.inverse()

    def __pow__(self, k: int) -> "QRat":
        if k < 0:
            return self.inverse() ** (-k)
        return QRat(self.num ** k, self.den ** k, reduced=True)


def rat_arith(a: QRat, b: QRat | None, op: str) -> QRat:
    """Field operation by name: ``add``, ``sub``, ``mul``, ``div`` or ``neg``."""
    if op == "neg":
        return -a
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown rational-function operation {op!r}")


def multiplicity(f: QPoly, m: QPoly) -> int | float:
    """Largest k with m**k | f, by repeated exact division."""
    if f.is_zero():
        return INFINITY
    if m.is_constant():
        raise ValueError("multiplicity of a constant is undefined")
    k = 0
    while True:
        quot, rem = poly_divrem(f, m)
        if not rem.is_zero():
            return k
        f, k = quot, k + 1


def valuation_at(f: QRat, m: QPoly) -> int | float:
    """Order of the irreducible polynomial ``m`` in ``f``; :data:`INFINITY` for f = 0."""
    if f.is_zero():
        return INFINITY
    return multiplicity(f.num, m) - multiplicity(f.den, m)


def eval_rat(f: QRat, q0: Scalar) -> Fraction:
    """Value of ``f`` at ``q = q0``; at a removable point this is the limit."""
    num, den = f.num, f.den
    lin = QPoly.binomial(-Fraction(q0), 1, 1)
    while not num.is_zero() and num(q0) == 0 and den(q0) == 0:
        num, den = exact_div(num, lin), exact_div(den, lin)
    d = den(q0)
    if d == 0:
        raise PoleError(f"pole at q = {q0}")
    return num(q0) / d
