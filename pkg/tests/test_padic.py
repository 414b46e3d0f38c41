from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, strategies as st

from qcong.errors import InapplicableError
from qcong.exact import INFINITY
from qcong.padic import (
    check_padic, gamma_p, harmonic2, lhs_padic, pochhammer, rat_mod, rhs_padic, sum_classical, vp,
)

F = Fraction


def gamma_direct(n, p):
    """Definition of Gamma_p on positive integers, no modular reduction."""
    return (-1) ** n * prod(k for k in range(1, n) if k % p)


def test_vp_examples():
    assert vp(F(9, 4), 3) == 2
    assert vp(0, 7) == INFINITY
    assert vp(F(278235, 262144), 3) == 5
    assert vp(F(5, 25), 5) == -1


@given(st.fractions(max_denominator=10 ** 6).filter(bool), st.fractions(max_denominator=10 ** 6).filter(bool),
       st.sampled_from([3, 5, 7, 11]))
def test_vp_additive(x, y, p):
    assert vp(x * y, p) == vp(x, p) + vp(y, p)


def test_rat_mod():
    assert rat_mod(F(1, 2), 5, 2).value == 13
    assert rat_mod(0, 7, 3).value == 0
    with pytest.raises(ValueError):
        rat_mod(F(7, 3), 3, 1)


def test_pochhammer_and_harmonic():
    assert pochhammer(F(1, 2), 2) == F(3, 4)
    assert pochhammer(F(1, 4), 3) == F(45, 64)
    assert pochhammer(5, 0) == 1
    assert harmonic2(0) == 0
    assert harmonic2(1) == 1
    assert harmonic2(3) == F(49, 36)


@given(st.fractions(min_value=-5, max_value=5, max_denominator=8), st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_splitting(x, m, n):
    assert pochhammer(x, m + n) == pochhammer(x, m) * pochhammer(x + m, n)


def test_gamma_examples():
    assert gamma_p(1, 5, 3).value == 124
    assert gamma_p(1, 5, 1).value == 4
    assert gamma_p(5, 5, 1).value == 1
    assert gamma_p(F(3, 4), 7, 1).value == 1
    with pytest.raises(ValueError):
        gamma_p(F(1, 5), 5, 2)
    with pytest.raises(ValueError):
        gamma_p(1, 9, 2)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("e", [1, 2, 3])
def test_gamma_recurrence(p, e):
    P = p ** e
    for n in range(1, P):
        g, g1 = gamma_p(n, p, e).value, gamma_p(n + 1, p, e).value
        want = -n * g if n % p else -g
        assert (g1 - want) % P == 0


@pytest.mark.parametrize("p", [3, 5, 7])
def test_gamma_matches_definition(p):
    for n in range(p * p):
        assert gamma_p(n, p, 2).value == gamma_direct(n, p) % (p * p)


@pytest.mark.parametrize("x", [F(1, 4), F(1, 2), F(3, 4), F(-2, 3)])
@pytest.mark.parametrize("p", [5, 7, 11])
def test_gamma_precision_coherence(x, p):
    for e in range(2, 5):
        assert gamma_p(x, p, e).value % p ** (e - 1) == gamma_p(x, p, e - 1).value


def test_gamma_reflection():
    # Gamma_p(x) Gamma_p(1 - x) = +-1 for p-adic integers x
    for p in (5, 7, 13):
        for x in (F(1, 4), F(1, 2), F(2, 3)):
            g = gamma_p(x, p, 3).value * gamma_p(1 - x, p, 3).value % p ** 3
            assert g in (1, p ** 3 - 1)


def test_sum_classical_examples():
    assert sum_classical("F1", 0).value == 1
    assert sum_classical("F1", 2).value == F(278235, 262144)
    assert sum_classical("A2", 0).value == 1
    assert sum_classical("F1", 2, skip=1).value == 1 + F(1755, 262144)
    with pytest.raises(ValueError):
        sum_classical("F3", 2)


def test_sum_classical_direct():
    half, quarter = F(1, 2), F(1, 4)
    for k_max in range(6):
        a2 = sum((-1) ** k * (4 * k + 1) * pochhammer(half, k) ** 5 / pochhammer(1, k) ** 5
                 for k in range(k_max + 1))
        f2 = sum((6 * k + 1) * pochhammer(half, k) ** 3 * pochhammer(quarter, k) ** 2 / pochhammer(1, k) ** 5
                 for k in range(k_max + 1))
        assert sum_classical("A2", k_max).value == a2
        assert sum_classical("F2", k_max).value == f2


def test_rhs_examples():
    assert rhs_padic("cor1", 7, 1).value == 0
    assert rhs_padic("vanhamme", 7, 1, 3).value == 0
    g = gamma_p(F(1, 4), 5, 2).value
    assert rhs_padic("he4", 5, 1, 2).value == (-5 * g ** 4) % 25


def test_rhs_conditions():
    with pytest.raises(InapplicableError):
        rhs_padic("cor1", 5, 1)
    with pytest.raises(InapplicableError):
        rhs_padic("swisher", 5, 1)
    with pytest.raises(InapplicableError):
        rhs_padic("liu_p4", 3, 1)
    with pytest.raises(InapplicableError):
        rhs_padic("vanhamme", 5, 2)
    with pytest.raises(InapplicableError):
        rhs_padic("cor2", 9, 1)


def test_check_padic_examples():
    v = check_padic(sum_classical("F1", 2).value, rat_mod(0, 3, 4))
    assert v.passed and v.agreement == 5 and v.lhs_valuation == 5
    x = F(17, 4)
    assert check_padic(x, rat_mod(x, 5, 3)).passed
    deleted = sum_classical("F1", 2, skip=1).value
    assert not check_padic(deleted, rat_mod(0, 3, 4)).passed
    v = check_padic(F(1, 3), rat_mod(0, 3, 2))
    assert not v.passed and not v.integral


@pytest.mark.parametrize("claim, p, r", [("cor1", 3, 1), ("cor2", 3, 2), ("cor3", 7, 1), ("cor4", 5, 1),
                                         ("vanhamme", 13, 1), ("he3", 11, 1)])
def test_claims_hold(claim, p, r):
    assert check_padic(lhs_padic(claim, p, r).value, rhs_padic(claim, p, r)).passed
