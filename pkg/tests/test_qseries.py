"""q-series builders and their algebraic identities."""

import math

import pytest

from octabasic.polyring import Poly
from octabasic.qseries import (
    bracket_q,
    bracket2,
    choose2,
    qbinomial,
    qfactorial,
    qfactorial_coefficients,
    qpochhammer_power,
)

q = Poly.variable("q")


def test_bracket_q():
    assert bracket_q(0) == 0
    assert bracket_q(2) == 1 + q
    assert bracket_q(4) == 1 + q + q ** 2 + q ** 3
    with pytest.raises(ValueError):
        bracket_q(-1)


def test_bracket2():
    r, s = Poly.variable("r"), Poly.variable("s")
    assert bracket2(0, "r", "s") == 0
    assert bracket2(1, "p", "q") == 1
    assert bracket2(3, "r", "s") == r ** 2 + r * s + s ** 2
    with pytest.raises(ValueError):
        bracket2(2, "r", "r")


def test_bracket2_telescoping():
    r, s = Poly.variable("r"), Poly.variable("s")
    for n in range(13):
        assert (r - s) * bracket2(n, "r", "s") == r ** n - s ** n


def test_bracket_q_is_specialized_bracket2():
    for n in range(8):
        spec = bracket2(n, "r", "s").substitute({"r": q, "s": Poly.one()})
        assert spec == bracket_q(n)


def test_qfactorial():
    assert qfactorial(0) == 1
    assert qfactorial(2) == 1 + q
    assert qfactorial(3) == 1 + 2 * q + 2 * q ** 2 + q ** 3


def test_qfactorial_coefficients():
    for n in range(7):
        poly = Poly.from_terms(({"q": e}, c) for e, c in qfactorial_coefficients(n).items())
        assert poly == qfactorial(n)


def test_qfactorial_at_one_is_factorial():
    for n in range(11):
        assert qfactorial(n).eval_numeric({"q": 1}) == math.factorial(n)


def test_qbinomial():
    assert qbinomial(5, 0) == 1
    assert qbinomial(2, 1) == 1 + q
    assert qbinomial(4, 2) == 1 + q + 2 * q ** 2 + q ** 3 + q ** 4
    assert qbinomial(3, -1) == 0
    assert qbinomial(3, 4) == 0


def test_qbinomial_symmetry():
    for n in range(13):
        for k in range(n + 1):
            assert qbinomial(n, k) == qbinomial(n, n - k)


def test_qbinomial_factorization():
    for n in range(11):
        for k in range(n + 1):
            assert qfactorial(n) == qbinomial(n, k) * qfactorial(k) * qfactorial(n - k)


def test_qpochhammer_power():
    assert qpochhammer_power(0, 0) == 1
    assert qpochhammer_power(0, 1) == 1 - q
    assert qpochhammer_power(0, 2) == 1 - q - q ** 2 + q ** 3
    assert qpochhammer_power(1, 2) == (1 - q ** 2) * (1 - q ** 3)
    with pytest.raises(ValueError):
        qpochhammer_power(-1, 2)


def test_choose2():
    assert choose2(2) == 1
    assert choose2(0) == 0
    assert choose2(-1) == 1
    assert choose2(-2) == 3
    assert [choose2(m) for m in range(6)] == [0, 0, 1, 3, 6, 10]
