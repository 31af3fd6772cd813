"""Ring arithmetic, substitution, evaluation, division, serialization."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from octabasic.polyring import (
    InexactDivision,
    NonInvertibleSubstitution,
    Poly,
    VARIABLES,
)

q = Poly.variable("q")
a = Poly.variable("a")
b = Poly.variable("b")
x = Poly.variable("x")


def test_construction_and_equality():
    assert Poly.zero() == 0
    assert Poly.one() == 1
    assert Poly.constant(5) == 5
    assert Poly(3) == Poly.constant(3)
    assert Poly.monomial({"q": 2}, 4) == 4 * q * q
    assert Poly.variable("q", -1) * q == 1


def test_add_cancellation():
    assert q + (-q) == 0
    assert ((1 + q) + (q + q * q)) == 1 + 2 * q + q ** 2


def test_add_bracket_builders():
    # a*[1]_{r,s} + b*[0]_{t,u} collapses to a
    from octabasic.qseries import bracket2

    assert a * bracket2(1, "r", "s") + b * bracket2(0, "t", "u") == a


def test_mul_identity_and_expansion():
    f = 1 + q + 3 * q ** 5
    assert Poly.one() * f == f
    assert (1 + q) * (1 + q + q ** 2) == 1 + 2 * q + 2 * q ** 2 + q ** 3
    assert Poly.variable("q", -1) * q == 1


def test_pow_negative_unit_monomials_only():
    assert (2 * q) ** 2 == 4 * q ** 2
    assert (-q) ** -3 == -Poly.variable("q", -3)
    with pytest.raises(NonInvertibleSubstitution):
        (1 + q) ** -1
    with pytest.raises(NonInvertibleSubstitution):
        (2 * q) ** -1


def test_substitute_examples():
    f = a ** 2 + a * b
    assert f.substitute({"a": Poly.variable("q", -1), "b": Poly.one()}) == \
        Poly.variable("q", -2) + Poly.variable("q", -1)
    assert f.substitute({"a": q, "b": Poly.one()}) == q ** 2 + q
    assert f.substitute({}) == f
    assert f.substitute({"a": a, "b": b}) == f


def test_substitute_noninvertible_raises():
    f = Poly.variable("a", -2)
    with pytest.raises(NonInvertibleSubstitution):
        f.substitute({"a": 1 + q})
    with pytest.raises(NonInvertibleSubstitution):
        f.substitute({"a": 2 * q})
    assert f.substitute({"a": -q}) == Poly.variable("q", -2)


def test_eval_numeric():
    assert (1 + q).eval_numeric({"q": 0.5}) == 1.5
    assert Poly.variable("q", -1).eval_numeric({"q": 0.5}) == 2.0
    three_fact = 1 + 2 * q + 2 * q ** 2 + q ** 3
    assert three_fact.eval_numeric({"q": 0.5}) == pytest.approx(2.625, rel=1e-15)
    assert (a + q).eval_numeric({"a": Fraction(1, 3), "q": Fraction(1, 6)}) == Fraction(1, 2)


def test_eval_numeric_errors():
    with pytest.raises(ZeroDivisionError):
        Poly.variable("q", -1).eval_numeric({"q": 0})
    with pytest.raises(ValueError):
        (a + q).eval_numeric({"q": 0.5})


def test_exact_divide():
    f = a ** 2 + a * b
    assert f.exact_divide(a) == a + b
    assert f.exact_divide(f) == 1
    assert (q + q ** 2).exact_divide(1 + q) == q
    assert (1 + q).exact_divide(q) == 1 + Poly.variable("q", -1)
    assert Poly.zero().exact_divide(1 + q) == 0


def test_exact_divide_errors():
    with pytest.raises(ZeroDivisionError):
        q.exact_divide(Poly.zero())
    with pytest.raises(InexactDivision):
        (1 + q ** 2).exact_divide(1 + q)
    with pytest.raises(InexactDivision):
        (2 + 2 * q + q ** 2).exact_divide(2 + q)


def test_json_round_trip():
    f = a ** 2 - 3 * a * b + Poly.variable("q", -2) * 7
    obj = f.to_json()
    assert all(set(entry) == {"coeff", "exps"} for entry in obj)
    assert json.loads(json.dumps(obj)) == obj
    assert Poly.from_json(obj) == f
    # canonical ordering: exponent vectors ascending
    keys = [tuple(entry["exps"].get(v, 0) for v in VARIABLES) for entry in obj]
    assert keys == sorted(keys)


def test_str():
    assert str(Poly.zero()) == "0"
    assert str(1 - q) == "1 - q"
    assert str(x - a) == "x - a"
    assert str(Poly.variable("q", -1)) == "q^-1"


def test_coefficients_in():
    f = x ** 2 * a + x * (1 + q) + 3
    split = f.coefficients_in("x")
    assert split[2] == a and split[1] == 1 + q and split[0] == 3
    rebuilt = sum((c * Poly.variable("x", e) for e, c in split.items()), Poly.zero())
    assert rebuilt == f


# -- property tests ----------------------------------------------------------

names = st.sampled_from(["a", "q", "x"])
exponents = st.dictionaries(names, st.integers(-3, 3), max_size=3)
laurent_polys = st.lists(
    st.tuples(exponents, st.integers(-9, 9)), max_size=4
).map(Poly.from_terms)
plain_exponents = st.dictionaries(names, st.integers(0, 3), max_size=3)
plain_polys = st.lists(
    st.tuples(plain_exponents, st.integers(-9, 9)), max_size=4
).map(Poly.from_terms)
unit_monomials = st.builds(
    lambda e, sign: Poly.monomial({"q": e}, sign),
    st.integers(-2, 2),
    st.sampled_from([1, -1]),
)


@given(laurent_polys, laurent_polys, laurent_polys)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert f + (-f) == 0
    assert f + 0 == f
    assert f * 1 == f


@given(laurent_polys, laurent_polys)
def test_canonical_no_zero_coefficients(f, g):
    for result in (f + g, f * g, f - g):
        assert all(c != 0 for c in result._terms.values())


@given(laurent_polys, laurent_polys, unit_monomials, unit_monomials)
def test_substitute_respects_multiplication(f, g, va, vq):
    mapping = {"a": va, "q": vq}
    assert (f * g).substitute(mapping) == f.substitute(mapping) * g.substitute(mapping)


@given(plain_polys, plain_polys, plain_polys)
def test_substitute_respects_multiplication_general_values(f, g, value):
    mapping = {"a": value}
    assert (f * g).substitute(mapping) == f.substitute(mapping) * g.substitute(mapping)


small_fractions = st.fractions(
    min_value=Fraction(1, 10), max_value=Fraction(9, 10), max_denominator=16
)


@given(laurent_polys, st.integers(-2, 2), small_fractions, small_fractions, small_fractions)
@settings(max_examples=60)
def test_eval_after_substitute_composes(f, e, va, vq, vx):
    mapping = {"a": Poly.monomial({"q": e})}
    values = {"a": va, "q": vq, "x": vx}
    direct = f.substitute(mapping).eval_numeric(values)
    composed = f.eval_numeric({"a": vq ** e, "q": vq, "x": vx})
    assert direct == composed  # exact rational arithmetic


@given(laurent_polys, laurent_polys)
def test_exact_divide_inverts_multiplication(f, g):
    if g.is_zero():
        return
    assert (f * g).exact_divide(g) == f
