"""Recurrence engine: monic sequences, moment DP, functional, orthogonality."""

import pytest

from octabasic.polyring import Poly
from octabasic.orthopoly import (
    DegreeTooHigh,
    apply_functional,
    moments_from_recurrence,
    monic_sequence,
    orthogonality_check,
    shifted_functional_table,
)
from octabasic.families import octabasic_coeffs, qjacobi_coeffs, sum2_coeffs

x = Poly.variable("x")
a = Poly.variable("a")


def test_monic_sequence_start():
    ps = monic_sequence(octabasic_coeffs(), 0)
    assert ps == [Poly.one()]
    ps = monic_sequence(octabasic_coeffs(), 1)
    assert ps[1] == x - a
    ps = monic_sequence(sum2_coeffs(), 1)
    assert ps[1] == x - Poly.variable("q")


def test_monic_and_degrees():
    ps = monic_sequence(octabasic_coeffs(), 5)
    for n, p in enumerate(ps):
        split = p.coefficients_in("x")
        assert max(split) == n
        assert split[n] == 1


def test_moments_small():
    mus = moments_from_recurrence(octabasic_coeffs(), 2)
    assert mus[0] == 1
    assert mus[1] == a
    assert mus[2] == a ** 2 + a * Poly.variable("b")


def test_moments_contain_no_x():
    mus = moments_from_recurrence(octabasic_coeffs(), 5)
    assert all("x" not in mu.variables() for mu in mus)


def test_apply_functional():
    coeffs = octabasic_coeffs()
    mus = moments_from_recurrence(coeffs, 4)
    ps = monic_sequence(coeffs, 2)
    assert apply_functional(mus, Poly.one()) == 1
    assert apply_functional(mus, ps[1]) == 0
    assert apply_functional(mus, ps[2]) == 0
    with pytest.raises(DegreeTooHigh):
        apply_functional(mus[:2], x ** 5)
    with pytest.raises(DegreeTooHigh):
        apply_functional(mus, Poly.variable("x", -1))


def test_shifted_table_matches_direct_functional():
    # the table route is only a reorganization of apply_functional
    coeffs = octabasic_coeffs()
    N = 3
    mus = moments_from_recurrence(coeffs, 2 * N)
    table = shifted_functional_table(coeffs, mus, N)
    ps = monic_sequence(coeffs, N)
    for n in range(N + 1):
        for j in range(2 * N - n + 1):
            direct = apply_functional(mus, Poly.variable("x", j) * ps[n])
            assert table[n][j] == direct


def test_orthogonality_products_match_direct_route():
    coeffs = octabasic_coeffs()
    N = 3
    mus = moments_from_recurrence(coeffs, 2 * N)
    ps = monic_sequence(coeffs, N)
    table = shifted_functional_table(coeffs, mus, N)
    for n in range(N + 1):
        for m in range(n + 1):
            direct = apply_functional(mus, ps[n] * ps[m])
            via_table = Poly.zero()
            for j, c in ps[m].coefficients_in("x").items():
                via_table = via_table + c * table[n][j]
            assert via_table == direct


def test_orthogonality_small_families():
    assert orthogonality_check(octabasic_coeffs(), 3)
    assert orthogonality_check(sum2_coeffs(), 3)
    assert orthogonality_check(qjacobi_coeffs(0), 3)


def test_functional_detects_mismatched_family():
    # moments of one family do not annihilate another family's polynomials
    mus = moments_from_recurrence(sum2_coeffs(), 4)
    ps = monic_sequence(qjacobi_coeffs(0), 2)
    assert apply_functional(mus, ps[1]) != 0
