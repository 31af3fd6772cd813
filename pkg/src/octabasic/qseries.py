"""Builders for q-brackets, q-factorials, q-binomials, and q-Pochhammer products.

Everything is division-free and lives in the integer-coefficient ring:
[n]_q is the geometric sum 1 + q + ... + q^(n-1), the two-parameter
bracket [n]_{c,d} is the homogeneous sum c^(n-1) + c^(n-2) d + ... + d^(n-1),
and the Gaussian binomial comes from the Pascal recurrence.
"""

from __future__ import annotations

from functools import lru_cache

from .polyring import Poly


def bracket_q(n: int) -> Poly:
    """[n]_q = 1 + q + ... + q^(n-1); 0 for n = 0."""
    if n < 0:
        raise ValueError("bracket_q requires n >= 0")
    return Poly.from_terms(({"q": i}, 1) for i in range(n))


def bracket2(n: int, c: str, d: str) -> Poly:
    """Two-parameter bracket [n]_{c,d} = sum_{i<n} c^(n-1-i) d^i."""
    if n < 0:
        raise ValueError("bracket2 requires n >= 0")
    if c == d:
        raise ValueError("bracket2 requires two distinct variables")
    return Poly.from_terms(({c: n - 1 - i, d: i}, 1) for i in range(n))


def qfactorial(n: int) -> Poly:
    """n!_q = [n]_q [n-1]_q ... [1]_q (empty product = 1)."""
    if n < 0:
        raise ValueError("qfactorial requires n >= 0")
    out = Poly.one()
    for k in range(1, n + 1):
        out = out * bracket_q(k)
    return out


def qfactorial_coefficients(n: int) -> dict[int, int]:
    """Coefficients of n!_q as {exponent: coefficient}, zeros omitted."""
    coeffs = [1]
    for k in range(2, n + 1):
        new = [0] * (len(coeffs) + k - 1)
        for i, c in enumerate(coeffs):
            for j in range(k):
                new[i + j] += c
        coeffs = new
    return {e: c for e, c in enumerate(coeffs) if c}


@lru_cache(maxsize=None)
def qbinomial(n: int, k: int) -> Poly:
    """Gaussian binomial via qbin(n,k) = qbin(n-1,k-1) + q^k qbin(n-1,k).

    Returns 0 for k < 0 or k > n.
    """
    if n < 0:
        raise ValueError("qbinomial requires n >= 0")
    if k < 0 or k > n:
        return Poly.zero()
    if k == 0 or k == n:
        return Poly.one()
    return qbinomial(n - 1, k - 1) + Poly.variable("q", k) * qbinomial(n - 1, k)


def qpochhammer_power(alpha: int, n: int) -> Poly:
    """(q^(alpha+1); q)_n = prod_{i<n} (1 - q^(alpha+1+i)) for integer alpha >= 0."""
    if alpha < 0:
        raise ValueError("qpochhammer_power requires alpha >= 0")
    if n < 0:
        raise ValueError("qpochhammer_power requires n >= 0")
    out = Poly.one()
    for i in range(n):
        out = out * (Poly.one() - Poly.variable("q", alpha + 1 + i))
    return out


def choose2(m: int) -> int:
    """m(m-1)/2 for every integer m, including negative m.

    The polynomial extension matters: choose2(-1) = 1 makes the k = 0 term
    of the little q-Jacobi closed form come out monic.
    """
    return m * (m - 1) // 2
