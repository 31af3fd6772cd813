"""Generic monic orthogonal-polynomial engine over the exact ring.

A family is given by its three-term recurrence

    p_{n+1}(x) = (x - b_n) p_n(x) - lambda_n p_{n-1}(x),    p_0 = 1,

through a :class:`RecurrenceCoeffs` pair of coefficient generators.  The
moments mu_n of the associated linear functional L (L(x^n) = mu_n) are
computed by the level-indexed dynamic program over weighted Motzkin paths:

    M(0,0) = 1
    M(m,k) = M(m-1,k-1) + b_k M(m-1,k) + lambda_{k+1} M(m-1,k+1)
    mu_n   = M(n,0)

which is the (0,0) entry of the n-th power of the tridiagonal operator
with diagonal b and sub/super-diagonal split 1/lambda.  lambda_n is only
ever queried for n >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .polyring import Poly

MomentSequence = list[Poly]


class DegreeTooHigh(ValueError):
    """The functional was applied to a polynomial of higher degree than the moments cover."""


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """Coefficient generators (b_n, lambda_n) of a monic orthogonal family.

    Implementations must be deterministic: repeated calls with the same n
    return equal polynomials.
    """

    b_of: Callable[[int], Poly]
    lambda_of: Callable[[int], Poly]
    name: str = ""

    def substituted(self, mapping, name: str = "") -> "RecurrenceCoeffs":
        """The family with a variable substitution applied to both generators."""
        return RecurrenceCoeffs(
            b_of=lambda n: self.b_of(n).substitute(mapping),
            lambda_of=lambda n: self.lambda_of(n).substitute(mapping),
            name=name or (self.name + "_substituted"),
        )


def monic_sequence(coeffs: RecurrenceCoeffs, N: int) -> list[Poly]:
    """p_0 .. p_N from the three-term recurrence; each p_n is monic of degree n."""
    if N < 0:
        raise ValueError("monic_sequence requires N >= 0")
    x = Poly.variable("x")
    ps = [Poly.one()]
    if N >= 1:
        ps.append(x - coeffs.b_of(0))
    for n in range(1, N):
        ps.append((x - coeffs.b_of(n)) * ps[n] - coeffs.lambda_of(n) * ps[n - 1])
    return ps


def moments_from_recurrence(coeffs: RecurrenceCoeffs, N: int) -> MomentSequence:
    """mu_0 .. mu_N via the Motzkin-path dynamic program."""
    if N < 0:
        raise ValueError("moments_from_recurrence requires N >= 0")
    mus = [Poly.one()]
    level: dict[int, Poly] = {0: Poly.one()}
    for m in range(1, N + 1):
        nxt: dict[int, Poly] = {}
        for k in range(0, N - m + 1):
            acc = Poly.zero()
            if k - 1 in level:
                acc = acc + level[k - 1]
            if k in level:
                acc = acc + coeffs.b_of(k) * level[k]
            if k + 1 in level:
                acc = acc + coeffs.lambda_of(k + 1) * level[k + 1]
            if acc:
                nxt[k] = acc
        level = nxt
        mus.append(level.get(0, Poly.zero()))
    return mus


def apply_functional(moments: Sequence[Poly], f: Poly) -> Poly:
    """Apply the moment functional: replace x^k by mu_k, extended linearly.

    Parameter variables pass through untouched.  Raises DegreeTooHigh when
    f involves a power of x the moment list does not cover (including
    negative powers, on which the functional is undefined).
    """
    out = Poly.zero()
    for e, coeff in f.coefficients_in("x").items():
        if e < 0 or e >= len(moments):
            raise DegreeTooHigh(
                f"functional needs mu_{e} but moments cover 0..{len(moments) - 1}"
            )
        out = out + coeff * moments[e]
    return out


def shifted_functional_table(
    coeffs: RecurrenceCoeffs, moments: Sequence[Poly], N: int
) -> list[list[Poly]]:
    """Table t[n][j] = L(x^j p_n) for n <= N, j <= len(moments)-1-n.

    Row 0 is the moment list itself; subsequent rows push the functional
    through the recurrence using only its linearity:

        L(x^j p_{n+1}) = L(x^{j+1} p_n) - b_n L(x^j p_n) - lambda_n L(x^j p_{n-1})

    This computes exactly apply_functional(moments, x^j * p_n) without ever
    expanding the product p_n * p_m in the ring, which is infeasible for
    the full ten-variable family.
    """
    top = len(moments) - 1
    table = [list(moments)]
    for n in range(N):
        b_n = coeffs.b_of(n)
        lam_n = coeffs.lambda_of(n) if n >= 1 else None
        row = []
        for j in range(top - n):
            cell = table[n][j + 1] - b_n * table[n][j]
            if lam_n is not None:
                cell = cell - lam_n * table[n - 1][j]
            row.append(cell)
        table.append(row)
    return table


def orthogonality_check(coeffs: RecurrenceCoeffs, N: int) -> bool:
    """True iff L(p_n p_m) = 0 for m < n <= N and L(p_n^2) = lambda_1...lambda_n.

    Uses moments up to order 2N.  L(p_n p_m) is evaluated as
    sum_j c_{m,j} L(x^j p_n) where c_{m,j} are the x-coefficients of p_m
    and L(x^j p_n) comes from shifted_functional_table; this agrees with
    apply_functional(mu, p_n * p_m) term for term.
    """
    if N < 1:
        raise ValueError("orthogonality_check requires N >= 1")
    moments = moments_from_recurrence(coeffs, 2 * N)
    table = shifted_functional_table(coeffs, moments, N)
    ps = monic_sequence(coeffs, N)
    norm = Poly.one()
    for n in range(N + 1):
        for m in range(n + 1):
            val = Poly.zero()
            for j, c in ps[m].coefficients_in("x").items():
                val = val + c * table[n][j]
            if m < n:
                if val:
                    return False
            else:
                if n >= 1:
                    norm = norm * coeffs.lambda_of(n)
                if val != norm:
                    return False
    return True
