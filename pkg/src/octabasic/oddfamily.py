"""Even/odd split of the four-parameter symmetric chain and the starred statistics.

Identifying p = r, q = s, v = t, u = w turns the ten-parameter family into
the "even" half of the symmetric chain

    b_n = 0,   lambda_{2n} = b [n]_{t,u},   lambda_{2n+1} = a [n+1]_{r,s}.

The standard even/odd decomposition gives

    even: b_n = lambda_{2n} + lambda_{2n+1}     lambda_n = lambda_{2n-1} lambda_{2n}
    odd:  b_n = lambda_{2n+1} + lambda_{2n+2}   lambda_n = lambda_{2n} lambda_{2n+1}

so the odd family has b_n = a [n+1]_{r,s} + b [n+1]_{t,u} and
lambda_n = a b [n+1]_{r,s} [n]_{t,u}, and its moments satisfy
mu_n(odd) = mu_{n+1}(even) / mu_1(even) with mu_1(even) = a.

The odd moments under the three q-specializations are multiples of
(n+1)!_q, and the matching Mahonian statistic on S_n uses starred versions
of lsg/rsg plus a gap adjustment:

  * for closers and singletons, the run containing 1 is ignored;
  * for openers and continuators outside 1's run, the run containing 1 is
    counted unconditionally on its side;
  * the adjustment looks at the largest element d of 1's run, finds the
    rightmost singleton that is a left-to-right minimum of the portion of
    the word after 1's run (scanned in isolation), and if one exists adds
    2 (d - c) minus the number of elements before 1's position lying
    strictly between c and d.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Sequence

from .polyring import InexactDivision, Poly
from .qseries import bracket2, qfactorial
from .orthopoly import MomentSequence, RecurrenceCoeffs, moments_from_recurrence
from .permstat import (
    RUN_TERM_N_MINUS_RUN,
    RUN_TERM_RUN_MINUS_1,
    QDistribution,
    Word,
    _scan,
    check_word,
)
from .families import specialization

CHAIN_VARIABLES = ("a", "b", "r", "s", "t", "u")

#: substitution mapping the ten-parameter family onto the even chain family
IDENTIFICATION = {
    "p": Poly.variable("r"),
    "q": Poly.variable("s"),
    "v": Poly.variable("t"),
    "w": Poly.variable("u"),
}


@dataclass(frozen=True)
class SymmetricChain:
    """The zero-diagonal chain with alternating bracket weights."""

    def lambda_even_of(self, n: int) -> Poly:
        """lambda_{2n} = b [n]_{t,u}."""
        return Poly.variable("b") * bracket2(n, "t", "u")

    def lambda_odd_of(self, n: int) -> Poly:
        """lambda_{2n+1} = a [n+1]_{r,s}."""
        return Poly.variable("a") * bracket2(n + 1, "r", "s")

    def lambda_of(self, k: int) -> Poly:
        if k < 1:
            raise ValueError("chain weights are indexed from 1")
        return self.lambda_even_of(k // 2) if k % 2 == 0 else self.lambda_odd_of(k // 2)


def symmetric_chain() -> SymmetricChain:
    return SymmetricChain()


def even_coeffs(chain: SymmetricChain | None = None) -> RecurrenceCoeffs:
    chain = chain or symmetric_chain()
    return RecurrenceCoeffs(
        b_of=lambda n: chain.lambda_even_of(n) + chain.lambda_odd_of(n),
        lambda_of=lambda n: chain.lambda_of(2 * n - 1) * chain.lambda_of(2 * n),
        name="even",
    )


def odd_coeffs(chain: SymmetricChain | None = None) -> RecurrenceCoeffs:
    chain = chain or symmetric_chain()
    return RecurrenceCoeffs(
        b_of=lambda n: chain.lambda_of(2 * n + 1) + chain.lambda_of(2 * n + 2),
        lambda_of=lambda n: chain.lambda_of(2 * n) * chain.lambda_of(2 * n + 1),
        name="odd",
    )


def odd_moments(N: int, chain: SymmetricChain | None = None) -> MomentSequence:
    """Odd-family moments, cross-checked against the even-moment quotient.

    Every mu_n(odd) is computed from the odd recurrence and must equal
    mu_{n+1}(even) / mu_1(even) exactly; a mismatch raises InexactDivision.
    """
    chain = chain or symmetric_chain()
    odd = moments_from_recurrence(odd_coeffs(chain), N)
    even = moments_from_recurrence(even_coeffs(chain), N + 1)
    mu1 = even[1]
    for n, mu in enumerate(odd):
        quotient = even[n + 1].exact_divide(mu1)
        if quotient != mu:
            raise InexactDivision(
                f"odd moment {n} does not match the even-moment quotient"
            )
    return odd


_ODD_CLOSED_FORMS = {1: "t2", 2: "t3", 3: "ql"}


def odd_moment_closed_form(which: int, n: int) -> Poly:
    """Closed form of the n-th odd moment under specialization 1, 2, or 3."""
    if which == 1:
        return Poly.monomial({"q": -n}) * qfactorial(n + 1)
    if which == 2:
        return qfactorial(n + 1)
    if which == 3:
        return Poly.monomial({"q": -(n * n + 3 * n) // 2}) * qfactorial(n + 1)
    raise ValueError("which must be 1, 2, or 3")


def odd_specialization_check(which: int, N: int) -> bool:
    """True iff the specialized odd moments match their closed form up to N."""
    key = _ODD_CLOSED_FORMS.get(which)
    if key is None:
        raise ValueError("which must be 1, 2, or 3")
    assignments = specialization(key).restrict(CHAIN_VARIABLES)
    mus = moments_from_recurrence(odd_coeffs().substituted(assignments), N)
    return all(mus[n] == odd_moment_closed_form(which, n) for n in range(N + 1))


# -- starred statistics ------------------------------------------------------


@dataclass(frozen=True)
class StarAdjustment:
    """The gap adjustment of the starred statistic.

    run1_max is the largest element sharing a run with 1.  marker is the
    rightmost singleton that is a left-to-right minimum of the portion of
    the word after 1's run, or None.  left_count counts positions before
    1's own position holding values strictly between marker and run1_max.
    """

    run1_max: int
    marker: int | None
    left_count: int
    value: int


def _adjustment_from_scan(w: Word, bounds, run_of) -> StarAdjustment:
    r1 = run_of[1]
    d = bounds[r1][1]
    marker = None
    current_min = None
    run_at = 0
    for i, v in enumerate(w):
        if i > 0 and v < w[i - 1]:
            run_at += 1
        if run_at <= r1:
            continue
        # v lies in the portion after 1's run; track its running minima
        if current_min is None or v < current_min:
            current_min = v
            rv = run_of[v]
            if bounds[rv][0] == bounds[rv][1]:
                marker = v
    if marker is None:
        return StarAdjustment(run1_max=d, marker=None, left_count=0, value=0)
    pos1 = w.index(1)
    left_count = sum(1 for i in range(pos1) if marker < w[i] < d)
    return StarAdjustment(
        run1_max=d,
        marker=marker,
        left_count=left_count,
        value=2 * (d - marker) - left_count,
    )


def star_adjustment(word: Sequence[int]) -> StarAdjustment:
    w = check_word(word)
    bounds, run_of, _ = _scan(w)
    return _adjustment_from_scan(w, bounds, run_of)


def _star_pair_from_scan(n: int, bounds, run_of, kind_of) -> tuple[int, int]:
    """Totals (lsg*, rsg*) over all elements of the word."""
    r1 = run_of[1]
    lsg_total = rsg_total = 0
    for v in range(1, n + 1):
        rv = run_of[v]
        ignores_run1 = kind_of[v] in ("clos", "sing")
        for r, (mn, mx) in enumerate(bounds):
            if r == rv:
                continue
            if r == r1:
                if ignores_run1:
                    continue
                counted = True  # openers/continuators always count 1's run
            else:
                counted = mn < v < mx
            if counted:
                if r < rv:
                    lsg_total += 1
                else:
                    rsg_total += 1
    return lsg_total, rsg_total


def lsg_star(word: Sequence[int], value: int) -> int:
    return _star_single(check_word(word), value)[0]


def rsg_star(word: Sequence[int], value: int) -> int:
    return _star_single(check_word(word), value)[1]


def _star_single(w: Word, value: int) -> tuple[int, int]:
    bounds, run_of, kind_of = _scan(w)
    r1 = run_of[1]
    rv = run_of[value]
    ignores_run1 = kind_of[value] in ("clos", "sing")
    left = right = 0
    for r, (mn, mx) in enumerate(bounds):
        if r == rv:
            continue
        if r == r1:
            if ignores_run1:
                continue
            counted = True
        else:
            counted = mn < value < mx
        if counted:
            if r < rv:
                left += 1
            else:
                right += 1
    return left, right


def star_sums(word: Sequence[int]) -> tuple[int, int]:
    """Totals (lsg*(word), rsg*(word))."""
    w = check_word(word)
    bounds, run_of, kind_of = _scan(w)
    return _star_pair_from_scan(len(w), bounds, run_of, kind_of)


def star_statistic(word: Sequence[int], run_term: str = RUN_TERM_RUN_MINUS_1) -> int:
    """run term + 2 lsg* + rsg* + gap adjustment."""
    w = check_word(word)
    bounds, run_of, kind_of = _scan(w)
    run_count = len(bounds)
    base = len(w) - run_count if run_term == RUN_TERM_N_MINUS_RUN else run_count - 1
    l, r = _star_pair_from_scan(len(w), bounds, run_of, kind_of)
    return base + 2 * l + r + _adjustment_from_scan(w, bounds, run_of).value


def star_distributions(n: int) -> dict[str, QDistribution]:
    """Tallies of the starred statistic over S_n for both run terms."""
    if n < 1:
        raise ValueError("star_distributions requires n >= 1")
    run_minus_1: Counter = Counter()
    n_minus_run: Counter = Counter()
    for word in permutations(range(1, n + 1)):
        bounds, run_of, kind_of = _scan(word)
        run_count = len(bounds)
        l, r = _star_pair_from_scan(n, bounds, run_of, kind_of)
        core = 2 * l + r + _adjustment_from_scan(word, bounds, run_of).value
        run_minus_1[run_count - 1 + core] += 1
        n_minus_run[n - run_count + core] += 1
    return {
        RUN_TERM_RUN_MINUS_1: dict(run_minus_1),
        RUN_TERM_N_MINUS_RUN: dict(n_minus_run),
    }


def star_distribution(n: int, run_term: str = RUN_TERM_RUN_MINUS_1) -> QDistribution:
    return star_distributions(n)[run_term]


def restricted_count(n: int) -> int:
    """Count permutations of S_{n+1} anchored like the identity at both ends.

    Counts words where 1 and n+1 share a run and no left-to-right minimum
    of the portion after that run (in isolation) is a singleton run.  The
    count is n!, checked exhaustively.
    """
    if n < 1:
        raise ValueError("restricted_count requires n >= 1")
    top = n + 1
    count = 0
    for word in permutations(range(1, top + 1)):
        bounds, run_of, _ = _scan(word)
        if run_of[top] != run_of[1]:
            continue
        if _adjustment_from_scan(word, bounds, run_of).marker is None:
            count += 1
    return count


def restricted_count_matches(n: int) -> bool:
    return restricted_count(n) == factorial(n)
