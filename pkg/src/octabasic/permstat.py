"""Permutation model: runs, element classes, straddle statistics, Mahonian profiles.

A permutation is a word sigma(1)...sigma(n) on {1..n}, written as a tuple.
Reading the word left to right, maximal increasing segments are its runs;
runs are separated by descents, so they partition the positions into
contiguous blocks.  Each element belongs to one of four classes:

    op    opener      first element of a run of length >= 2
    clos  closer      last element of a run of length >= 2
    cont  continuator interior element of a run
    sing  singleton   sole element of a run of length 1

For an element i, lsg(i) counts the runs lying entirely to the left of i
that contain both an element smaller and an element greater than i
("straddling" runs); rsg(i) counts the same on the right.  Because runs
are contiguous, the runs entirely left of i are exactly the runs with a
smaller index than i's own run.

A :class:`StatProfile` assigns one statistic of the Mahonian family:
a run term (n - run or run - 1) plus per-class integer coefficients for
lsg and rsg, plus an integer shift c that replaces the opener coefficients
(l, r) by (l+c, r+c) and the closer coefficients by (l-c, r-c).  The
opener/closer balance identity makes every shift distribution-preserving.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from itertools import permutations
from typing import Iterable, Iterator, Mapping, Sequence

from .polyring import Poly
from .qseries import qfactorial_coefficients

Word = tuple[int, ...]

CLASSES = ("op", "clos", "cont", "sing")
RUN_TERM_N_MINUS_RUN = "n-run"
RUN_TERM_RUN_MINUS_1 = "run-1"
RUN_TERMS = (RUN_TERM_N_MINUS_RUN, RUN_TERM_RUN_MINUS_1)

# variable carrying (lsg, rsg) for each class in the ten-variable weight
CLASS_VARS = {"sing": ("r", "s"), "cont": ("t", "u"), "op": ("p", "q"), "clos": ("v", "w")}


def check_word(word: Sequence[int]) -> Word:
    """Validate one-line notation on {1..n} and return it as a tuple."""
    w = tuple(word)
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {w}")
    return w


def _scan(word: Word):
    """One pass over the word: run bounds, run index and class per value.

    Returns (bounds, run_of, kind_of) where bounds[r] = (min, max) of run r,
    and run_of / kind_of are value-indexed lists (index 0 unused).
    """
    n = len(word)
    run_of = [0] * (n + 1)
    kind_of = [""] * (n + 1)
    bounds: list[tuple[int, int]] = []
    start = 0
    for i in range(1, n + 1):
        if i == n or word[i] < word[i - 1]:
            first, last = word[start], word[i - 1]
            r = len(bounds)
            bounds.append((first, last))
            length = i - start
            for pos in range(start, i):
                run_of[word[pos]] = r
            if length == 1:
                kind_of[first] = "sing"
            else:
                kind_of[first] = "op"
                kind_of[last] = "clos"
                for pos in range(start + 1, i - 1):
                    kind_of[word[pos]] = "cont"
            start = i
    return bounds, run_of, kind_of


@dataclass(frozen=True)
class RunDecomposition:
    runs: tuple[Word, ...]
    class_of: dict[int, str]
    run_of: dict[int, int]

    @property
    def run_count(self) -> int:
        return len(self.runs)


def decompose(word: Sequence[int]) -> RunDecomposition:
    """Split into maximal increasing runs and classify every element."""
    w = check_word(word)
    bounds, run_of, kind_of = _scan(w)
    runs: list[Word] = []
    start = 0
    for i in range(1, len(w) + 1):
        if i == len(w) or w[i] < w[i - 1]:
            runs.append(w[start:i])
            start = i
    return RunDecomposition(
        runs=tuple(runs),
        class_of={v: kind_of[v] for v in range(1, len(w) + 1)},
        run_of={v: run_of[v] for v in range(1, len(w) + 1)},
    )


def lsg(word: Sequence[int], value: int) -> int:
    """Number of runs entirely left of `value` straddling it."""
    w = check_word(word)
    bounds, run_of, _ = _scan(w)
    rv = run_of[value]
    return sum(1 for r in range(rv) if bounds[r][0] < value < bounds[r][1])


def rsg(word: Sequence[int], value: int) -> int:
    """Number of runs entirely right of `value` straddling it."""
    w = check_word(word)
    bounds, run_of, _ = _scan(w)
    rv = run_of[value]
    return sum(
        1 for r in range(rv + 1, len(bounds)) if bounds[r][0] < value < bounds[r][1]
    )


@dataclass(frozen=True)
class ClassSums:
    """Per-class lsg/rsg sums plus totals and the run count."""

    n: int
    run_count: int
    lsg_by: dict[str, int]
    rsg_by: dict[str, int]

    @property
    def lsg_total(self) -> int:
        return sum(self.lsg_by.values())

    @property
    def rsg_total(self) -> int:
        return sum(self.rsg_by.values())


def _class_sums(word: Word) -> ClassSums:
    bounds, run_of, kind_of = _scan(word)
    lsg_by = dict.fromkeys(CLASSES, 0)
    rsg_by = dict.fromkeys(CLASSES, 0)
    # each run straddles exactly the foreign values strictly between its
    # min and max; tally by which side of that run the value sits on
    for r, (mn, mx) in enumerate(bounds):
        for v in range(mn + 1, mx):
            rv = run_of[v]
            if rv > r:
                lsg_by[kind_of[v]] += 1
            elif rv < r:
                rsg_by[kind_of[v]] += 1
    return ClassSums(n=len(word), run_count=len(bounds), lsg_by=lsg_by, rsg_by=rsg_by)


def class_sums(word: Sequence[int]) -> ClassSums:
    return _class_sums(check_word(word))


@dataclass(frozen=True)
class StatProfile:
    """One member of the Mahonian family of statistics."""

    run_term: str = RUN_TERM_N_MINUS_RUN
    lsg_coeff: Mapping[str, int] = field(
        default_factory=lambda: dict.fromkeys(CLASSES, 2)
    )
    rsg_coeff: Mapping[str, int] = field(
        default_factory=lambda: dict.fromkeys(CLASSES, 1)
    )
    shift: int = 0

    def __post_init__(self):
        if self.run_term not in RUN_TERMS:
            raise ValueError(f"run_term must be one of {RUN_TERMS}")
        for coeff in (self.lsg_coeff, self.rsg_coeff):
            if set(coeff) != set(CLASSES):
                raise ValueError(f"coefficients must cover exactly {CLASSES}")

    def effective_coeffs(self) -> tuple[dict[str, int], dict[str, int]]:
        """Coefficients with the shift folded in: +c on openers, -c on closers."""
        lc = dict(self.lsg_coeff)
        rc = dict(self.rsg_coeff)
        lc["op"] += self.shift
        rc["op"] += self.shift
        lc["clos"] -= self.shift
        rc["clos"] -= self.shift
        return lc, rc

    def __str__(self) -> str:
        parts = [f"run={self.run_term}"]
        for cls in CLASSES:
            parts.append(f"{cls}={self.lsg_coeff[cls]},{self.rsg_coeff[cls]}")
        parts.append(f"shift={self.shift}")
        return "; ".join(parts)


def standard_profile(run_term: str = RUN_TERM_N_MINUS_RUN, shift: int = 0) -> StatProfile:
    """The base statistic: run term plus 2 lsg + rsg on every class."""
    return StatProfile(run_term=run_term, shift=shift)


def coefficient_variants(run_term: str = RUN_TERM_N_MINUS_RUN) -> list[StatProfile]:
    """The 16 profiles choosing (2,1) or (1,2) independently per class."""
    out = []
    for mask in range(16):
        lc, rc = {}, {}
        for bit, cls in enumerate(CLASSES):
            if mask >> bit & 1:
                lc[cls], rc[cls] = 1, 2
            else:
                lc[cls], rc[cls] = 2, 1
        out.append(StatProfile(run_term=run_term, lsg_coeff=lc, rsg_coeff=rc))
    return out


def shifted_profile(profile: StatProfile, shift: int) -> StatProfile:
    return replace(profile, shift=shift)


def parse_profile(text: str) -> StatProfile:
    """Parse the profile grammar, e.g.

        run=n-run; op=2,1; clos=2,1; cont=2,1; sing=2,1; shift=0

    Whitespace is insignificant; shift defaults to 0, all other fields are
    required.
    """
    compact = "".join(text.split())
    fields: dict[str, str] = {}
    for part in compact.split(";"):
        if not part:
            continue
        key, sep, value = part.partition("=")
        if not sep:
            raise ValueError(f"malformed profile field {part!r}")
        if key in fields:
            raise ValueError(f"duplicate profile field {key!r}")
        fields[key] = value
    required = {"run", *CLASSES}
    missing = required - fields.keys()
    if missing:
        raise ValueError(f"profile missing fields: {sorted(missing)}")
    unknown = fields.keys() - required - {"shift"}
    if unknown:
        raise ValueError(f"unknown profile fields: {sorted(unknown)}")
    lc, rc = {}, {}
    for cls in CLASSES:
        pair = fields[cls].split(",")
        if len(pair) != 2:
            raise ValueError(f"{cls} wants two comma-separated integers, got {fields[cls]!r}")
        lc[cls], rc[cls] = int(pair[0]), int(pair[1])
    return StatProfile(
        run_term=fields["run"],
        lsg_coeff=lc,
        rsg_coeff=rc,
        shift=int(fields.get("shift", "0")),
    )


def eval_profile(word: Sequence[int], profile: StatProfile) -> int:
    """Value of the profile's statistic on one permutation."""
    sums = class_sums(word)
    return _eval_on_sums(sums, profile)


def _eval_on_sums(sums: ClassSums, profile: StatProfile) -> int:
    if profile.run_term == RUN_TERM_N_MINUS_RUN:
        value = sums.n - sums.run_count
    else:
        value = sums.run_count - 1
    lc, rc = profile.effective_coeffs()
    for cls in CLASSES:
        value += lc[cls] * sums.lsg_by[cls] + rc[cls] * sums.rsg_by[cls]
    return value


QDistribution = dict[int, int]


def distribution(n: int, profile: StatProfile) -> QDistribution:
    """Tally of the statistic over all n! permutations."""
    return distribution_many(n, [profile])[0]


def distribution_many(n: int, profiles: Sequence[StatProfile]) -> list[QDistribution]:
    """Tallies for several profiles in one pass over S_n."""
    if n < 1:
        raise ValueError("distribution requires n >= 1")
    plans = []
    for prof in profiles:
        lc, rc = prof.effective_coeffs()
        plans.append(
            (
                prof.run_term == RUN_TERM_N_MINUS_RUN,
                tuple(lc[cls] for cls in CLASSES),
                tuple(rc[cls] for cls in CLASSES),
            )
        )
    tallies: list[Counter] = [Counter() for _ in profiles]
    for word in permutations(range(1, n + 1)):
        sums = _class_sums(word)
        lvals = tuple(sums.lsg_by[cls] for cls in CLASSES)
        rvals = tuple(sums.rsg_by[cls] for cls in CLASSES)
        run_count = sums.run_count
        for tally, (n_minus_run, lcs, rcs) in zip(tallies, plans):
            value = n - run_count if n_minus_run else run_count - 1
            for i in range(4):
                value += lcs[i] * lvals[i] + rcs[i] * rvals[i]
            tally[value] += 1
    return [dict(t) for t in tallies]


def is_mahonian(dist: QDistribution, n: int) -> bool:
    """True iff the distribution equals the coefficient list of n!_q."""
    return dist == qfactorial_coefficients(n)


def distribution_csv(dist: QDistribution) -> str:
    """Serialize as 'exponent,count' rows sorted by exponent."""
    return "\n".join(f"{e},{dist[e]}" for e in sorted(dist))


def opener_closer_balance(word: Sequence[int]) -> bool:
    """True iff lsg(op) + rsg(op) = lsg(clos) + rsg(clos) for this word."""
    sums = class_sums(word)
    return (
        sums.lsg_by["op"] + sums.rsg_by["op"]
        == sums.lsg_by["clos"] + sums.rsg_by["clos"]
    )


def octabasic_weight(word: Sequence[int]) -> Poly:
    """The ten-variable monomial attached to one permutation.

    Exponents: (r,s) carry (lsg,rsg) summed over singletons, (t,u) over
    continuators, (p,q) over openers, (v,w) over closers; a carries the
    run count and b its complement n - run.
    """
    sums = class_sums(word)
    exps: dict[str, int] = {}
    for cls, (lvar, rvar) in CLASS_VARS.items():
        exps[lvar] = sums.lsg_by[cls]
        exps[rvar] = sums.rsg_by[cls]
    exps["a"] = sums.run_count
    exps["b"] = sums.n - sums.run_count
    return Poly.monomial({k: e for k, e in exps.items() if e})


def moment_via_permutations(n: int) -> Poly:
    """Sum of octabasic_weight over all of S_n (mu_0 = 1 by convention)."""
    if n < 0:
        raise ValueError("moment_via_permutations requires n >= 0")
    counts: Counter = Counter()
    for word in permutations(range(1, n + 1)):
        sums = _class_sums(word)
        counts[
            (
                sums.run_count,
                n - sums.run_count,
                sums.lsg_by["sing"],
                sums.rsg_by["sing"],
                sums.lsg_by["cont"],
                sums.rsg_by["cont"],
                sums.lsg_by["op"],
                sums.rsg_by["op"],
                sums.lsg_by["clos"],
                sums.rsg_by["clos"],
            )
        ] += 1
    return Poly.from_terms(
        (
            {
                "a": key[0],
                "b": key[1],
                "r": key[2],
                "s": key[3],
                "t": key[4],
                "u": key[5],
                "p": key[6],
                "q": key[7],
                "v": key[8],
                "w": key[9],
            },
            mult,
        )
        for key, mult in counts.items()
    )


def all_permutations(n: int) -> Iterator[Word]:
    """All of S_n in lexicographic order."""
    return permutations(range(1, n + 1))
