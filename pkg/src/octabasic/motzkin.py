"""Weighted four-step Motzkin paths and the path <-> permutation bijection.

A path of length n walks from (0,0) to (n,0), never below the axis, with
step kinds NE (+1), SE (-1), and two level-step species E_SOLID and
E_DOTTED.  Each step carries a label (j, k) selecting one monomial of the
bracket weight attached to its kind; at start level h the labels satisfy

    NE, E_SOLID:   j + k = h        weight a * c^j d^k
    SE, E_DOTTED:  j + k = h - 1    weight b * c^j d^k

with bracket pair (c,d) = (p,q) for NE, (v,w) for SE, (r,s) for E_SOLID,
(t,u) for E_DOTTED.

The bijection builds a permutation by inserting 1, 2, ..., n, one value
per step.  The step kind fixes the class of the inserted value (NE opener,
SE closer, E_SOLID singleton, E_DOTTED continuator) and the label fixes
its position relative to the active runs: runs that will still be extended
by later (larger) values.  Bookkeeping: the word is kept as a sequence of
atomic segments, each flagged active; NE creates an active segment, E_SOLID
an inactive one, E_DOTTED appends to an active segment, SE appends and
deactivates.  A new segment with label (j, k) goes immediately after the
j-th active segment (word start for j = 0), the unique slot leaving j
active segments strictly left and guaranteeing the value heads a run of
the final word.  The inverse reads the steps off the classes, labelled by
(lsg(i), rsg(i)).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .polyring import Poly
from .permstat import Word, _scan, check_word

NE = "NE"
SE = "SE"
E_SOLID = "E_SOLID"
E_DOTTED = "E_DOTTED"
STEP_KINDS = (NE, SE, E_SOLID, E_DOTTED)

RISE = {NE: 1, SE: -1, E_SOLID: 0, E_DOTTED: 0}
BRACKET_PAIR = {NE: ("p", "q"), SE: ("v", "w"), E_SOLID: ("r", "s"), E_DOTTED: ("t", "u")}
RUN_LETTER = {NE: "a", E_SOLID: "a", SE: "b", E_DOTTED: "b"}
KIND_OF_CLASS = {"op": NE, "clos": SE, "sing": E_SOLID, "cont": E_DOTTED}

# enumeration emits kinds in this fixed order, then labels by ascending j
ENUM_ORDER = (E_SOLID, E_DOTTED, NE, SE)


class MalformedPath(ValueError):
    """A step sequence violating the level or label invariants."""


@dataclass(frozen=True, slots=True)
class Step:
    kind: str
    j: int
    k: int

    def __str__(self) -> str:
        return f"{self.kind}({self.j},{self.k})"


Path = tuple[Step, ...]


def validate_path(steps: Sequence[Step]) -> None:
    """Raise MalformedPath unless levels and labels are consistent."""
    level = 0
    for i, step in enumerate(steps, start=1):
        if step.kind not in STEP_KINDS:
            raise MalformedPath(f"step {i}: unknown kind {step.kind!r}")
        if step.j < 0 or step.k < 0:
            raise MalformedPath(f"step {i}: negative label on {step}")
        need = level if step.kind in (NE, E_SOLID) else level - 1
        if step.j + step.k != need:
            raise MalformedPath(
                f"step {i}: label sum of {step} must be {need} at level {level}"
            )
        level += RISE[step.kind]
        if level < 0:
            raise MalformedPath(f"step {i}: path dips below the axis")
    if level != 0:
        raise MalformedPath(f"path ends at level {level}, not 0")


def enumerate_paths(n: int) -> Iterator[Path]:
    """Every valid labeled path of length n, exactly once, in a fixed order."""
    if n < 0:
        raise ValueError("enumerate_paths requires n >= 0")

    def extend(m: int, level: int, acc: list[Step]) -> Iterator[Path]:
        if m == n:
            if level == 0:
                yield tuple(acc)
            return
        if level > n - m:
            return
        for kind in ENUM_ORDER:
            total = level if kind in (NE, E_SOLID) else level - 1
            if total < 0:
                continue
            for j in range(total + 1):
                acc.append(Step(kind, j, total - j))
                yield from extend(m + 1, level + RISE[kind], acc)
                acc.pop()

    return extend(0, 0, [])


def path_weight(path: Sequence[Step]) -> Poly:
    """Product of the step weights: one monomial in the ten parameters."""
    exps: dict[str, int] = {}
    for step in path:
        exps[RUN_LETTER[step.kind]] = exps.get(RUN_LETTER[step.kind], 0) + 1
        c, d = BRACKET_PAIR[step.kind]
        if step.j:
            exps[c] = exps.get(c, 0) + step.j
        if step.k:
            exps[d] = exps.get(d, 0) + step.k
    return Poly.monomial(exps)


def moment_via_paths(n: int) -> Poly:
    """Sum of path_weight over all labeled paths of length n."""
    out = Poly.zero()
    for path in enumerate_paths(n):
        out = out + path_weight(path)
    return out


class _Segment:
    __slots__ = ("values", "active")

    def __init__(self, value: int, active: bool):
        self.values = [value]
        self.active = active


def _build(path: Sequence[Step], trace: list[str] | None = None) -> Word:
    segments: list[_Segment] = []
    level = 0
    for i, step in enumerate(path, start=1):
        if step.j < 0 or step.k < 0:
            raise MalformedPath(f"step {i}: negative label on {step}")
        actives = [idx for idx, seg in enumerate(segments) if seg.active]
        h = len(actives)
        if step.kind in (NE, E_SOLID):
            if step.j + step.k != h:
                raise MalformedPath(
                    f"step {i}: {step} needs j + k = {h} at level {h}"
                )
            pos = 0 if step.j == 0 else actives[step.j - 1] + 1
            segments.insert(pos, _Segment(i, step.kind == NE))
        elif step.kind in (SE, E_DOTTED):
            if step.j + step.k != h - 1:
                raise MalformedPath(
                    f"step {i}: {step} needs j + k = {h - 1} at level {h}"
                )
            seg = segments[actives[step.j]]
            seg.values.append(i)
            if step.kind == SE:
                seg.active = False
        else:
            raise MalformedPath(f"step {i}: unknown kind {step.kind!r}")
        level += RISE[step.kind]
        if trace is not None:
            partial = "|".join(" ".join(map(str, seg.values)) for seg in segments)
            trace.append(f"{i}: {step} level {level - RISE[step.kind]}->{level} | {partial}")
    if level != 0:
        raise MalformedPath(f"path ends at level {level}, not 0")
    return tuple(v for seg in segments for v in seg.values)


def path_to_perm(path: Sequence[Step]) -> Word:
    """Run the insertion construction; raises MalformedPath on bad input."""
    return _build(path)


def insertion_trace(path: Sequence[Step]) -> list[str]:
    """Human-readable step-by-step log of the insertion construction."""
    trace: list[str] = []
    _build(path, trace)
    return trace


def perm_to_path(word: Sequence[int]) -> Path:
    """Read the path off a permutation: kinds from classes, labels (lsg, rsg)."""
    w = check_word(word)
    bounds, run_of, kind_of = _scan(w)
    steps = []
    for value in range(1, len(w) + 1):
        rv = run_of[value]
        j = sum(1 for r in range(rv) if bounds[r][0] < value < bounds[r][1])
        k = sum(
            1
            for r in range(rv + 1, len(bounds))
            if bounds[r][0] < value < bounds[r][1]
        )
        steps.append(Step(KIND_OF_CLASS[kind_of[value]], j, k))
    return tuple(steps)


_STEP_RE = re.compile(r"(NE|SE|E_SOLID|E_DOTTED)\((\d+),(\d+)\)")


def parse_path(text: str) -> Path:
    """Parse comma-separated step tokens like 'NE(0,0),SE(0,0)'."""
    compact = "".join(text.split())
    if not compact:
        return ()
    steps = []
    pos = 0
    while True:
        m = _STEP_RE.match(compact, pos)
        if not m:
            raise ValueError(f"bad path syntax at {compact[pos:pos + 20]!r}")
        steps.append(Step(m.group(1), int(m.group(2)), int(m.group(3))))
        pos = m.end()
        if pos == len(compact):
            break
        if compact[pos] != ",":
            raise ValueError(f"expected ',' at {compact[pos:pos + 20]!r}")
        pos += 1
    return tuple(steps)


def format_path(path: Sequence[Step]) -> str:
    return ",".join(str(step) for step in path)
