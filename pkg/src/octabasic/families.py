"""Concrete coefficient families, their q-specializations, and measure checks.

The mother family is the ten-parameter ("octabasic") Laguerre family

    b_n = a [n+1]_{r,s} + b [n]_{t,u},      lambda_n = a b [n]_{p,q} [n]_{v,w}.

Three substitutions of the parameters produce classical families whose
moments are multiples of n!_q:

    key   target family                       assignment
    t2    monic little q-Jacobi (alpha = 0)   r=t=p=v=q^2, s=u=w=q, a=1/q, b=1
    t3    sum of two little q-Jacobi          r=t=p=v=q^2, s=u=w=q, a=q,   b=1
    ql    classical q-Laguerre (alpha = 0)    r=t=p=v=q^-2, s=u=w=q^-1, a=q^-1, b=q^-2

with moments q^(-n) n!_q, q n!_q (n > 0), and q^(-C(n+1,2)) n!_q.

The module also carries the direct recurrence coefficients, the explicit
closed-form polynomials, and the numeric (floating) checks of the two
discrete orthogonality measures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .polyring import Poly
from .qseries import bracket_q, bracket2, choose2, qbinomial, qfactorial
from .orthopoly import RecurrenceCoeffs

FAMILY_KEYS = ("t2", "t3", "ql")


def _q(exp: int = 1) -> Poly:
    return Poly.variable("q", exp)


def octabasic_coeffs() -> RecurrenceCoeffs:
    """The ten-parameter family's recurrence coefficients."""
    a = Poly.variable("a")
    b = Poly.variable("b")
    return RecurrenceCoeffs(
        b_of=lambda n: a * bracket2(n + 1, "r", "s") + b * bracket2(n, "t", "u"),
        lambda_of=lambda n: a * b * bracket2(n, "p", "q") * bracket2(n, "v", "w"),
        name="octabasic",
    )


@dataclass(frozen=True)
class Specialization:
    """A named assignment of Laurent monomials in q to the ten parameters."""

    name: str
    assignments: Mapping[str, Poly] = field(repr=False)

    def apply(self, f: Poly) -> Poly:
        return f.substitute(self.assignments)

    def apply_coeffs(self, coeffs: RecurrenceCoeffs) -> RecurrenceCoeffs:
        return coeffs.substituted(self.assignments, name=f"{coeffs.name}[{self.name}]")

    def restrict(self, names: tuple[str, ...]) -> dict[str, Poly]:
        return {v: self.assignments[v] for v in names}


def _specialization(name: str, a: Poly, b: Poly, lsg_val: Poly, rsg_val: Poly) -> Specialization:
    assignments = {"a": a, "b": b, "q": _q()}
    for var in ("r", "t", "p", "v"):
        assignments[var] = lsg_val
    for var in ("s", "u", "w"):
        assignments[var] = rsg_val
    return Specialization(name=name, assignments=assignments)


def little_qjacobi_specialization() -> Specialization:
    return _specialization("t2", a=_q(-1), b=Poly.one(), lsg_val=_q(2), rsg_val=_q())


def qjacobi_sum_specialization() -> Specialization:
    return _specialization("t3", a=_q(), b=Poly.one(), lsg_val=_q(2), rsg_val=_q())


def qlaguerre_specialization() -> Specialization:
    return _specialization("ql", a=_q(-1), b=_q(-2), lsg_val=_q(-2), rsg_val=_q(-1))


def specialization(key: str) -> Specialization:
    try:
        return {
            "t2": little_qjacobi_specialization,
            "t3": qjacobi_sum_specialization,
            "ql": qlaguerre_specialization,
        }[key]()
    except KeyError:
        raise ValueError(f"unknown specialization {key!r}; expected one of {FAMILY_KEYS}") from None


def qjacobi_coeffs(alpha: int = 0) -> RecurrenceCoeffs:
    """Monic little q-Jacobi recurrence: b_n = q^(n-1)[n+1+alpha] + q^(n+alpha-1)[n]."""
    if alpha < 0:
        raise ValueError("qjacobi_coeffs requires alpha >= 0")
    return RecurrenceCoeffs(
        b_of=lambda n: _q(n - 1) * bracket_q(n + 1 + alpha) + _q(n + alpha - 1) * bracket_q(n),
        lambda_of=lambda n: _q(2 * n - 3 + alpha) * bracket_q(n) * bracket_q(n + alpha),
        name=f"qjacobi(alpha={alpha})",
    )


def qjacobi_explicit(n: int) -> Poly:
    """Closed form of the alpha = 0 little q-Jacobi polynomial of degree n."""
    if n < 0:
        raise ValueError("qjacobi_explicit requires n >= 0")
    out = Poly.zero()
    for k in range(n + 1):
        falling = Poly.one()
        for i in range(k):
            falling = falling * bracket_q(n - i)
        term = qbinomial(n, k) * falling
        term = term * Poly.monomial({"x": n - k, "q": choose2(k - 1) - 1})
        out = out + (-term if k % 2 else term)
    return out


def sum2_coeffs() -> RecurrenceCoeffs:
    """The sum-of-two-little-q-Jacobi family: b_n = q^(n+1)[n+1] + q^(n-1)[n]."""
    return RecurrenceCoeffs(
        b_of=lambda n: _q(n + 1) * bracket_q(n + 1) + _q(n - 1) * bracket_q(n),
        lambda_of=lambda n: _q(2 * n - 1) * bracket_q(n) * bracket_q(n),
        name="sum2",
    )


def sum2_explicit(n: int) -> Poly:
    """Closed form for the sum-of-two family.

    The printed source formula carries a separate final term equal to its
    own k = n summand; the sum below runs k = 1..n and adds nothing extra,
    which is the reading that matches the recurrence exactly.
    """
    if n < 0:
        raise ValueError("sum2_explicit requires n >= 0")
    out = Poly.monomial({"x": n})
    for k in range(1, n + 1):
        falling = Poly.one()
        for i in range(k - 1):
            falling = falling * bracket_q(n - i)
        term = qbinomial(n, k) * falling * (bracket_q(n - k) + _q(n))
        term = term * Poly.monomial({"x": n - k, "q": choose2(k)})
        out = out + (-term if k % 2 else term)
    return out


def qlaguerre_coeffs(alpha: int = 0) -> RecurrenceCoeffs:
    """Monic classical q-Laguerre recurrence (Laurent in q)."""
    if alpha < 0:
        raise ValueError("qlaguerre_coeffs requires alpha >= 0")
    return RecurrenceCoeffs(
        b_of=lambda n: _q(-2 * n - alpha) * bracket_q(n)
        + _q(-2 * n - 1 - alpha) * bracket_q(n + 1 + alpha),
        lambda_of=lambda n: _q(1 - 4 * n - 2 * alpha) * bracket_q(n) * bracket_q(n + alpha),
        name=f"qlaguerre(alpha={alpha})",
    )


def qlaguerre_explicit(n: int, alpha: int = 0) -> Poly:
    """Closed form of the monic q-Laguerre polynomial of degree n."""
    if n < 0 or alpha < 0:
        raise ValueError("qlaguerre_explicit requires n >= 0 and alpha >= 0")
    out = Poly.zero()
    for k in range(n + 1):
        falling = Poly.one()
        for i in range(k):
            falling = falling * bracket_q(n + alpha - i)
        term = qbinomial(n, k) * falling
        term = term * Poly.monomial({"x": n - k, "q": k * (k - alpha - 2 * n)})
        out = out + (-term if k % 2 else term)
    return out


def moment_closed_form(key: str, n: int) -> Poly:
    """The exact n-th moment of the specialized family, as a Laurent poly in q."""
    if n < 0:
        raise ValueError("moment_closed_form requires n >= 0")
    if key == "t2":
        return Poly.monomial({"q": -n}) * qfactorial(n)
    if key == "t3":
        return Poly.one() if n == 0 else _q() * qfactorial(n)
    if key == "ql":
        return Poly.monomial({"q": -choose2(n + 1)}) * qfactorial(n)
    raise ValueError(f"unknown family {key!r}; expected one of {FAMILY_KEYS}")


# -- numeric measure checks --------------------------------------------------

#: truncate infinite products once a factor is this close to 1
_PRODUCT_EPS = 1e-16


@dataclass(frozen=True)
class DiscreteMeasure:
    """A truncated purely discrete measure: (location, mass) atoms."""

    atoms: tuple[tuple[float, float], ...]
    truncation: int
    q: float

    def moment(self, n: int) -> float:
        return sum(mass * location ** n for location, mass in self.atoms)

    def total_mass(self) -> float:
        return sum(mass for _, mass in self.atoms)


def _qpochhammer_inf(q: float, truncation: int) -> float:
    """(q; q)_infinity by truncated product."""
    out = 1.0
    for i in range(1, truncation + 1):
        factor = 1.0 - q ** i
        out *= factor
        if abs(1.0 - factor) < _PRODUCT_EPS:
            break
    return out


def sum2_measure(q: float, truncation: int = 80) -> DiscreteMeasure:
    """Atoms of the sum-of-two family: mass 1-q at 0 and geometric atoms.

    Mass q^i (q;q)_inf / (q;q)_{i-1} sits at q^(i-1) / (1-q) for i >= 1.
    """
    if not 0.0 < q < 1.0:
        raise ValueError("q must lie strictly between 0 and 1")
    qq_inf = _qpochhammer_inf(q, truncation)
    atoms = [(0.0, 1.0 - q)]
    poch = 1.0  # (q;q)_{i-1}
    for i in range(1, truncation + 1):
        atoms.append((q ** (i - 1) / (1.0 - q), q ** i * qq_inf / poch))
        poch *= 1.0 - q ** i
    return DiscreteMeasure(atoms=tuple(atoms), truncation=truncation, q=q)


def qjacobi_measure(alpha: int, q: float, truncation: int = 80) -> DiscreteMeasure:
    """Atoms of the little q-Jacobi measure with vanishing second parameter.

    Mass q^((alpha+1) i) (q^(alpha+1); q)_inf / (q;q)_i sits at q^i, i >= 0.
    """
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    if not 0.0 < q < 1.0:
        raise ValueError("q must lie strictly between 0 and 1")
    head = 1.0
    for i in range(alpha):
        head *= 1.0 - q ** (i + 1)
    front = _qpochhammer_inf(q, truncation + alpha) / head  # (q^(alpha+1); q)_inf
    atoms = []
    poch = 1.0  # (q;q)_i
    for i in range(truncation + 1):
        atoms.append((q ** i, q ** ((alpha + 1) * i) * front / poch))
        poch *= 1.0 - q ** (i + 1)
    return DiscreteMeasure(atoms=tuple(atoms), truncation=truncation, q=q)


def _error_report(family: str, q: float, truncation: int, rows: list[dict], tolerance: float, **extra) -> dict:
    max_rel = max(row["rel_error"] for row in rows)
    return {
        "family": family,
        **extra,
        "q": q,
        "truncation": truncation,
        "tolerance": tolerance,
        "moments": rows,
        "max_rel_error": max_rel,
        "pass": max_rel < tolerance,
    }


def sum2_measure_check(
    q: float, truncation: int = 80, max_n: int = 6, tolerance: float = 1e-9
) -> dict:
    """Compare the measure's moments with 1, q 1!_q, q 2!_q, ..."""
    measure = sum2_measure(q, truncation)
    rows = []
    for n in range(max_n + 1):
        expected = float(moment_closed_form("t3", n).eval_numeric({"q": q}))
        actual = measure.moment(n)
        err = abs(actual - expected)
        rows.append(
            {
                "n": n,
                "expected": expected,
                "actual": actual,
                "abs_error": err,
                "rel_error": err / abs(expected),
            }
        )
    return _error_report("sum2", q, truncation, rows, tolerance)


def qjacobi_measure_check(
    alpha: int, q: float, truncation: int = 80, max_n: int = 6, tolerance: float = 1e-9
) -> dict:
    """Check raw and rescaled moments of the little q-Jacobi measure.

    Raw moments must equal (q^(alpha+1); q)_n; after the x -> x q (1 - q)
    rescaling they must equal q^(-n) (n+alpha)!_q / alpha!_q, which for
    alpha = 0 is the q^(-n) n!_q moment sequence of the t2 specialization.
    """
    measure = qjacobi_measure(alpha, q, truncation)
    scale = q * (1.0 - q)
    rows = []
    for n in range(max_n + 1):
        raw_expected = 1.0
        for i in range(n):
            raw_expected *= 1.0 - q ** (alpha + 1 + i)
        rescaled_expected = q ** (-n)
        for i in range(alpha + 1, alpha + n + 1):
            rescaled_expected *= float(bracket_q(i).eval_numeric({"q": q}))
        raw = measure.moment(n)
        rescaled = raw / scale ** n
        raw_err = abs(raw - raw_expected) / abs(raw_expected)
        rescaled_err = abs(rescaled - rescaled_expected) / abs(rescaled_expected)
        rows.append(
            {
                "n": n,
                "expected": rescaled_expected,
                "actual": rescaled,
                "abs_error": abs(rescaled - rescaled_expected),
                "rel_error": max(raw_err, rescaled_err),
            }
        )
    return _error_report("qjacobi", q, truncation, rows, tolerance, alpha=alpha)
