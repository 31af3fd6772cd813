"""Exact sparse Laurent-polynomial arithmetic over a fixed set of variables.

The whole library works in one ring: Laurent polynomials with integer
coefficients in the eleven variables

    a, b, r, s, t, u, p, q, v, w, x

(in that canonical order).  a/b weight runs vs. non-initial elements, the
four pairs (r,s), (t,u), (p,q), (v,w) weight the four element classes, and
x is the polynomial variable of the orthogonal family itself.

A :class:`Poly` stores a dict mapping exponent vectors (one signed integer
per variable) to nonzero integer coefficients.  The representation is
canonical, so two polynomials are equal iff their term dicts are equal;
every exactness check in the package reduces to that.  Instances are
never mutated after construction and are safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

VARIABLES = ("a", "b", "r", "s", "t", "u", "p", "q", "v", "w", "x")
NVARS = len(VARIABLES)
VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}

_ZERO_KEY = (0,) * NVARS

Scalar = Union[int, float, Fraction]


class NonInvertibleSubstitution(ValueError):
    """A non-unit value was substituted into a negatively exponentiated variable."""


class InexactDivision(ArithmeticError):
    """exact_divide was called on a pair with no polynomial quotient."""


def _key(exps: Mapping[str, int]) -> tuple[int, ...]:
    vec = [0] * NVARS
    for name, e in exps.items():
        idx = VAR_INDEX.get(name)
        if idx is None:
            raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}")
        vec[idx] = int(e)
    return tuple(vec)


class Poly:
    """Sparse multivariate Laurent polynomial with exact integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, value: int | None = None):
        if value:
            self._terms = {_ZERO_KEY: int(value)}
        else:
            self._terms = {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict[tuple[int, ...], int]) -> "Poly":
        """Wrap a trusted canonical term dict without copying."""
        out = cls.__new__(cls)
        out._terms = terms
        return out

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Poly":
        return cls._raw({_ZERO_KEY: 1})

    @classmethod
    def constant(cls, value: int) -> "Poly":
        return cls._raw({_ZERO_KEY: int(value)} if value else {})

    @classmethod
    def variable(cls, name: str, exponent: int = 1) -> "Poly":
        if exponent == 0:
            return cls.one()
        return cls._raw({_key({name: exponent}): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: int = 1) -> "Poly":
        if coeff == 0:
            return cls.zero()
        return cls._raw({_key(exps): int(coeff)})

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[Mapping[str, int], int]]) -> "Poly":
        """Sum of coeff * monomial(exps); duplicate exponent vectors accumulate."""
        terms: dict[tuple[int, ...], int] = {}
        for exps, coeff in pairs:
            k = _key(exps)
            c = terms.get(k, 0) + coeff
            if c:
                terms[k] = c
            elif k in terms:
                del terms[k]
        return cls._raw(terms)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[tuple[dict[str, int], int]]:
        """Yield (exponent dict, coefficient) pairs in canonical order."""
        for k in sorted(self._terms):
            yield (
                {VARIABLES[i]: e for i, e in enumerate(k) if e},
                self._terms[k],
            )

    def variables(self) -> set[str]:
        used: set[str] = set()
        for k in self._terms:
            for i, e in enumerate(k):
                if e:
                    used.add(VARIABLES[i])
        return used

    def degree(self, name: str) -> int:
        """Largest exponent of `name` over all terms (0 for the zero poly)."""
        i = VAR_INDEX[name]
        return max((k[i] for k in self._terms), default=0)

    def min_degree(self, name: str) -> int:
        i = VAR_INDEX[name]
        return min((k[i] for k in self._terms), default=0)

    def constant_term(self) -> int:
        return self._terms.get(_ZERO_KEY, 0)

    def coefficients_in(self, name: str) -> dict[int, "Poly"]:
        """Split into coefficient polynomials by the exponent of one variable.

        Returns {e: c_e} with self = sum_e c_e * name**e and `name` absent
        from every c_e.
        """
        i = VAR_INDEX[name]
        buckets: dict[int, dict[tuple[int, ...], int]] = {}
        for k, c in self._terms.items():
            e = k[i]
            stripped = k[:i] + (0,) + k[i + 1 :]
            buckets.setdefault(e, {})[stripped] = c
        return {e: Poly._raw(d) for e, d in buckets.items()}

    # -- ring operations ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == Poly.constant(other)._terms
        return NotImplemented

    __hash__ = None  # mutable-looking container; identity hashing would mislead

    def __pos__(self) -> "Poly":
        return self

    def __neg__(self) -> "Poly":
        return Poly._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            other = Poly.constant(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            nc = out.get(k, 0) + c
            if nc:
                out[k] = nc
            elif k in out:
                del out[k]
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            other = Poly.constant(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "Poly | int") -> "Poly":
        return (-self) + other

    def __mul__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            if other == 0:
                return Poly.zero()
            if other == 1:
                return self
            return Poly._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        f, g = self._terms, other._terms
        if len(f) > len(g):
            f, g = g, f
        out: dict[tuple[int, ...], int] = {}
        get = out.get
        add = int.__add__
        for k1, c1 in f.items():
            for k2, c2 in g.items():
                k = tuple(map(add, k1, k2))
                nc = get(k, 0) + c1 * c2
                if nc:
                    out[k] = nc
                elif k in out:
                    del out[k]
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            inv = self._unit_inverse()
            if inv is None:
                raise NonInvertibleSubstitution(
                    f"cannot raise {self!r} to negative power {exponent}: "
                    "only monomials with coefficient +-1 are invertible"
                )
            return inv ** (-exponent)
        result = Poly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def _unit_inverse(self) -> "Poly | None":
        """Inverse if self is a monomial with coefficient +-1, else None."""
        if len(self._terms) != 1:
            return None
        (k, c), = self._terms.items()
        if c not in (1, -1):
            return None
        return Poly._raw({tuple(-e for e in k): c})

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, mapping: Mapping[str, "Poly | int"]) -> "Poly":
        """Simultaneous substitution of polynomials for variables.

        Variables absent from the mapping stay themselves.  Substituting
        into a negatively exponentiated variable requires the value to be
        an invertible monomial (coefficient +-1); anything else raises
        NonInvertibleSubstitution.
        """
        values: dict[int, Poly] = {}
        for name, val in mapping.items():
            idx = VAR_INDEX.get(name)
            if idx is None:
                raise ValueError(f"unknown variable {name!r}")
            values[idx] = val if isinstance(val, Poly) else Poly.constant(val)
        power_cache: dict[tuple[int, int], Poly] = {}

        def power(idx: int, e: int) -> Poly:
            got = power_cache.get((idx, e))
            if got is None:
                got = power_cache[(idx, e)] = values[idx] ** e
            return got

        out = Poly.zero()
        for k, c in self._terms.items():
            term = Poly.constant(c)
            passthrough = [0] * NVARS
            for i, e in enumerate(k):
                if not e:
                    continue
                if i in values:
                    term = term * power(i, e)
                else:
                    passthrough[i] = e
            if any(passthrough):
                term = term * Poly._raw({tuple(passthrough): 1})
            out = out + term
        return out

    def eval_numeric(self, values: Mapping[str, Scalar]) -> Scalar:
        """Evaluate term by term at numeric values (int, float, or Fraction).

        Every variable occurring in the polynomial must be mapped.  A zero
        base under a negative exponent raises ZeroDivisionError.  With
        Fraction inputs the result is exact.
        """
        idx_val: dict[int, Scalar] = {}
        for name, v in values.items():
            i = VAR_INDEX.get(name)
            if i is None:
                raise ValueError(f"unknown variable {name!r}")
            idx_val[i] = v
        total: Scalar = 0
        for k, c in self._terms.items():
            prod: Scalar = c
            for i, e in enumerate(k):
                if not e:
                    continue
                if i not in idx_val:
                    raise ValueError(f"no value supplied for variable {VARIABLES[i]!r}")
                base = idx_val[i]
                if e < 0 and base == 0:
                    raise ZeroDivisionError(
                        f"variable {VARIABLES[i]!r} is 0 but occurs with exponent {e}"
                    )
                prod *= base ** e
            total += prod
        return total

    # -- exact division ----------------------------------------------------

    def exact_divide(self, divisor: "Poly") -> "Poly":
        """Return h with self = divisor * h, or raise InexactDivision.

        Multivariate long division by the lex-leading term.  Because the
        ring is a Laurent ring, monomial quotients always exist; only the
        integer-coefficient divisibility and the final zero remainder are
        in question.  Quotient exponents are confined to the per-variable
        box forced by min/max degrees, which also bounds the loop.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return Poly.zero()
        lo = []
        hi = []
        for name in VARIABLES:
            l = self.min_degree(name) - divisor.min_degree(name)
            h = self.degree(name) - divisor.degree(name)
            if l > h:
                raise InexactDivision("degree bounds admit no quotient")
            lo.append(l)
            hi.append(h)
        g_lead = max(divisor._terms)
        g_lc = divisor._terms[g_lead]
        remainder = dict(self._terms)
        quotient: dict[tuple[int, ...], int] = {}
        while remainder:
            r_lead = max(remainder)
            r_lc = remainder[r_lead]
            qc, rem = divmod(r_lc, g_lc)
            if rem:
                raise InexactDivision("leading coefficient not divisible")
            qk = tuple(a - b for a, b in zip(r_lead, g_lead))
            if any(e < lo[i] or e > hi[i] for i, e in enumerate(qk)):
                raise InexactDivision("quotient term outside feasible degree box")
            quotient[qk] = qc
            for k, c in divisor._terms.items():
                kk = tuple(a + b for a, b in zip(qk, k))
                nc = remainder.get(kk, 0) - qc * c
                if nc:
                    remainder[kk] = nc
                elif kk in remainder:
                    del remainder[kk]
        return Poly._raw(quotient)

    # -- serialization and display -----------------------------------------

    def to_json(self) -> list[dict]:
        """JSON object form: term list sorted in canonical monomial order."""
        out = []
        for k in sorted(self._terms):
            exps = {VARIABLES[i]: e for i, e in enumerate(k) if e}
            out.append({"coeff": str(self._terms[k]), "exps": exps})
        return out

    @classmethod
    def from_json(cls, obj: Iterable[Mapping]) -> "Poly":
        return cls.from_terms(
            (entry["exps"], int(entry["coeff"])) for entry in obj
        )

    def _monomial_str(self, k: tuple[int, ...], c: int) -> str:
        factors = []
        for i, e in enumerate(k):
            if e == 1:
                factors.append(VARIABLES[i])
            elif e:
                factors.append(f"{VARIABLES[i]}^{e}")
        if not factors:
            return str(c)
        body = "*".join(factors)
        if c == 1:
            return body
        if c == -1:
            return "-" + body
        return f"{c}*{body}"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms):
            term = self._monomial_str(k, self._terms[k])
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append(" - " + term[1:])
            else:
                parts.append(" + " + term)
        return "".join(parts)

    def __repr__(self) -> str:
        if len(self._terms) <= 12:
            return f"Poly({self})"
        return f"<Poly with {len(self._terms)} terms>"


ZERO = Poly.zero()
ONE = Poly.one()
