"""Command-line interface: compute moments and polynomials, verify the identities.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial

from .polyring import Poly, InexactDivision
from .qseries import qfactorial_coefficients
from .orthopoly import RecurrenceCoeffs, moments_from_recurrence, monic_sequence
from . import permstat
from .permstat import (
    RUN_TERM_N_MINUS_RUN,
    RUN_TERM_RUN_MINUS_1,
    coefficient_variants,
    distribution_many,
    distribution_csv,
    is_mahonian,
    parse_profile,
    shifted_profile,
    standard_profile,
    moment_via_permutations,
)
from .motzkin import (
    MalformedPath,
    format_path,
    insertion_trace,
    moment_via_paths,
    parse_path,
    path_to_perm,
    perm_to_path,
)
from . import families
from .families import (
    octabasic_coeffs,
    qjacobi_coeffs,
    qjacobi_explicit,
    qjacobi_measure_check,
    qlaguerre_coeffs,
    qlaguerre_explicit,
    specialization,
    sum2_coeffs,
    sum2_explicit,
    sum2_measure_check,
)
from . import oddfamily
from .oddfamily import (
    CHAIN_VARIABLES,
    IDENTIFICATION,
    even_coeffs,
    odd_coeffs,
    odd_moment_closed_form,
    odd_moments,
    odd_specialization_check,
    restricted_count,
    star_distributions,
)

FAMILIES = ("octabasic", "qjacobi", "sum2", "qlaguerre", "odd")
VERIFY_CHECKS = (
    "theorem1",
    "theorem2",
    "theorem3",
    "theorem4",
    "identity35",
    "prop1",
    "odd-moments",
    "restricted-count",
)
VERIFY_DEFAULT_MAX_N = {
    "theorem1": 6,
    "theorem2": 9,
    "theorem3": 9,
    "theorem4": 8,
    "identity35": 8,
    "prop1": 6,
    "odd-moments": 6,
    "restricted-count": 7,
}


class UsageError(Exception):
    pass


def _resolve_coeffs(args) -> RecurrenceCoeffs:
    family, spec_key, alpha = args.family, args.spec, args.alpha
    if alpha < 0:
        raise UsageError("--alpha must be >= 0")
    if family in ("qjacobi", "sum2", "qlaguerre") and spec_key:
        raise UsageError(f"--spec does not apply to the already specialized family {family!r}")
    if family == "octabasic":
        coeffs = octabasic_coeffs()
        if spec_key:
            coeffs = specialization(spec_key).apply_coeffs(coeffs)
        return coeffs
    if family == "odd":
        coeffs = odd_coeffs()
        if spec_key:
            coeffs = coeffs.substituted(
                specialization(spec_key).restrict(CHAIN_VARIABLES), name=f"odd[{spec_key}]"
            )
        return coeffs
    if family == "qjacobi":
        return qjacobi_coeffs(alpha)
    if family == "sum2":
        return sum2_coeffs()
    if family == "qlaguerre":
        return qlaguerre_coeffs(alpha)
    raise UsageError(f"unknown family {family!r}")


def cmd_moments(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    if args.family == "odd":
        mus = odd_moments(args.n)
        if args.spec:
            assignments = specialization(args.spec).restrict(CHAIN_VARIABLES)
            mus = [mu.substitute(assignments) for mu in mus]
    else:
        mus = moments_from_recurrence(_resolve_coeffs(args), args.n)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "family": args.family,
                    "spec": args.spec,
                    "alpha": args.alpha,
                    "n": args.n,
                    "moments": [mu.to_json() for mu in mus],
                }
            )
        )
    else:
        for k, mu in enumerate(mus):
            print(f"mu_{k} = {mu}")
    return 0


def cmd_polys(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    coeffs = _resolve_coeffs(args)
    ps = monic_sequence(coeffs, args.n)
    failures = 0
    closed = None
    if args.explicit:
        if args.family == "qjacobi":
            if args.alpha != 0:
                raise UsageError("--explicit for qjacobi is the alpha = 0 closed form")
            closed = qjacobi_explicit
        elif args.family == "sum2":
            closed = sum2_explicit
        elif args.family == "qlaguerre":
            closed = lambda k: qlaguerre_explicit(k, args.alpha)
        else:
            raise UsageError(f"family {args.family!r} has no explicit closed form")
    if args.format == "json":
        payload = {
            "family": args.family,
            "spec": args.spec,
            "alpha": args.alpha,
            "n": args.n,
            "polys": [p.to_json() for p in ps],
        }
        if closed is not None:
            matches = [closed(k) == ps[k] for k in range(args.n + 1)]
            failures = matches.count(False)
            payload["explicit_matches"] = matches
        print(json.dumps(payload))
    else:
        for k, p in enumerate(ps):
            print(f"p_{k} = {p}")
            if closed is not None:
                ok = closed(k) == p
                failures += 0 if ok else 1
                print(f"  explicit form {'matches' if ok else 'DIFFERS'}")
    return 1 if failures else 0


def cmd_stats(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    try:
        profile = parse_profile(args.profile)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    dist = permstat.distribution(args.n, profile)
    mahonian = is_mahonian(dist, args.n)
    if args.format == "csv":
        print(distribution_csv(dist))
    else:
        print(f"profile: {profile}")
        print(distribution_csv(dist))
        verdict = "PASS" if mahonian else "FAIL"
        print(f"{verdict}: distribution {'equals' if mahonian else 'differs from'} "
              f"coefficients of {args.n}!_q")
    return 0 if mahonian else 1


def _report_rows(rows: list[tuple[str, bool]]) -> int:
    failures = 0
    for label, ok in rows:
        print(f"{label}  {'PASS' if ok else 'FAIL'}")
        failures += 0 if ok else 1
    return 1 if failures else 0


def _verify_theorem1(max_n: int) -> list[tuple[str, bool]]:
    coeffs = octabasic_coeffs()
    mus = moments_from_recurrence(coeffs, max_n)
    rows = []
    for n in range(max_n + 1):
        ok = moment_via_permutations(n) == mus[n] and moment_via_paths(n) == mus[n]
        rows.append((f"n={n} permutation sum == path sum == recurrence", ok))
    return rows


def _verify_mahonian(max_n: int, run_term: str) -> list[tuple[str, bool]]:
    rows = []
    for n in range(1, max_n + 1):
        profiles = [standard_profile(run_term)]
        scope = "base"
        if n <= 8:
            profiles += coefficient_variants(run_term)
            profiles += [
                shifted_profile(standard_profile(run_term), c) for c in (-2, -1, 1, 2)
            ]
            scope = "base + 16 variants + shifts"
        expected = qfactorial_coefficients(n)
        dists = distribution_many(n, profiles)
        ok = all(d == expected for d in dists)
        rows.append((f"n={n} {scope} == {n}!_q", ok))
    return rows


def _verify_theorem4(max_n: int) -> list[tuple[str, bool]]:
    rows = []
    for n in range(1, max_n + 1):
        expected = qfactorial_coefficients(n)
        dists = star_distributions(n)
        ok = all(d == expected for d in dists.values())
        rows.append((f"n={n} starred statistic (both run terms) == {n}!_q", ok))
    return rows


def _verify_identity35(max_n: int) -> list[tuple[str, bool]]:
    rows = []
    for n in range(1, max_n + 1):
        ok = all(
            permstat.opener_closer_balance(w) for w in permstat.all_permutations(n)
        )
        rows.append((f"n={n} opener/closer balance on all of S_{n}", ok))
    return rows


def _verify_prop1(max_n: int) -> list[tuple[str, bool]]:
    rows = []
    for q in (0.3, 0.5):
        report = sum2_measure_check(q, truncation=80, max_n=max_n)
        rows.append(
            (f"sum2 measure q={q} max rel err {report['max_rel_error']:.2e}", report["pass"])
        )
    for alpha in (0, 1):
        for q in (0.3, 0.5):
            report = qjacobi_measure_check(alpha, q, truncation=80, max_n=max_n)
            rows.append(
                (
                    f"qjacobi measure alpha={alpha} q={q} max rel err "
                    f"{report['max_rel_error']:.2e}",
                    report["pass"],
                )
            )
    return rows


def _verify_odd_moments(max_n: int) -> list[tuple[str, bool]]:
    rows = []
    octa = octabasic_coeffs()
    even = even_coeffs()
    ok = True
    for n in range(max_n + 1):
        if octa.b_of(n).substitute(IDENTIFICATION) != even.b_of(n):
            ok = False
        if n >= 1 and octa.lambda_of(n).substitute(IDENTIFICATION) != even.lambda_of(n):
            ok = False
    rows.append((f"even family == identified ten-parameter family, n<={max_n}", ok))
    try:
        odd_moments(max_n)
        rows.append((f"odd moments == even-moment quotient, n<={max_n}", True))
    except InexactDivision:
        rows.append((f"odd moments == even-moment quotient, n<={max_n}", False))
    for which in (1, 2, 3):
        rows.append(
            (
                f"odd specialization ({which}) closed form, n<={max_n}",
                odd_specialization_check(which, max_n),
            )
        )
    return rows


def _verify_restricted_count(max_n: int) -> list[tuple[str, bool]]:
    rows = []
    for n in range(1, max_n + 1):
        count = restricted_count(n)
        rows.append((f"n={n} restricted class size {count} == {n}!", count == factorial(n)))
    return rows


def cmd_verify(args) -> int:
    max_n = args.max_n if args.max_n is not None else VERIFY_DEFAULT_MAX_N[args.check]
    if max_n < 1:
        raise UsageError("--max-n must be >= 1")
    dispatch = {
        "theorem1": _verify_theorem1,
        "theorem2": lambda m: _verify_mahonian(m, RUN_TERM_N_MINUS_RUN),
        "theorem3": lambda m: _verify_mahonian(m, RUN_TERM_RUN_MINUS_1),
        "theorem4": _verify_theorem4,
        "identity35": _verify_identity35,
        "prop1": _verify_prop1,
        "odd-moments": _verify_odd_moments,
        "restricted-count": _verify_restricted_count,
    }
    return _report_rows(dispatch[args.check](max_n))


def cmd_bijection(args) -> int:
    if args.direction == "encode":
        if args.path is None:
            raise UsageError("encode needs --path")
        try:
            path = parse_path(args.path)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        word = path_to_perm(path)
        if args.trace:
            for line in insertion_trace(path):
                print(line)
        print(" ".join(map(str, word)))
    else:
        if args.perm is None:
            raise UsageError("decode needs --perm")
        try:
            word = tuple(int(tok) for tok in args.perm.split())
        except ValueError:
            raise UsageError("--perm wants space-separated integers") from None
        path = perm_to_path(word)
        if args.trace:
            for line in insertion_trace(path):
                print(line)
        print(format_path(path))
    return 0


def cmd_measure(args) -> int:
    if not 0.0 < args.q < 1.0:
        raise UsageError("--q must lie strictly between 0 and 1")
    if args.which == "prop1":
        report = sum2_measure_check(args.q, truncation=args.truncate, max_n=args.max_n)
    else:
        report = qjacobi_measure_check(
            args.alpha, args.q, truncation=args.truncate, max_n=args.max_n
        )
    print(json.dumps(report, indent=2))
    return 0 if report["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octabasic",
        description="Exact computations and checks for the octabasic Laguerre family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", help="moment sequence of a family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--spec", choices=families.FAMILY_KEYS, default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("polys", help="monic polynomials of a family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--spec", choices=families.FAMILY_KEYS, default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--explicit", action="store_true",
                   help="cross-check against the closed-form expansion")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_polys)

    p = sub.add_parser("stats", help="distribution of a statistic profile over S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--profile", required=True,
                   help='e.g. "run=n-run; op=2,1; clos=2,1; cont=2,1; sing=2,1; shift=0"')
    p.add_argument("--format", choices=("csv", "text"), default="text")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="run one family of identity checks")
    p.add_argument("check", choices=VERIFY_CHECKS)
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bijection", help="convert between labeled paths and permutations")
    p.add_argument("direction", choices=("encode", "decode"))
    p.add_argument("--path", help='comma-separated steps, e.g. "NE(0,0),SE(0,0)"')
    p.add_argument("--perm", help='space-separated word, e.g. "2 6 3 5 7 4 1 8 9"')
    p.add_argument("--trace", action="store_true", help="print the insertion trace")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("measure", help="numeric check of a discrete orthogonality measure")
    p.add_argument("which", choices=("prop1", "qjacobi"))
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--truncate", type=int, default=80)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--alpha", type=int, default=0)
    p.set_defaults(func=cmd_measure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MalformedPath, InexactDivision, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
