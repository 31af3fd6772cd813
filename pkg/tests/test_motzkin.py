"""Labeled path enumeration, weights, and the insertion bijection."""

import math

import pytest

from octabasic.polyring import Poly
from octabasic.orthopoly import moments_from_recurrence
from octabasic.families import octabasic_coeffs
from octabasic.permstat import all_permutations, octabasic_weight
from octabasic.motzkin import (
    E_DOTTED,
    E_SOLID,
    NE,
    SE,
    MalformedPath,
    Step,
    enumerate_paths,
    format_path,
    insertion_trace,
    moment_via_paths,
    parse_path,
    path_to_perm,
    path_weight,
    perm_to_path,
    validate_path,
)

EXAMPLE = (2, 6, 3, 5, 7, 4, 1, 8, 9)
FIGURE_PERM = (10, 8, 9, 11, 1, 3, 7, 5, 4, 6, 2)


def test_enumerate_counts():
    for n in range(8):
        assert sum(1 for _ in enumerate_paths(n)) == math.factorial(n)


def test_enumerate_smallest():
    assert list(enumerate_paths(0)) == [()]
    assert list(enumerate_paths(1)) == [(Step(E_SOLID, 0, 0),)]
    two = list(enumerate_paths(2))
    assert (Step(E_SOLID, 0, 0), Step(E_SOLID, 0, 0)) in two
    assert (Step(NE, 0, 0), Step(SE, 0, 0)) in two
    assert len(two) == 2


def test_enumerated_paths_are_valid_and_distinct():
    seen = set()
    for path in enumerate_paths(5):
        validate_path(path)
        assert path not in seen
        seen.add(path)


def test_path_weight():
    a, b = Poly.variable("a"), Poly.variable("b")
    assert path_weight(()) == 1
    assert path_weight((Step(E_SOLID, 0, 0),)) == a
    assert path_weight((Step(NE, 0, 0), Step(SE, 0, 0))) == a * b
    stair = (Step(NE, 0, 0), Step(E_DOTTED, 0, 0), Step(SE, 0, 0))
    assert path_weight(stair) == a * b ** 2


def test_path_to_perm_small():
    assert path_to_perm((Step(E_SOLID, 0, 0),)) == (1,)
    assert path_to_perm((Step(NE, 0, 0), Step(SE, 0, 0))) == (1, 2)
    assert path_to_perm((Step(E_SOLID, 0, 0), Step(E_SOLID, 0, 0))) == (2, 1)


def test_malformed_paths_rejected():
    with pytest.raises(MalformedPath):
        path_to_perm((Step(SE, 0, 0),))  # dips below axis
    with pytest.raises(MalformedPath):
        path_to_perm((Step(NE, 0, 0),))  # ends above axis
    with pytest.raises(MalformedPath):
        path_to_perm((Step(NE, 1, 0), Step(SE, 0, 0)))  # wrong label sum
    with pytest.raises(MalformedPath):
        path_to_perm((Step(NE, 0, 0), Step(E_DOTTED, 1, 0), Step(SE, 0, 0)))
    with pytest.raises(MalformedPath):
        validate_path((Step("X", 0, 0),))
    with pytest.raises(MalformedPath):
        validate_path((Step(NE, -1, 1), Step(SE, 0, 0)))


def test_perm_to_path_worked_example():
    path = perm_to_path(EXAMPLE)
    kinds = [step.kind for step in path]
    assert kinds == [NE, NE, NE, E_SOLID, E_DOTTED, SE, SE, E_DOTTED, SE]
    labels = [(step.j, step.k) for step in path]
    assert labels == [
        (0, 0), (0, 1), (1, 1), (2, 1), (1, 1), (0, 2), (0, 1), (0, 0), (0, 0),
    ]
    assert path_to_perm(path) == EXAMPLE


def test_figure_permutation_round_trips():
    path = perm_to_path(FIGURE_PERM)
    validate_path(path)
    assert path_to_perm(path) == FIGURE_PERM
    assert path_weight(path) == octabasic_weight(FIGURE_PERM)


def test_bijection_round_trips_exhaustive():
    for n in range(7):
        for path in enumerate_paths(n):
            word = path_to_perm(path)
            assert perm_to_path(word) == path
        for word in all_permutations(n):
            path = perm_to_path(word)
            assert path_to_perm(path) == word


def test_weight_preserved():
    for n in range(6):
        for path in enumerate_paths(n):
            assert path_weight(path) == octabasic_weight(path_to_perm(path))


def test_moments_via_paths_match_recurrence():
    mus = moments_from_recurrence(octabasic_coeffs(), 5)
    for n in range(6):
        assert moment_via_paths(n) == mus[n]


def test_parse_and_format():
    text = "NE(0,0),SE(0,0)"
    path = parse_path(text)
    assert path == (Step(NE, 0, 0), Step(SE, 0, 0))
    assert format_path(path) == text
    assert parse_path(" NE (0, 0) , SE (0, 0) ") == path
    assert parse_path("") == ()
    with pytest.raises(ValueError):
        parse_path("NE(0,0);SE(0,0)")
    with pytest.raises(ValueError):
        parse_path("NW(0,0)")


def test_insertion_trace():
    lines = insertion_trace(perm_to_path(EXAMPLE))
    assert len(lines) == 9
    assert lines[0] == "1: NE(0,0) level 0->1 | 1"
    assert lines[-1].endswith("| 2 6|3 5 7|4|1 8 9")
