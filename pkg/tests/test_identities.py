from itertools import product

import pytest
from pydantic import ValidationError

from rainbow_schur.core.base import Coloring
from rainbow_schur.identities.base import CyclicColoring
from rainbow_schur.identities.cyclic import check_ccs, check_datskovsky, count_zn_triples
from rainbow_schur.identities.hypercube import (
    binary_from_coloring,
    naive_unordered_mono,
    rz_objective,
)


def brute_force_zn(coloring: CyclicColoring) -> tuple[int, int]:
    n, colors = coloring.n, coloring.colors
    mono = rainbow = 0
    for x in range(n):
        for y in range(n):
            triple = {colors[x], colors[y], colors[(x + y) % n]}
            mono += len(triple) == 1
            rainbow += len(triple) == 3
    return mono, rainbow


@pytest.mark.parametrize(
    "colors, num_colors, mono, rainbow",
    [
        ((1, 2), 2, 1, 0),
        ((1, 2, 2), 2, 3, 0),
        ((1, 2, 3), 3, 1, 2),
        ((1, 1, 2, 2, 2), 2, 7, 0),
    ],
)
def test_zn_counts_examples(colors, num_colors, mono, rainbow):
    counts = count_zn_triples(CyclicColoring(n=len(colors), colors=colors, num_colors=num_colors))
    assert (counts.mono, counts.rainbow, counts.total) == (mono, rainbow, len(colors) ** 2)


def test_zn_counts_match_enumeration(rng):
    for _ in range(200):
        n = int(rng.integers(1, 25))
        colors = tuple(int(c) for c in rng.integers(1, 4, size=n))
        coloring = CyclicColoring(n=n, colors=colors)
        counts = count_zn_triples(coloring)
        assert (counts.mono, counts.rainbow) == brute_force_zn(coloring)


def test_two_color_identity_exhaustive():
    for n in range(1, 11):
        for colors in product((1, 2), repeat=n):
            assert check_datskovsky(CyclicColoring(n=n, colors=colors, num_colors=2)).holds


@pytest.mark.slow
def test_two_color_identity_exhaustive_to_twelve():
    for n in (11, 12):
        for colors in product((1, 2), repeat=n):
            assert check_datskovsky(CyclicColoring(n=n, colors=colors, num_colors=2)).holds


def test_three_color_identity_exhaustive():
    for n in range(1, 8):
        for colors in product((1, 2, 3), repeat=n):
            assert check_ccs(CyclicColoring(n=n, colors=colors)).holds


@pytest.mark.slow
def test_three_color_identity_exhaustive_to_nine():
    for n in (8, 9):
        for colors in product((1, 2, 3), repeat=n):
            assert check_ccs(CyclicColoring(n=n, colors=colors)).holds


def test_identities_on_random_colorings(rng):
    for _ in range(500):
        n = int(rng.integers(1, 41))
        two = tuple(int(c) for c in rng.integers(1, 3, size=n))
        three = tuple(int(c) for c in rng.integers(1, 4, size=n))
        assert check_datskovsky(CyclicColoring(n=n, colors=two, num_colors=2)).holds
        assert check_ccs(CyclicColoring(n=n, colors=three)).holds


def test_two_color_count_depends_only_on_class_sizes():
    first = CyclicColoring(n=7, colors=(1, 1, 2, 2, 2, 2, 2), num_colors=2)
    second = CyclicColoring(n=7, colors=(2, 1, 2, 2, 1, 2, 2), num_colors=2)
    assert count_zn_triples(first).mono == count_zn_triples(second).mono


def test_degenerate_classes():
    single_class = check_datskovsky(CyclicColoring(n=6, colors=(2,) * 6, num_colors=2))
    assert single_class.holds
    assert single_class.terms["mono"] == 36

    missing_color = check_ccs(CyclicColoring(n=5, colors=(1, 2, 1, 1, 2)))
    assert missing_color.holds
    assert missing_color.terms["rainbow"] == 0


def test_three_singletons_identity_terms():
    check = check_ccs(CyclicColoring(n=3, colors=(1, 2, 3)))
    assert (check.lhs, check.rhs) == (2, 2)


def test_identity_color_count_mismatch():
    with pytest.raises(ValueError):
        check_datskovsky(CyclicColoring(n=3, colors=(1, 2, 3)))
    with pytest.raises(ValueError):
        check_ccs(CyclicColoring(n=2, colors=(1, 2), num_colors=2))
    with pytest.raises(ValidationError):
        CyclicColoring(n=2, colors=(1, 3), num_colors=2)


def test_rz_objective_all_ones():
    assert rz_objective([1] * 5) == 4
    assert rz_objective([0] * 5) == 4


def test_rz_objective_matches_enumeration():
    for n in range(1, 11):
        for x in product((0, 1), repeat=n):
            assert rz_objective(x) == naive_unordered_mono(x)


@pytest.mark.slow
def test_rz_objective_matches_enumeration_to_twelve():
    for n in (11, 12):
        for x in product((0, 1), repeat=n):
            assert rz_objective(x) == naive_unordered_mono(x)


def test_rz_objective_alternating():
    for n in range(1, 31):
        x = [i % 2 for i in range(1, n + 1)]
        assert rz_objective(x) == naive_unordered_mono(x)


def test_rz_objective_complement_invariance(rng):
    for _ in range(100):
        x = rng.integers(0, 2, size=int(rng.integers(1, 40)))
        assert rz_objective(x) == rz_objective(1 - x)


def test_rz_objective_rejects_non_binary():
    with pytest.raises(ValueError):
        rz_objective([0, 2, 1])


def test_binary_from_coloring():
    assert binary_from_coloring(Coloring.from_sequence([2, 3, 2, 2])) == (1, 0, 1, 1)
    with pytest.raises(ValueError):
        binary_from_coloring(Coloring.from_sequence([1, 2, 3]))
