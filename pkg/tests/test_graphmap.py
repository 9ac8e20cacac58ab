from collections import Counter
from itertools import combinations
from math import comb

import pytest

from rainbow_schur.core.base import Coloring, SchurTriple
from rainbow_schur.core.constructions import build_c0
from rainbow_schur.core.graphmap import (
    balogh_gap,
    count_rainbow_triangles,
    fiber_size,
    induced_edge_color,
    map_triangle,
    total_triangles,
)


def test_map_triangle():
    assert map_triangle(1, 3, 6).as_tuple() == (2, 3, 5)
    with pytest.raises(ValueError):
        map_triangle(3, 2, 6)


def test_fiber_sizes_match_enumeration():
    n = 7
    fibers = Counter(
        map_triangle(*vertices).as_tuple() for vertices in combinations(range(1, n + 2), 3)
    )
    for (x, y, z), size in fibers.items():
        assert fiber_size(n, SchurTriple(x=x, y=y, z=z)) == size
    assert sum(fibers.values()) == total_triangles(n) == comb(n + 1, 3)


def test_fiber_size_rejects_large_triples():
    with pytest.raises(ValueError):
        fiber_size(4, SchurTriple(x=2, y=3, z=5))


def test_induced_edge_color():
    base = build_c0(10)
    assert induced_edge_color(base, 2, 7) == induced_edge_color(base, 7, 2) == base.color(5)
    with pytest.raises(ValueError):
        induced_edge_color(base, 3, 3)
    with pytest.raises(ValueError):
        induced_edge_color(base, 1, 12)


def test_fiber_count_matches_scan(rng):
    for _ in range(50):
        n = int(rng.integers(1, 31))
        coloring = Coloring.from_sequence(rng.integers(1, 4, size=n))
        fiber = count_rainbow_triangles(coloring, method="fiber")
        scan = count_rainbow_triangles(coloring, method="scan")
        assert fiber.rainbow_triangles == scan.rainbow_triangles
        assert fiber.n_vertices == n + 1


def test_parallel_scan_matches_serial():
    base = build_c0(60)
    serial = count_rainbow_triangles(base, method="scan", workers=1)
    parallel = count_rainbow_triangles(base, method="scan", workers=2)
    assert serial == parallel


def test_c0_triangle_density():
    n = 2000
    stats = count_rainbow_triangles(build_c0(n))
    assert 0.0513 <= stats.rainbow_triangles / n**3 <= 0.0553


def test_balogh_gap_on_c0():
    gap = balogh_gap(build_c0(200))
    assert not gap.exceeds
    assert gap.ratio < gap.ceiling + gap.epsilon
    with pytest.raises(ValueError):
        balogh_gap(build_c0(2))


@pytest.mark.parametrize(
    "vertices, triple", [((1, 2, 3), (1, 1, 2)), ((2, 4, 7), (2, 3, 5))]
)
def test_map_triangle_examples(vertices, triple):
    assert map_triangle(*vertices).as_tuple() == triple


@pytest.mark.parametrize(
    "n, triple, size", [(10, (1, 2, 3), 8), (10, (1, 9, 10), 1), (5, (2, 3, 5), 1)]
)
def test_fiber_size_examples(n, triple, size):
    x, y, z = triple
    assert fiber_size(n, SchurTriple(x=x, y=y, z=z)) == size


def test_c0_fiber_count_matches_scan():
    for n in (10, 57, 200):
        base = build_c0(n)
        fiber = count_rainbow_triangles(base, method="fiber")
        scan = count_rainbow_triangles(base, method="scan")
        assert fiber.rainbow_triangles == scan.rainbow_triangles


def test_random_colorings_stay_below_balogh_slack(rng):
    for _ in range(100):
        coloring = Coloring.from_sequence(rng.integers(1, 4, size=300))
        assert balogh_gap(coloring).ratio <= 0.42


def test_constant_coloring_has_no_rainbow_triangles():
    base = Coloring(n=20, colors=(1,) * 20)
    assert count_rainbow_triangles(base).rainbow_triangles == 0
    assert count_rainbow_triangles(Coloring(n=2, colors=(1, 2))).rainbow_triangles == 0


def test_triangle_is_rainbow_iff_its_triple_is(rng):
    for n in range(1, 26):
        for base in (Coloring.from_sequence(rng.integers(1, 4, size=n)), build_c0(n)):
            for v1, v2, v3 in combinations(range(1, n + 2), 3):
                edges = {
                    induced_edge_color(base, v1, v2),
                    induced_edge_color(base, v2, v3),
                    induced_edge_color(base, v1, v3),
                }
                triple = map_triangle(v1, v2, v3)
                labels = {base.color(triple.x), base.color(triple.y), base.color(triple.z)}
                assert (len(edges) == 3) == (len(labels) == 3)


@pytest.mark.slow
def test_fiber_count_matches_scan_at_scale(rng):
    for _ in range(200):
        n = int(rng.integers(1, 61))
        coloring = Coloring.from_sequence(rng.integers(1, 4, size=n))
        fiber = count_rainbow_triangles(coloring, method="fiber")
        scan = count_rainbow_triangles(coloring, method="scan")
        assert fiber.rainbow_triangles == scan.rainbow_triangles


@pytest.mark.slow
def test_c0_fiber_count_matches_scan_for_every_n():
    for n in range(1, 201):
        base = build_c0(n)
        fiber = count_rainbow_triangles(base, method="fiber")
        scan = count_rainbow_triangles(base, method="scan")
        assert fiber.rainbow_triangles == scan.rainbow_triangles
