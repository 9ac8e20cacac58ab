import csv
import math
from fractions import Fraction

import mpmath
import pytest

from rainbow_schur.bounds.base import ReweighInstance
from rainbow_schur.bounds.constants import eval_printed_alpha_star, simple_alpha_root
from rainbow_schur.bounds.reweigh import (
    check_reweigh,
    extract_cut_nuanced,
    extract_cut_simple,
    random_reweigh_instance,
)
from rainbow_schur.bounds.solver import (
    REGION_COLUMNS,
    beta_curves,
    compare_printed_point,
    region_rows,
    solve_fixed_gamma,
    solve_minmax,
    write_region_csv,
)
from rainbow_schur.config.settings import settings
from rainbow_schur.core.base import Coloring
from rainbow_schur.core.constructions import build_c0
from rainbow_schur.core.triples import classify

GAMMA0 = 0.077102


def test_simple_root_constants():
    root = simple_alpha_root()
    assert abs(root.closed_form - root.newton) < mpmath.mpf("1e-25")
    assert root.newton > mpmath.mpf("0.56706")
    assert root.coefficient <= mpmath.mpf("0.33922")
    assert abs(float(root.fraction_bound) - 0.678434) < 1e-5


def test_printed_point_fraction():
    point = eval_printed_alpha_star(GAMMA0)
    assert abs(float(point.fraction) - 0.66656) < 1e-4
    assert abs(float(point.alpha_star) - 0.534223) < 1e-5
    assert 0 <= point.beta_star <= 1


def test_printed_point_is_reported_off_the_cubic_curve():
    point = eval_printed_alpha_star(GAMMA0)
    assert point.beta2_gap is not None
    assert abs(point.beta2_gap) > mpmath.mpf("0.01")


def test_solver_at_gamma0():
    solution = solve_fixed_gamma(GAMMA0)
    assert solution.feasible
    assert 0.655 <= solution.fraction <= 0.668
    assert solution.binding.disjunct == "first"
    assert solution.binding.first_active
    assert solution.binding.cubic_lower_active
    assert abs(solution.alpha_star + solution.beta_star - (1 - 2 * GAMMA0)) < 1e-7


def test_dropping_the_disjunction_only_enlarges_the_region():
    with_disjunction = solve_fixed_gamma(GAMMA0)
    without = solve_fixed_gamma(GAMMA0, use_disjunction=False)
    assert without.fraction >= with_disjunction.fraction - 1e-9
    assert not without.binding.first_active


def test_small_gamma_recovers_simple_bound():
    solution = solve_fixed_gamma(1e-4)
    expected = float(simple_alpha_root().fraction_bound)
    assert abs(solution.fraction - expected) < 1e-3


@pytest.mark.parametrize("gamma", [0.0, -0.1, 1 / 3, 0.4])
def test_solver_rejects_gamma_out_of_range(gamma):
    with pytest.raises(ValueError):
        solve_fixed_gamma(gamma)


def test_beta_curves():
    wide = beta_curves(0.6, GAMMA0)
    assert wide.feasible
    assert wide.beta2_lower < 0
    assert wide.beta1 == pytest.approx(1 - 2 * GAMMA0 - 0.6)

    narrow = beta_curves(0.5, GAMMA0)
    assert not narrow.feasible
    assert narrow.beta2_lower is None and narrow.beta2_upper is None

    top = beta_curves(1.0, GAMMA0)
    assert top.discriminant == pytest.approx((2 / GAMMA0) / 15)
    assert top.beta1 < 0

    with pytest.raises(ValueError):
        beta_curves(1.5, GAMMA0)
    with pytest.raises(ValueError):
        beta_curves(0.5, 0.0)


def test_minmax_bracket():
    result = solve_minmax(steps=20, resolution=4000, with_curve=True)
    assert result.best.feasible
    assert 0.05 <= result.best.gamma <= 0.11
    assert result.best.fraction <= 0.66656 + 1e-3
    assert len(result.curve) == 21
    assert all(value >= result.best.fraction - 1e-9 for _, value in result.curve)


def test_minmax_rejects_bad_bracket():
    with pytest.raises(ValueError):
        solve_minmax(gamma_lo=0.1, gamma_hi=0.05)


def test_compare_printed_point_reports_both_sides():
    comparison = compare_printed_point(GAMMA0)
    assert comparison.solver.feasible
    assert math.isfinite(comparison.fraction_gap)
    assert comparison.fraction_gap == pytest.approx(
        comparison.solver.fraction - float(comparison.printed.fraction)
    )


def test_region_csv(tmp_path):
    rows = region_rows(GAMMA0, resolution=100)
    path = tmp_path / "region" / "gamma.csv"
    write_region_csv(path, rows)

    with open(path, newline="", encoding="utf-8") as f:
        table = list(csv.reader(f))
    assert tuple(table[0]) == REGION_COLUMNS
    assert len(table) == 102
    infeasible = [row for row in table[1:] if row[5] == "0"]
    assert infeasible
    assert all(row[6] == "" for row in infeasible)
    # alpha = 0.5 lies below the cubic feasibility boundary
    assert table[51][3] == "" and table[51][5] == "0"


def test_reweigh_identity_instance():
    f = tuple(Fraction(v) for v in (3, 1, 4))
    instance = ReweighInstance(
        f=f,
        g=(Fraction(1), Fraction(2), Fraction(3)),
        s0=frozenset({0, 1, 2}),
        f0={0: f[0], 1: f[1], 2: f[2]},
    )
    check = check_reweigh(instance)
    assert check.hypotheses_hold and check.conclusion_holds
    assert check.lhs == check.rhs


def test_reweigh_enforced_instances(rng):
    for _ in range(10_000):
        check = check_reweigh(random_reweigh_instance(rng))
        assert check.hypotheses_hold
        assert check.conclusion_holds


def test_reweigh_detects_broken_hypotheses():
    instance = ReweighInstance(
        f=(Fraction(0), Fraction(5)),
        g=(Fraction(2), Fraction(1)),
        s0=frozenset({0}),
        f0={0: Fraction(1)},
    )
    check = check_reweigh(instance)
    assert not check.separated
    assert not check.hypotheses_hold
    assert not check.conclusion_holds


def test_reweigh_instance_validation():
    with pytest.raises(ValueError):
        ReweighInstance(f=(Fraction(1),), g=(), s0=frozenset())
    with pytest.raises(ValueError):
        ReweighInstance(f=(Fraction(1),), g=(Fraction(1),), s0=frozenset({0}))


def test_simple_cut_instantiates_the_lemma():
    """f = r, g(z) = n + 1 - z, f0(z) = z - 1 on S0 = {z >= z0}."""
    coloring = build_c0(120)
    stats = classify(coloring)
    cut = extract_cut_simple(stats)
    n = stats.n
    s0 = frozenset(range(cut.z0 - 1, n))
    instance = ReweighInstance(
        f=tuple(Fraction(int(v)) for v in stats.r_profile),
        g=tuple(Fraction(n + 1 - z) for z in range(1, n + 1)),
        s0=s0,
        f0={s: Fraction(s) for s in s0},
    )
    check = check_reweigh(instance)
    assert check.hypotheses_hold and check.conclusion_holds
    assert stats.rainbow <= cut.rainbow_ceiling


def test_simple_cut_examples():
    stats = classify(Coloring.from_sequence([1, 2, 3, 3, 3]))
    cut = extract_cut_simple(stats)
    assert cut.weighted_rainbow == 6
    assert cut.z0 == 4
    assert cut.alpha == Fraction(4, 5)

    constant = classify(Coloring(n=9, colors=(1,) * 9))
    assert extract_cut_simple(constant).z0 == 9


def test_nuanced_cut_on_c0():
    coloring = build_c0(1000)
    stats = classify(coloring)
    cut = extract_cut_nuanced(stats, 77, coloring)
    assert stats.rainbow <= cut.rainbow_ceiling
    assert cut.gamma == Fraction(77, 1000)
    assert cut.disjunction_holds()


def test_cuts_on_random_colorings(rng):
    for _ in range(300):
        n = int(rng.integers(2, 301))
        coloring = Coloring.from_sequence(rng.integers(1, 4, size=n))
        stats = classify(coloring)
        k0 = int(rng.integers(1, n + 1))
        simple = extract_cut_simple(stats)
        nuanced = extract_cut_nuanced(stats, k0, coloring)
        assert stats.rainbow <= simple.rainbow_ceiling
        assert stats.rainbow <= nuanced.rainbow_ceiling
        assert nuanced.disjunction_holds()

        covered = set(nuanced.Z)
        for color in (1, 2, 3):
            covered |= set(nuanced.c_sets[color]) | set(nuanced.c_prime_sets[color])
            if nuanced.z_max[color] is not None:
                assert len(nuanced.c_sets[color]) + len(nuanced.c_prime_sets[color]) <= k0
        assert covered == set(range(1, n + 1))


def test_nuanced_cut_rejects_bad_k0():
    stats = classify(build_c0(10))
    with pytest.raises(ValueError):
        extract_cut_nuanced(stats, 0)
    with pytest.raises(ValueError):
        extract_cut_nuanced(stats, 11)


def test_nuanced_cut_with_k0_equal_to_n_has_empty_z():
    stats = classify(build_c0(50))
    cut = extract_cut_nuanced(stats, 50)
    assert cut.Z == ()
    assert cut.z0 == extract_cut_simple(stats).z0


def test_settings_gamma0():
    assert settings.GAMMA0 == GAMMA0
    assert float(eval_printed_alpha_star().gamma0) == pytest.approx(GAMMA0)


def test_halving_the_grid_step_barely_moves_the_objective(monkeypatch):
    fine = solve_fixed_gamma(GAMMA0)
    monkeypatch.setattr(settings, "SOLVER_GRID_STEPS", settings.SOLVER_GRID_STEPS // 2)
    coarse = solve_fixed_gamma(GAMMA0)
    assert fine.feasible and coarse.feasible
    assert abs(fine.objective - coarse.objective) < 1e-5


@pytest.mark.parametrize("resolution", [1000, 4000])
def test_refinement_converges_on_coarse_grids(resolution):
    fine = solve_fixed_gamma(GAMMA0, resolution=resolution)
    coarse = solve_fixed_gamma(GAMMA0, resolution=resolution // 2)
    assert abs(fine.objective - coarse.objective) < 1e-5
