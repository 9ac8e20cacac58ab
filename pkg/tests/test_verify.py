import pytest

from rainbow_schur.verify import suites
from rainbow_schur.verify.suites import SUITES, run_suite


@pytest.mark.parametrize(
    "family, kwargs",
    [
        ("trcard", {"trials": 30, "max_n": 25}),
        ("reweigh", {"trials": 500}),
        ("ccs", {"max_n": 6, "exhaustive": True}),
        ("ccs", {"trials": 100}),
        ("datskovsky", {"max_n": 8, "exhaustive": True}),
        ("rzF", {"max_n": 9, "exhaustive": True}),
        ("cuts", {"trials": 60, "max_n": 120}),
        ("ap-cs", {"trials": 60, "max_n": 150}),
    ],
)
def test_suites_pass(family, kwargs):
    result = run_suite(family, seed=5, **kwargs)
    assert result.passed
    assert result.failures == 0
    assert result.witness is None
    assert result.trials > 0


def test_exhaustive_case_counts():
    assert run_suite("datskovsky", max_n=3, exhaustive=True).trials == 2 + 4 + 8
    assert run_suite("trcard", max_n=2, exhaustive=True).trials == 3 + 9


def test_suite_runs_are_seeded():
    first = run_suite("cuts", trials=20, max_n=50, seed=9)
    second = run_suite("cuts", trials=20, max_n=50, seed=9)
    assert first == second


def test_every_family_is_registered():
    assert set(SUITES) == {"trcard", "reweigh", "ccs", "datskovsky", "rzF", "cuts", "ap-cs"}


def test_unknown_family():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_failing_case_keeps_the_first_witness(monkeypatch):
    monkeypatch.setattr(suites, "rz_objective", lambda x: -1)
    result = run_suite("rzF", trials=10, max_n=5, seed=1)
    assert not result.passed
    assert result.failures == 10
    assert result.witness["F"] == -1
    assert "x" in result.witness


@pytest.mark.slow
@pytest.mark.parametrize("family", sorted(SUITES))
def test_suites_pass_with_defaults(family):
    assert run_suite(family).passed
