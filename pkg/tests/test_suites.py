import pytest

from qwitt.src.kernel import suites
from qwitt.src.kernel.config import SUITES, RunConfig
from qwitt.src.kernel.report import DEVIATION, REFUTED, SKIPPED, VERIFIED
from qwitt.src.kernel.suites import SUITE_CHECKS, SuiteRunner, run_suite

from .conftest import S_GRID


def small_config(*s_values, **overrides):
    return RunConfig(s_values=s_values, window=(-2, 2), samples=3, check_window=4).with_overrides(**overrides)


def claims_of(results):
    return {claim["id"]: claim for result in results for claim in result["claims"]}


def test_every_suite_has_a_check():
    assert set(SUITE_CHECKS) == set(SUITES)


@pytest.mark.slow
@pytest.mark.parametrize("s", (-2, -1, 0, 1, 2, 3))
def test_full_run_has_no_refuted_claims(s):
    status, results = run_suite(small_config(s))
    refuted = [claim for claim in claims_of(results).values() if claim["status"] == REFUTED]
    assert status == 0, refuted
    assert [result["suite"] for result in results] == list(SUITES)
    assert all(result["error_message"] == "" for result in results)


def test_strict_twist_asserts_closed_form():
    _, results = run_suite(small_config(2, suites=("three-way", "mod-inner")))
    claims = claims_of(results)
    assert claims["three-way/closed-form"]["status"] == VERIFIED
    assert claims["mod-inner/bracket-congruence"]["status"] == VERIFIED
    assert claims["mod-inner/exact-d0-d1"]["status"] == VERIFIED
    assert claims["mod-inner/g-bracket"]["status"] == VERIFIED
    assert claims["mod-inner/g-bracket-stated-sign"]["status"] == DEVIATION


def test_twist_below_one_reports_deviations():
    status, results = run_suite(small_config(-2, suites=("three-way", "mod-inner")))
    claims = claims_of(results)
    assert status == 0
    assert claims["three-way/closed-form"]["status"] == DEVIATION
    assert claims["mod-inner/bracket-congruence"]["status"] == DEVIATION
    assert claims["mod-inner/g-bracket"]["status"] == VERIFIED


def test_linear_twist_skips_free_part_checks():
    _, results = run_suite(small_config(1, suites=("mod-inner", "grading", "inner")))
    claims = claims_of(results)
    assert claims["mod-inner"]["status"] == SKIPPED
    assert claims["grading/closure"]["status"] == SKIPPED
    assert claims["inner/all-inner"]["status"] == VERIFIED


def test_non_injective_twist_skips_ore_degree():
    _, results = run_suite(small_config(0, suites=("ore",), samples=1))
    claims = claims_of(results)
    assert claims["ore/degree[Delta]"]["status"] == SKIPPED
    assert claims["ore/untwist[Delta_t]"]["status"] == VERIFIED


def test_runs_are_deterministic():
    config = small_config(3, suites=("twist", "skew", "decomp"))
    first = [result["claims"] for result in run_suite(config)[1]]
    second = [result["claims"] for result in run_suite(config)[1]]
    assert first == second


def test_results_follow_context_then_suite_order():
    runner = SuiteRunner(small_config(3, 2, suites=("skew", "jacobi")))
    order = [(task.ctx.s, task.suite) for task in runner.tasks]
    assert order == [(3, "skew"), (3, "jacobi"), (2, "skew"), (2, "jacobi")]


def test_failing_check_becomes_refuted_claim(monkeypatch):
    def boom(ctx, config):
        raise RuntimeError("boom")

    monkeypatch.setitem(suites.SUITE_CHECKS, "skew", boom)
    status, results = run_suite(small_config(2, suites=("skew",)))
    assert status == 1
    assert results[0]["error_message"] == "boom"
    assert results[0]["claims"] == [{"id": "skew/error", "status": REFUTED, "evidence": "boom"}]


def assert_nothing_refuted(config):
    status, results = run_suite(config)
    every = [claim for result in results for claim in result["claims"]]
    assert status == 0, [claim for claim in every if claim["status"] == REFUTED]
    return every


@pytest.mark.slow
@pytest.mark.parametrize("s", S_GRID)
def test_structure_constants_on_full_window(s):
    config = RunConfig(s_values=(s,), window=(-8, 8), suites=("three-way", "skew", "mod-inner"))
    claims = {claim["id"]: claim for claim in assert_nothing_refuted(config)}
    expected = VERIFIED if s >= 2 else DEVIATION
    assert claims["three-way/closed-form"]["status"] == expected
    assert claims["three-way/four-case"]["status"] == VERIFIED


@pytest.mark.slow
@pytest.mark.parametrize("s", S_GRID)
def test_jacobi_on_full_monomial_grid(s):
    claims = assert_nothing_refuted(RunConfig(s_values=(s,), window=(-4, 4), suites=("jacobi",)))
    assert [claim["status"] for claim in claims] == [VERIFIED]


@pytest.mark.slow
@pytest.mark.parametrize(
    "suite, samples",
    [("twist", 100), ("inner", 50), ("decomp", 100), ("grading", 20), ("ore", 50)],
)
def test_randomized_suites_at_full_sample_counts(suite, samples):
    config = RunConfig(s_values=S_GRID, window=(-4, 4), check_window=8, samples=samples, suites=(suite,))
    claims = assert_nothing_refuted(config)
    assert all(claim["status"] in (VERIFIED, SKIPPED) for claim in claims)
