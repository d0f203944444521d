import math

import numpy as np
import pytest

import jsdmix
from jsdmix.bounds import (SHARD_SIZE, bayes_error_exact, bounds_report, bracketing_sweep, js_error_bounds,
                           simulate_urn_game, urn_problem)
from jsdmix.models import Alphabet, ClassificationProblem, EpsilonFamily, Pmf, UrnGameConfig
from jsdmix.sampling import random_problem
from jsdmix.util import make_rng

two = Alphabet.range(2)


@pytest.fixture
def reference_game():
    return UrnGameConfig(scenario=EpsilonFamily(epsilon=0.3).scenario(0.3, 0.7), pi=0.5, n_trials=200_000, seed=7)


def test_bayes_error_identical_classes():
    r = Pmf.uniform(Alphabet.range(3))
    assert bayes_error_exact(ClassificationProblem(pi=0.3, r1=r, r2=r)) == pytest.approx(0.3, abs=1.e-15)


def test_bayes_error_reference():
    p = urn_problem(UrnGameConfig(scenario=EpsilonFamily().scenario(0.3, 0.7), n_trials=1))
    # min(0.65, 0.64) + min(0.28, 0.33) + 4 min(0.0175, 0.0075), halved
    assert jsdmix.compare_values(0.5 * (0.64 + 0.28 + 4 * 0.0075), bayes_error_exact(p), atol=1.e-14)


def test_disjoint_classes_give_zeros():
    p = ClassificationProblem(pi=0.5, r1=Pmf.point(two, 1), r2=Pmf.point(two, 2))
    assert jsdmix.compare_values([0.0, 0.0, 0.0], [*js_error_bounds(p), bayes_error_exact(p)], atol=1.e-12)


def test_identical_classes_in_bits():
    p = ClassificationProblem(pi=0.5, r1=Pmf.uniform(two), r2=Pmf.uniform(two))
    lower, upper = js_error_bounds(p)
    assert jsdmix.compare_values([0.25, 0.5], [lower, upper], atol=1.e-12)
    assert bayes_error_exact(p) == 0.5


def test_identical_classes_fail_in_nats():
    p = ClassificationProblem(pi=0.5, r1=Pmf.uniform(two), r2=Pmf.uniform(two))
    lower, upper = js_error_bounds(p, units="nat")
    assert jsdmix.compare_values(math.log(2) / 2, upper, atol=1.e-15)
    with pytest.raises(jsdmix.BoundsBracketingError, match="units=nat"):
        bounds_report(p, units="nat")


def test_bounds_bracket_random_problems():
    rng = make_rng(31)
    for _ in range(300):
        p = random_problem(rng)
        lower, upper = js_error_bounds(p)
        exact = bayes_error_exact(p)
        assert 0.0 <= lower <= upper
        assert lower <= exact + 1.e-12
        assert exact <= upper + 1.e-12


def test_bracketing_sweep():
    sweep = bracketing_sweep(seed=0, n_problems=300)
    assert sweep.n_problems == 300
    assert sweep.holds("bit")
    assert sweep.convention == "bit"
    assert sweep == bracketing_sweep(seed=0, n_problems=300)


def test_bounds_report_without_game():
    p = urn_problem(UrnGameConfig(scenario=EpsilonFamily().scenario(0.3, 0.7), n_trials=1))
    report = bounds_report(p)
    assert report.units == "bit"
    assert report.lower_bound <= report.exact_error <= report.upper_bound
    assert report.empirical_error is None and report.generator is None
    assert report.within()
    assert report.provenance.creator == "JSDMix"


def test_urn_game_reproducible(reference_game):
    first = simulate_urn_game(reference_game)
    assert first == simulate_urn_game(reference_game)
    assert first == simulate_urn_game(reference_game, n_workers=3)
    other = simulate_urn_game(reference_game.model_copy(update={"seed": 8}))
    assert other != first


def test_urn_game_stderr(reference_game):
    rate, stderr = simulate_urn_game(reference_game)
    assert 0.0 < rate < 1.0
    assert stderr == pytest.approx(math.sqrt(rate * (1 - rate) / reference_game.n_trials))


def test_urn_game_near_bayes_error(reference_game):
    report = bounds_report(urn_problem(reference_game), reference_game)
    assert report.n_trials == 200_000 and report.seed == 7 and report.generator == "PCG64"
    assert abs(report.empirical - report.exact) < 5 * report.stderr


def test_urn_game_error_shrinks_with_trials(reference_game):
    exact = bayes_error_exact(urn_problem(reference_game))
    medians = []
    for n in (10**3, 10**4, 10**5, 10**6):
        gaps = [abs(simulate_urn_game(reference_game.model_copy(update={"n_trials": n, "seed": s}))[0] - exact)
                for s in range(20)]
        medians.append(float(np.median(gaps)))
    assert all(later <= earlier for earlier, later in zip(medians, medians[1:])), medians


@pytest.mark.parametrize("n_workers", [0, -2])
def test_urn_game_needs_a_worker(reference_game, n_workers):
    with pytest.raises(jsdmix.ValidationError):
        simulate_urn_game(reference_game, n_workers=n_workers)


@pytest.mark.parametrize("n_trials", [1, SHARD_SIZE - 1, SHARD_SIZE, SHARD_SIZE + 1])
def test_urn_game_shard_sizes(reference_game, n_trials):
    cfg = reference_game.model_copy(update={"n_trials": n_trials})
    rate, _ = simulate_urn_game(cfg)
    assert 0.0 <= rate <= 1.0
    assert (rate * n_trials) == pytest.approx(round(rate * n_trials))


def test_urn_game_certain_prior(reference_game):
    cfg = reference_game.model_copy(update={"pi": 1.0, "n_trials": 1000})
    assert simulate_urn_game(cfg) == (0.0, 0.0)


def test_urn_game_disjoint_urns():
    s = EpsilonFamily().disjoint_scenario(1.0, 0.0)
    assert simulate_urn_game(UrnGameConfig(scenario=s, n_trials=5000, seed=3)) == (0.0, 0.0)


def test_bounds_report_rejects_other_game(reference_game):
    p = ClassificationProblem(pi=0.5, r1=Pmf.uniform(Alphabet.range(6)), r2=Pmf.uniform(Alphabet.range(6)))
    with pytest.raises(jsdmix.ValidationError):
        bounds_report(p, reference_game)


def test_urn_game_million_rounds():
    cfg = UrnGameConfig(scenario=EpsilonFamily(epsilon=0.3).scenario(0.3, 0.7), pi=0.5, n_trials=1_000_000, seed=0)
    report = bounds_report(urn_problem(cfg), cfg)
    assert report.within(3.0)
    assert report == bounds_report(urn_problem(cfg), cfg)
