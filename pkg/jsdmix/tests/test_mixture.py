import math

import numpy as np
import pytest

import jsdmix
from jsdmix.information import kl_divergence, sym_js
from jsdmix.mixture import (build_p1, build_p2, build_pM, disjoint_decomposition, disjoint_kl_decomposition,
                            scenario_sjsd, scenario_sjsd_grid, supports_disjoint)
from jsdmix.models import EpsilonFamily
from jsdmix.sampling import random_disjoint_scenario, random_scenario
from jsdmix.util import make_rng


@pytest.fixture
def reference():
    return EpsilonFamily(epsilon=0.3).scenario(0.3, 0.7)


@pytest.fixture
def disjoint():
    return EpsilonFamily(epsilon=0.3).disjoint_scenario(0.3, 0.7)


def _direct_sjsd(m1, m2):
    # independent entropy-form oracle
    def h(m):
        return -math.fsum(x * math.log(x) for x in m if x > 0)

    mid = [0.5 * (a + b) for a, b in zip(m1, m2)]
    return h(mid) - 0.5 * h(m1) - 0.5 * h(m2)


def test_build_mixtures_reference(reference):
    assert jsdmix.compare_values([0.65, 0.28, 0.0175, 0.0175, 0.0175, 0.0175], build_p1(reference).mass, atol=1.e-15)
    assert jsdmix.compare_values([0.64, 0.33, 0.0075, 0.0075, 0.0075, 0.0075], build_p2(reference).mass, atol=1.e-15)


def test_midpoint_closed_form(reference):
    l1, l2 = reference.proportions
    expected = 0.5 * l1 * reference.p_tilde_1.mass + 0.5 * l2 * reference.p_tilde_2.mass + \
        0.5 * (2.0 - l1 - l2) * reference.q.mass
    assert jsdmix.compare_values(expected, build_pM(reference).mass, atol=1.e-15)


def test_sjsd_origin_is_zero(reference):
    assert scenario_sjsd(reference.with_proportions(0.0, 0.0)) == 0.0


def test_sjsd_reference_oracle(reference):
    expected = _direct_sjsd(build_p1(reference).mass, build_p2(reference).mass)
    assert jsdmix.compare_values(expected, scenario_sjsd(reference), atol=1.e-14)


def test_disjoint_corners_are_ln2(disjoint):
    for corner in [(1.0, 0.0), (0.0, 1.0)]:
        assert jsdmix.compare_values(math.log(2), scenario_sjsd(disjoint.with_proportions(*corner)), atol=1.e-12)


def test_grid_matches_pointwise(reference):
    rng = make_rng(2)
    l1s, l2s = rng.random(7), rng.random(5)
    grid = scenario_sjsd_grid(reference, l1s, l2s)
    assert grid.shape == (7, 5)
    for i, j in [(0, 0), (6, 4), (3, 2), (1, 3), (5, 0)]:
        s = reference.with_proportions(float(l1s[i]), float(l2s[j]))
        assert jsdmix.compare_values(scenario_sjsd(s), grid[i, j], atol=1.e-12)
        assert jsdmix.compare_values(_direct_sjsd(build_p1(s).mass, build_p2(s).mass), grid[i, j], atol=1.e-12)


def test_grid_rejects_out_of_range(reference):
    with pytest.raises(jsdmix.ValidationError):
        scenario_sjsd_grid(reference, [0.5], [1.2])


def test_diagonal_linear_under_disjoint_supports(disjoint):
    base = sym_js(disjoint.p_tilde_1, disjoint.p_tilde_2)
    for lam in np.linspace(0.0, 1.0, 11):
        lam = float(lam)
        assert jsdmix.compare_values(lam * base, scenario_sjsd(disjoint.with_proportions(lam, lam)), atol=1.e-12)


def test_supports_disjoint(reference, disjoint):
    assert supports_disjoint(disjoint)
    assert not supports_disjoint(reference)


def test_decomposition_requires_disjoint(reference):
    with pytest.raises(jsdmix.ValidationError, match="disjoint"):
        disjoint_decomposition(reference)
    with pytest.raises(jsdmix.ValidationError):
        disjoint_kl_decomposition(reference)


def test_decomposition_matches_direct():
    rng = make_rng(4)
    for _ in range(500):
        s = random_disjoint_scenario(rng)
        d = disjoint_decomposition(s)
        assert jsdmix.compare_values(scenario_sjsd(s), d.total, atol=1.e-12, quiet=True)
        assert d.proportion_term >= 0.0 and d.content_term >= 0.0


@pytest.mark.parametrize("lams,proportion,content", [
    ((1.0, 0.0), math.log(2), 0.0),
    ((0.0, 0.0), 0.0, 0.0),
])
def test_decomposition_corners(disjoint, lams, proportion, content):
    d = disjoint_decomposition(disjoint.with_proportions(*lams))
    assert jsdmix.compare_values(proportion, d.proportion_term, atol=1.e-12)
    assert jsdmix.compare_values(content, d.content_term, atol=1.e-12)


def test_decomposition_free_of_q(disjoint):
    # same components and proportions, different q on the same symbols
    other_q = jsdmix.models.Pmf(alphabet=disjoint.alphabet, mass=[0, 0, 0.7, 0.1, 0.1, 0.1])
    moved = disjoint.model_copy(update={"q": other_q})
    assert jsdmix.compare_values(scenario_sjsd(disjoint), scenario_sjsd(moved), atol=1.e-12)


def test_kl_decomposition_sides():
    rng = make_rng(8)
    for _ in range(200):
        s = random_disjoint_scenario(rng)
        pM = build_pM(s)
        (c1, b1), (c2, b2) = disjoint_kl_decomposition(s)
        assert jsdmix.compare_values(kl_divergence(build_p1(s), pM), c1 + b1, atol=1.e-12, quiet=True)
        assert jsdmix.compare_values(kl_divergence(build_p2(s), pM), c2 + b2, atol=1.e-12, quiet=True)

        d = disjoint_decomposition(s)
        assert jsdmix.compare_values(d.content_term, 0.5 * (c1 + c2), atol=1.e-12, quiet=True)
        assert jsdmix.compare_values(d.proportion_term, 0.5 * (b1 + b2), atol=1.e-12, quiet=True)


def test_sjsd_range_random():
    rng = make_rng(9)
    for _ in range(200):
        v = scenario_sjsd(random_scenario(rng))
        assert 0.0 <= v <= math.log(2)
