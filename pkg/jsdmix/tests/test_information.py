import math

import numpy as np
import pydantic
import pytest

import jsdmix
from jsdmix.information import (binary_entropy, convex_combine, entropy, js_divergence, js_divergence_entropy_form,
                                kl_divergence, support, sym_js)
from jsdmix.models import Alphabet, EpsilonFamily, Pmf
from jsdmix.sampling import random_pmf
from jsdmix.util import make_rng

two = Alphabet.range(2)
heads, tails = Pmf.point(two, 1), Pmf.point(two, 2)
fair = Pmf.uniform(two)


def _direct_entropy(mass):
    return -math.fsum(m * math.log(m) for m in mass if m > 0)


@pytest.mark.parametrize("mass,expected", [
    ([0.5, 0.5, 0, 0], {0, 1}),
    ([1, 0], {0}),
    ([0.5, 0.4, 0.025, 0.025, 0.025, 0.025], {0, 1, 2, 3, 4, 5}),
])
def test_support(mass, expected):
    assert support(Pmf.normalized(Alphabet.range(len(mass)), mass)) == expected


def test_entropy_degenerate():
    assert entropy(Pmf.point(Alphabet.range(3), 1)) == 0.0


def test_entropy_uniform():
    assert jsdmix.compare_values(math.log(4), entropy(Pmf.uniform(Alphabet.range(4))), atol=1.e-14)


def test_entropy_reference_q():
    _, _, q = EpsilonFamily().components()
    assert jsdmix.compare_values(_direct_entropy(q.mass), entropy(q), atol=1.e-14)


@pytest.mark.parametrize("r1,r2,expected", [
    (fair, fair, 0.0),
    (heads, fair, math.log(2)),
    (heads, tails, math.inf),
    (fair, heads, math.inf),
])
def test_kl_divergence(r1, r2, expected):
    assert jsdmix.compare_values(expected, kl_divergence(r1, r2), atol=1.e-15)


def test_kl_alphabet_mismatch():
    with pytest.raises(jsdmix.AlphabetMismatchError):
        kl_divergence(fair, Pmf.uniform(Alphabet.range(2, start=0)))


def test_js_disjoint_is_ln2():
    assert jsdmix.compare_values(math.log(2), js_divergence(heads, tails, 0.5), atol=1.e-15)


@pytest.mark.parametrize("pi", [0.0, 1.0])
def test_js_endpoint_weights_vanish(pi):
    assert js_divergence(heads, tails, pi) == 0.0


def test_js_identical():
    _, p2, _ = EpsilonFamily().components()
    assert abs(js_divergence(p2, p2, 0.37)) < 1.e-15


def test_js_reference_components():
    p1, p2, _ = EpsilonFamily(epsilon=0.3).components()
    mid = 0.5 * (p1.mass + p2.mass)
    expected = _direct_entropy(mid) - 0.5 * _direct_entropy(p1.mass) - 0.5 * _direct_entropy(p2.mass)
    assert jsdmix.compare_values(expected, sym_js(p1, p2), atol=1.e-14)


@pytest.mark.parametrize("pi", [-0.1, 1.1])
def test_js_weight_out_of_range(pi):
    with pytest.raises(pydantic.ValidationError):
        js_divergence(heads, tails, pi)


def test_js_forms_agree_randomized():
    rng = make_rng(11)
    for _ in range(200):
        alphabet = Alphabet.range(int(rng.integers(2, 9)))
        r1, r2 = random_pmf(rng, alphabet), random_pmf(rng, alphabet)
        pi = float(rng.random())
        assert jsdmix.compare_values(js_divergence_entropy_form(r1, r2, pi), js_divergence(r1, r2, pi), atol=1.e-12,
                                     quiet=True)


def test_js_partial_supports():
    alphabet = Alphabet.range(4)
    r1 = Pmf(alphabet=alphabet, mass=[0.5, 0.5, 0, 0])
    r2 = Pmf(alphabet=alphabet, mass=[0, 0.25, 0.25, 0.5])
    js = js_divergence(r1, r2, 0.3)
    assert math.isfinite(js)
    assert jsdmix.compare_values(js_divergence_entropy_form(r1, r2, 0.3), js, atol=1.e-12)


def test_sym_js_symmetric_and_bounded():
    rng = make_rng(5)
    alphabet = Alphabet.range(6)
    for _ in range(100):
        a, b = random_pmf(rng, alphabet, on=rng.choice(6, 3, replace=False)), random_pmf(rng, alphabet)
        assert sym_js(a, b) == sym_js(b, a)
        assert 0.0 <= sym_js(a, b) <= math.log(2)


@pytest.mark.parametrize("x,expected", [
    (0.5, math.log(2)),
    (0.0, 0.0),
    (1.0, 0.0),
    (0.3, -0.3 * math.log(0.3) - 0.7 * math.log(0.7)),
])
def test_binary_entropy(x, expected):
    assert jsdmix.compare_values(expected, binary_entropy(x), atol=1.e-15)


def test_binary_entropy_out_of_range():
    with pytest.raises(pydantic.ValidationError):
        binary_entropy(1.5)


def test_convex_combine_examples():
    p1, _, q = EpsilonFamily().components()
    assert convex_combine([1.0, 0.0], [p1, q]) == p1
    assert convex_combine([0.5, 0.5], [heads, tails]).mass.tolist() == [0.5, 0.5]
    mixed = convex_combine([0.3, 0.7], [p1, q])
    assert jsdmix.compare_values([0.65, 0.28, 0.0175, 0.0175, 0.0175, 0.0175], mixed.mass, atol=1.e-15)


@pytest.mark.parametrize("weights,pmfs", [
    ([0.5, 0.6], [heads, tails]),
    ([1.0], [heads, tails]),
    ([], []),
])
def test_convex_combine_invalid(weights, pmfs):
    with pytest.raises(jsdmix.ValidationError):
        convex_combine(weights, pmfs)


def test_convex_combine_alphabet_mismatch():
    with pytest.raises(jsdmix.AlphabetMismatchError):
        convex_combine([0.5, 0.5], [fair, Pmf.uniform(Alphabet.range(3))])


def test_entropy_upper_bound():
    rng = make_rng(3)
    for size in range(1, 10):
        r = random_pmf(rng, Alphabet.range(size))
        assert -1.e-15 <= entropy(r) <= math.log(size) + 1.e-12


def test_kl_nonnegative():
    rng = make_rng(7)
    alphabet = Alphabet.range(5)
    for _ in range(100):
        r1, r2 = random_pmf(rng, alphabet), random_pmf(rng, alphabet)
        assert kl_divergence(r1, r2) >= 0.0
    assert abs(kl_divergence(r1, r1)) < 1.e-15
    assert np.isinf(kl_divergence(heads, tails))
