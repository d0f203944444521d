import math

import numpy as np
import pytest

from jsdmix.bounds import bayes_error_exact, js_error_bounds
from jsdmix.information import (binary_entropy, convex_combine, entropy, js_divergence, js_divergence_entropy_form,
                                kl_divergence, sym_js)
from jsdmix.models import Alphabet, ClassificationProblem, Pmf

hypothesis = pytest.importorskip("hypothesis")
from hypothesis import given, settings  # isort:skip
from hypothesis import strategies as st  # isort:skip

SIZE = 5
alphabet = Alphabet.range(SIZE)

# Nonzero entries stay far above underflow so mass ratios remain finite
_entries = st.one_of(st.just(0.0), st.floats(min_value=1.e-6, max_value=1.0))
_weights = st.one_of(st.just(0.0), st.just(1.0), st.floats(min_value=1.e-6, max_value=1.0))


@st.composite
def pmfs(draw):
    """Points of the probability simplex, zero entries included."""
    raw = draw(st.lists(_entries, min_size=SIZE, max_size=SIZE))
    if sum(raw) < 1.e-3:
        raw[draw(st.integers(min_value=0, max_value=SIZE - 1))] = 1.0
    return Pmf.normalized(alphabet, raw)


@settings(max_examples=200, deadline=None)
@given(pmfs(), pmfs(), _weights)
def test_js_forms_agree(r1, r2, pi):
    assert abs(js_divergence(r1, r2, pi) - js_divergence_entropy_form(r1, r2, pi)) <= 1.e-12


@settings(max_examples=200, deadline=None)
@given(pmfs(), pmfs(), _weights)
def test_js_range(r1, r2, pi):
    js = js_divergence(r1, r2, pi)
    assert math.isfinite(js)
    assert -1.e-15 <= js <= binary_entropy(pi) + 1.e-12


@settings(max_examples=200, deadline=None)
@given(pmfs(), pmfs())
def test_sym_js_symmetric_and_bounded(r1, r2):
    assert sym_js(r1, r2) == sym_js(r2, r1)
    assert sym_js(r1, r2) <= math.log(2) + 1.e-12
    assert abs(sym_js(r1, r1)) <= 1.e-15


@settings(max_examples=200, deadline=None)
@given(pmfs(), pmfs(), _weights)
def test_js_is_entropy_gain_of_mixture(r1, r2, pi):
    mixed = convex_combine([pi, 1.0 - pi], [r1, r2])
    assert abs(mixed.mass.sum() - 1.0) <= 1.e-12
    gain = entropy(mixed) - pi * entropy(r1) - (1.0 - pi) * entropy(r2)
    assert abs(gain - js_divergence(r1, r2, pi)) <= 1.e-12

@settings(max_examples=200, deadline=None)
@given(pmfs(), pmfs())
def test_kl_nonnegative(r1, r2):
    kl = kl_divergence(r1, r2)
    assert kl >= -1.e-15
    covered = np.all((r1.mass == 0.0) | (r2.mass > 0.0))
    assert math.isfinite(kl) == bool(covered)


@settings(max_examples=200, deadline=None)
@given(pmfs(), pmfs(), _weights)
def test_bayes_error_bracketed_in_bits(r1, r2, pi):
    p = ClassificationProblem(pi=pi, r1=r1, r2=r2)
    lower, upper = js_error_bounds(p, "bit")
    error = bayes_error_exact(p)
    assert lower - 1.e-12 <= error <= upper + 1.e-12
