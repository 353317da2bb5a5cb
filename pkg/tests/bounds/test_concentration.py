# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import math

import numpy as np
import pytest

from markov_gap_bounds.bounds import constants
from markov_gap_bounds.bounds.certificates import bernoulli_certificate, doeblin_gap, hypercube_gap
from markov_gap_bounds.bounds.concentration import MAX_PLANNED_N, BvCorollaryBound, DoeblinCorollaryBound, \
    TheoremABound, TheoremBBound, bv_corollary_bound, ceil_threshold, doeblin_corollary_bound, min_n_theorem_a, \
    plan_required_n, theorem_a_bound, theorem_a_gaussian_window, theorem_b_bound, theorem_b_window
from markov_gap_bounds.bounds.data_types import GapCertificate, GapFamily, NormFamily, ObservableSpec
from markov_gap_bounds.bounds.response_types import Precondition, Regime
from markov_gap_bounds.errors import DomainError, InfeasibleError


def _cert(delta0):
    return GapCertificate.from_delta0(delta0)


def _obs(norm, **kwargs):
    return ObservableSpec(norm=norm, **kwargs)


@pytest.mark.parametrize("value", [
    dict({'delta0': 0.5, 'exact_n': 119, 'simplified_n': 120}),
    dict({'delta0': 1., 'exact_n': 59, 'simplified_n': 60}),
    dict({'delta0': 1. / 3., 'exact_n': 179, 'simplified_n': 180}),
])
def test_min_n_theorem_a(value):
    """
    Test the exact and simplified sample size thresholds of Theorem A.
    """
    exact_n, simplified_n = min_n_theorem_a(_cert(value.get('delta0')))
    assert type(exact_n) is int
    assert exact_n == value.get('exact_n')
    assert simplified_n == value.get('simplified_n')


@pytest.mark.parametrize("delta0", [1e-4, 0.01, 0.1, 0.3, 0.77, 1.])
def test_min_n_theorem_a_ordering(delta0):
    """
    Test if the simplified threshold never undercuts the exact one.
    """
    exact_n, simplified_n = min_n_theorem_a(_cert(delta0))
    assert exact_n <= simplified_n


def test_ceil_threshold():
    """
    Test if ceil_threshold() does not step over integers because of rounding noise.
    """
    assert ceil_threshold(180.00000000000003) == 180
    assert ceil_threshold(118.42) == 119
    assert ceil_threshold(120.) == 120


@pytest.mark.parametrize("value", [
    dict({'delta0': 0.5, 'norm': 1., 'n': 200, 'a': 0., 'raw': 2.488, 'regime': Regime.GAUSSIAN}),
    dict({'delta0': 0.5, 'norm': 1., 'n': 200, 'a': 0.1, 'raw': 2.328, 'regime': Regime.GAUSSIAN}),
    dict({'delta0': 0.5, 'norm': 1., 'n': 1000, 'a': 0.5, 'raw': 0.01879, 'regime': Regime.EXPONENTIAL}),
])
def test_theorem_a_bound(value):
    """
    Test the two branches of the Theorem A bound against hand computed values.
    """
    result = theorem_a_bound(_cert(value.get('delta0')), _obs(value.get('norm')), value.get('n'), value.get('a'))
    assert result.raw == pytest.approx(value.get('raw'), rel=1e-3)
    assert result.clipped == min(result.raw, 1.)
    assert result.regime is value.get('regime')
    assert result.valid is True


def test_theorem_a_regime_boundary():
    """
    Test if a/|phi| = delta0/3 still belongs to the gaussian branch.
    """
    bound = TheoremABound(_cert(0.75), _obs(2.))
    window = theorem_a_gaussian_window(_cert(0.75), _obs(2.))
    assert window == pytest.approx(0.5)
    assert bound.regime_for(window) is Regime.GAUSSIAN
    assert bound.regime_for(window * (1. + 1e-9)) is Regime.EXPONENTIAL


def test_theorem_a_small_n():
    """
    Test if a sample size below the threshold is evaluated but flagged.
    """
    result = theorem_a_bound(_cert(0.5), _obs(1.), 100, 0.1)
    assert result.valid is False
    assert result.violated_preconditions == [Precondition.N_TOO_SMALL]
    assert result.raw == pytest.approx(2.488 * math.exp(-100 * 0.5 / (13.44 * 0.5 + 8.324) * 0.01))


def test_theorem_a_norm_mismatch():
    """
    Test if an observable measured in another norm than the certificate is flagged.
    """
    cert = hypercube_gap(4, NormFamily.DL)
    obs = ObservableSpec(sup_norm=1., seminorm=1., family=GapFamily.HYPERCUBE_W)
    result = theorem_a_bound(cert, obs, 10000, 0.01)
    assert Precondition.NORM_MISMATCH in result.violated_preconditions
    matching = ObservableSpec(sup_norm=1., seminorm=1., family=GapFamily.HYPERCUBE_DL)
    assert theorem_a_bound(cert, matching, 10000, 0.01).valid is True


@pytest.mark.parametrize("value", [
    dict({'n': 0, 'a': 0.1}),
    dict({'n': 10.5, 'a': 0.1}),
    dict({'n': 100, 'a': -0.1}),
    dict({'n': 100, 'a': float('inf')}),
])
def test_theorem_a_domain(value):
    """
    Test if invalid sample sizes and deviations are rejected.
    """
    with pytest.raises(DomainError):
        theorem_a_bound(_cert(0.5), _obs(1.), value.get('n'), value.get('a'))


def test_theorem_a_monotone_in_n():
    """
    Test if the bound decreases in n at fixed deviation.
    """
    bound = TheoremABound(_cert(0.2), _obs(3.))
    values = [bound.evaluate(n, 0.1).raw for n in (1000, 2000, 5000, 10000)]
    assert values == sorted(values, reverse=True)
    values = [bound.evaluate(n, 1.).raw for n in (1000, 2000, 5000, 10000)]
    assert values == sorted(values, reverse=True)


@pytest.mark.parametrize("value", [
    dict({'n': 10 ** 6, 'a': 0., 'raw': 2.637, 'valid': True}),
    dict({'n': 10 ** 6, 'a': 0.002, 'raw': 0.733, 'valid': True}),
])
def test_theorem_b_bound(value):
    """
    Test the variance-aware bound against hand computed values.
    """
    result = theorem_b_bound(_cert(0.5), _obs(1.), 1., value.get('n'), value.get('a'))
    assert result.raw == pytest.approx(value.get('raw'), rel=1e-3)
    assert result.regime is Regime.VARIANCE
    assert result.valid is value.get('valid')


def test_theorem_b_window():
    """
    Test the deviation window log(1 + delta0^2/(12 + 13 delta0)) U/|phi|.
    """
    window = theorem_b_window(_cert(0.5), _obs(1.), 1.)
    assert window == pytest.approx(0.013423, rel=1e-4)
    assert theorem_b_window(_cert(0.5), _obs(1.), 2.) == pytest.approx(2. * window)
    result = theorem_b_bound(_cert(0.5), _obs(1.), 1., 10 ** 6, 0.02)
    assert result.valid is False
    assert result.violated_preconditions == [Precondition.A_WINDOW]
    assert TheoremBBound(_cert(0.5), _obs(1.), 1.).threshold_n == 120


def test_theorem_b_variance_proxy():
    """
    Test if a variance proxy below the known dynamical variance is flagged.
    """
    obs = _obs(1., sigma2=1.5)
    result = theorem_b_bound(_cert(0.5), obs, 1., 10 ** 6, 0.002)
    assert result.violated_preconditions == [Precondition.U_BELOW_VARIANCE]
    assert theorem_b_bound(_cert(0.5), obs, 1.5, 10 ** 6, 0.002).valid is True
    with pytest.raises(DomainError):
        theorem_b_bound(_cert(0.5), obs, 0., 10 ** 6, 0.002)


def test_theorem_b_collects_all_violations():
    """
    Test if several violated preconditions are reported in evaluation order.
    """
    result = theorem_b_bound(_cert(0.5), _obs(1., sigma2=2.), 1., 10, 0.5)
    assert result.violated_preconditions == [
        Precondition.N_TOO_SMALL, Precondition.U_BELOW_VARIANCE, Precondition.A_WINDOW]
    assert [code for code in result.to_dict()['violated_preconditions']] == [
        'N_TOO_SMALL', 'U_BELOW_VARIANCE', 'A_WINDOW']


@pytest.mark.parametrize("value", [
    dict({'beta': 0.5, 'n': 10000, 'a': 0.2, 'raw': 0.789, 'violations': []}),
    dict({'beta': 1., 'n': 5000, 'a': 0.5, 'raw': 0.004386, 'violations': []}),
    dict({'beta': 0.5, 'n': 100, 'a': 0.2, 'raw': None, 'violations': [Precondition.N_TOO_SMALL]}),
    dict({'beta': 0.5, 'n': 10000, 'a': 0.3, 'raw': None, 'violations': [Precondition.A_WINDOW]}),
])
def test_doeblin_corollary_bound(value):
    """
    Test the Doeblin corollary bound and its preconditions n >= 120/beta, a <= beta/2.
    """
    result = doeblin_corollary_bound(value.get('beta'), value.get('n'), value.get('a'))
    if value.get('raw') is not None:
        assert result.raw == pytest.approx(value.get('raw'), rel=1e-3)
    assert result.violated_preconditions == value.get('violations')
    assert result.regime is Regime.GAUSSIAN


def test_doeblin_corollary_window_edge():
    """
    Test if a = beta/2 is still admissible.
    """
    bound = DoeblinCorollaryBound(0.5)
    assert bound.window == 0.25
    assert bound.threshold_n == 240
    assert bound.evaluate(240, 0.25).valid is True
    with pytest.raises(DomainError):
        DoeblinCorollaryBound(0.)


@pytest.mark.parametrize("value", [
    dict({'ell': 2, 'norm_bv': 1., 'n': 1000, 'a': 0.04, 'raw': 2.433, 'violations': []}),
    dict({'ell': 2, 'norm_bv': 1., 'n': 1000, 'a': 0., 'raw': 2.488, 'violations': []}),
    dict({'ell': 1, 'norm_bv': 2., 'n': 100, 'a': 0.1, 'raw': None, 'violations': [Precondition.N_TOO_SMALL]}),
    dict({'ell': 2, 'norm_bv': 1., 'n': 1000, 'a': 0.05, 'raw': None, 'violations': [Precondition.A_WINDOW]}),
])
def test_bv_corollary_bound(value):
    """
    Test the bounded variation corollary and its preconditions.
    """
    result = bv_corollary_bound(value.get('ell'), value.get('norm_bv'), value.get('n'), value.get('a'))
    if value.get('raw') is not None:
        assert result.raw == pytest.approx(value.get('raw'), rel=1e-3)
    assert result.violated_preconditions == value.get('violations')


def test_bv_corollary_window_is_strict():
    """
    Test if the window of the BV corollary excludes its end point.
    """
    bound = BvCorollaryBound(2, 1.)
    assert bound.window == pytest.approx(1. / 21.)
    assert bound.threshold_n == 480
    assert bound.evaluate(480, bound.window).violated_preconditions == [Precondition.A_WINDOW]
    for ell, norm_bv in [(0, 1.), (1.5, 1.), (1, 0.)]:
        with pytest.raises(DomainError):
            BvCorollaryBound(ell, norm_bv)


@pytest.mark.parametrize("ell", range(1, 9))
def test_bv_corollary_matches_theorem_a(ell):
    """
    Test if the BV corollary agrees with the gaussian branch of Theorem A at
    delta0 = 1/(2^(ell+1) - 1) up to the rounding of its constants.
    """
    cert = bernoulli_certificate(0.5 ** (1. / ell) * 0.999)[1]
    assert cert.params['ell'] == ell
    obs = ObservableSpec(sup_norm=1., seminorm=1., family=GapFamily.BERNOULLI_BV)
    corollary = BvCorollaryBound(ell, 2.)
    n = 10 ** 6
    a = 0.5 * theorem_a_gaussian_window(cert, obs)
    theorem = theorem_a_bound(cert, obs, n, a)
    assert theorem.regime is Regime.GAUSSIAN
    assert corollary.rate == pytest.approx(TheoremABound(cert, obs).gaussian_rate / 4., rel=5e-3)
    assert corollary.evaluate(n, a).log_raw - math.log(constants.BV_PREFACTOR) == pytest.approx(
        theorem.log_raw - math.log(constants.A_GAUSS_PREFACTOR), rel=5e-3)


@pytest.mark.parametrize("beta", [0.01, 0.2, 0.5, 0.75, 1.])
def test_doeblin_corollary_weaker_than_theorem_a(beta):
    """
    Test if the Doeblin corollary rate never exceeds the Theorem A gaussian
    rate with |phi| = 3 it is derived from.
    """
    theorem = TheoremABound(doeblin_gap(beta), _obs(3.))
    assert DoeblinCorollaryBound(beta).rate <= theorem.gaussian_rate / 9.


@pytest.mark.parametrize("value", [
    dict({'delta0': 0.5, 'norm': 1., 'a': 0.1, 'p': 0.05, 'n': 11756}),
    dict({'delta0': 0.5, 'norm': 1., 'a': 0.1, 'p': 2.488, 'n': 119}),
])
def test_plan_required_n(value):
    """
    Test the planner against hand computed sample sizes.
    """
    n = plan_required_n(_cert(value.get('delta0')), _obs(value.get('norm')), value.get('a'), value.get('p'))
    assert type(n) is int
    assert n == value.get('n')


@pytest.mark.parametrize("value", [
    dict({'delta0': 0.5, 'norm': 1., 'a': 0.1, 'p': 0.05}),
    dict({'delta0': 0.1, 'norm': 2., 'a': 0.5, 'p': 1e-3}),
    dict({'delta0': 0.9, 'norm': 1., 'a': 0.8, 'p': 1e-6}),
    dict({'delta0': 1. / 255., 'norm': 2., 'a': 0.01, 'p': 0.01}),
])
def test_plan_required_n_is_minimal(value):
    """
    Test if the planned n satisfies the target and n - 1 does not (or lies below the threshold).
    """
    cert, obs = _cert(value.get('delta0')), _obs(value.get('norm'))
    n = plan_required_n(cert, obs, value.get('a'), value.get('p'))
    bound = TheoremABound(cert, obs)
    assert n >= bound.threshold_n
    assert bound.evaluate(n, value.get('a')).raw <= value.get('p')
    assert n - 1 < bound.threshold_n or bound.evaluate(n - 1, value.get('a')).raw > value.get('p')


def test_plan_required_n_errors():
    """
    Test if the planner rejects a = 0 and non-positive targets.
    """
    with pytest.raises(InfeasibleError):
        plan_required_n(_cert(0.5), _obs(1.), 0., 0.05)
    with pytest.raises(DomainError):
        plan_required_n(_cert(0.5), _obs(1.), 0.1, 0.)
    with pytest.raises(DomainError):
        plan_required_n(_cert(0.5), _obs(1.), -0.1, 0.05)


@pytest.mark.parametrize("a", [1e-200, 1e-160, 1e-9])
def test_plan_required_n_tiny_deviation(a):
    """
    Test if deviations too small for a representable sample size are reported as infeasible.
    """
    with pytest.raises(InfeasibleError):
        plan_required_n(_cert(0.5), _obs(1.), a, 0.05)


def test_plan_required_n_large_but_representable():
    """
    Test if a small deviation with a sample size below MAX_PLANNED_N is still planned.
    """
    n = plan_required_n(_cert(0.5), _obs(1.), 1e-4, 0.05)
    assert n <= MAX_PLANNED_N
    assert TheoremABound(_cert(0.5), _obs(1.)).evaluate(n, 1e-4).raw <= 0.05


@pytest.mark.parametrize("value", [
    dict({'bound': DoeblinCorollaryBound(0.01)}),
    dict({'bound': DoeblinCorollaryBound(0.5)}),
    dict({'bound': DoeblinCorollaryBound(1.)}),
    dict({'bound': BvCorollaryBound(1, 0.5)}),
    dict({'bound': BvCorollaryBound(4, 2.)}),
    dict({'bound': BvCorollaryBound(8, 5.)}),
])
def test_corollary_bounds_monotone(rng, value):
    """
    Test if both corollary bounds are nonincreasing in n and in a on random grids.
    """
    bound = value.get('bound')
    ns = np.sort(rng.integers(1, 10 ** 6, size=20))
    grid = np.sort(rng.uniform(0., bound.window, size=20))
    for a in grid[::4]:
        raws = [bound.evaluate(n, a).raw for n in ns]
        assert all(later <= earlier for earlier, later in zip(raws, raws[1:]))
    for n in ns[::4]:
        raws = [bound.evaluate(n, a).raw for a in grid]
        assert all(later <= earlier for earlier, later in zip(raws, raws[1:]))
