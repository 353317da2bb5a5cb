# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import pytest

from markov_gap_bounds.bounds.data_types import GapCertificate, GapFamily, LemmaInput, NormFamily, \
    ObservableSpec, lemma_delta
from markov_gap_bounds.errors import DomainError


@pytest.mark.parametrize("value", [
    dict({'norm': NormFamily.L, 'family': GapFamily.HYPERCUBE_L}),
    dict({'norm': NormFamily.DL, 'family': GapFamily.HYPERCUBE_DL}),
    dict({'norm': NormFamily.W, 'family': GapFamily.HYPERCUBE_W}),
])
def test_norm_family(value):
    """
    Test if every hypercube norm maps to its certificate family.
    """
    assert value.get('norm').gap_family is value.get('family')
    assert NormFamily(value.get('norm').value) is value.get('norm')


def test_lemma_delta():
    """
    Test the gap formula (1 - theta)/(1 + C theta).
    """
    assert lemma_delta(1., 0.5) == pytest.approx(1. / 3.)
    assert lemma_delta(5., 0.) == 1.


@pytest.mark.parametrize("value", [
    dict({'c_const': 0., 'theta': 0.5}),
    dict({'c_const': -1., 'theta': 0.5}),
    dict({'c_const': 1., 'theta': 1.}),
    dict({'c_const': 1., 'theta': -0.1}),
])
def test_lemma_input_domain(value):
    """
    Test if LemmaInput rejects C <= 0 and theta outside [0, 1).
    """
    with pytest.raises(DomainError):
        LemmaInput(value.get('c_const'), value.get('theta'))


def test_certificate_consistency():
    """
    Test if a family certificate must match (1 - theta)/(1 + C theta).
    """
    cert = GapCertificate(1. / 3., GapFamily.DOEBLIN, c_const=1., theta=0.5, params={'beta': 0.5})
    assert cert.delta0 == pytest.approx(1. / 3.)
    with pytest.raises(DomainError):
        GapCertificate(0.4, GapFamily.DOEBLIN, c_const=1., theta=0.5)
    with pytest.raises(DomainError):
        GapCertificate(1. / 3., GapFamily.DOEBLIN)


@pytest.mark.parametrize("delta0", [0., -0.5, 1.5, float('nan')])
def test_certificate_domain(delta0):
    """
    Test if gaps outside (0, 1] are rejected.
    """
    with pytest.raises(DomainError):
        GapCertificate.from_delta0(delta0)


def test_certificate_from_delta0():
    """
    Test if a bare gap yields a custom certificate without (C, theta).
    """
    cert = GapCertificate.from_delta0(0.25)
    assert cert.family is GapFamily.CUSTOM
    assert cert.c_const is None
    assert cert.theta is None
    assert cert.to_dict() == {
        'delta0': 0.25, 'family': 'custom', 'c_const': None, 'theta': None, 'params': {}}


def test_observable_spec_parts():
    """
    Test if the total norm is the sum of its parts.
    """
    obs = ObservableSpec(sup_norm=1., seminorm=0.25, family='hypercube_L')
    assert obs.norm == 1.25
    assert obs.family is GapFamily.HYPERCUBE_L
    assert obs.sigma2 is None
    obs = obs.with_sigma2(0.5)
    assert obs.sigma2 == 0.5
    assert obs.norm == 1.25
    assert obs.to_dict() == {
        'norm': 1.25, 'sup_norm': 1., 'seminorm': 0.25, 'sigma2': 0.5, 'family': 'hypercube_L'}


def test_observable_spec_total_only():
    """
    Test if an observable may carry the total norm alone.
    """
    obs = ObservableSpec(norm=2.)
    assert obs.norm == 2.
    assert obs.sup_norm is None
    assert obs.seminorm is None


@pytest.mark.parametrize("kwargs", [
    dict(),
    dict({'sup_norm': 1.}),
    dict({'sup_norm': 1., 'seminorm': 1., 'norm': 3.}),
    dict({'sup_norm': -1., 'seminorm': 1.}),
    dict({'norm': 0.}),
    dict({'norm': 1., 'sigma2': -0.1}),
])
def test_observable_spec_domain(kwargs):
    """
    Test if inconsistent or out-of-range norm data is rejected.
    """
    with pytest.raises(DomainError):
        ObservableSpec(**kwargs)
